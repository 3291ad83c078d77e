#pragma once

#include <string>

#include "json.hpp"
#include "qbg/bell.hpp"
#include "qbg/distribution.hpp"
#include "qbg/game.hpp"
#include "qbg/optimize.hpp"
#include "qbg/payoffs.hpp"
#include "qbg/quantum.hpp"
#include "qbg/verify.hpp"

namespace qbg {

using Json = nlohmann::json;

// Scalars serialize as JSON integers when possible, as "n/d" strings for
// non-integer exact values, and as plain floats for inexact ones; parsing
// inverts this exactly, so files round-trip without precision loss.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const GameSpec& g);
GameSpec game_from_json(const Json& j);

Json to_json(const JointDistribution& d);
JointDistribution distribution_from_json(const Json& j, double tol = kFeasTol);

Json to_json(const BehavioralStrategy& s);
Json to_json(const MeasurementSettings& m);
Json to_json(const PayoffProfile& p);
Json to_json(const ChshReport& r);
Json to_json(const NormalForm& nf, const GameSpec& g);
Json to_json(const OptimizationResult& r);
Json to_json(const VerifyReport& r);

// File helpers; wrap I/O and parse failures in ValidationError.
Json load_json(const std::string& path);
GameSpec load_game(const std::string& path);
JointDistribution load_distribution(const std::string& path, double tol = kFeasTol);

}  // namespace qbg
