#pragma once

#include <string>
#include <vector>

#include "qbg/game.hpp"

namespace qbg {

enum class ClaimStatus { reproduced, discrepant };

const char* to_string(ClaimStatus s);

// One audited reference claim. `computed` is what this library obtains,
// `reference` the published value it is checked against; `detail` explains
// the evidence (and, for discrepant claims, the adjudicating cross-check).
struct Claim {
  std::string id;
  std::string description;
  ClaimStatus status;
  std::string computed;
  std::string reference;
  std::string detail;
};

struct VerifyReport {
  std::vector<Claim> claims;
  std::vector<std::string> notes;  // informational remarks, not pass/fail
  int reproduced() const;
  int discrepant() const;
};

// Recomputes every audited reference value for the given game (the benchmark
// game is the one the reference values describe) and reports which ones
// reproduce. Deterministic: sampling-based checks run on fixed seeds.
VerifyReport verify_report(const GameSpec& g);

}  // namespace qbg
