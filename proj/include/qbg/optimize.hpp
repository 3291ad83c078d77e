#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "qbg/distribution.hpp"
#include "qbg/game.hpp"
#include "qbg/quantum.hpp"
#include "qbg/rational.hpp"

namespace qbg {

enum class Method { vertex_enum, stationary, grid, angle_search, lp };
const char* to_string(Method m);

struct Audit {
  std::uint64_t evaluations = 0;
  double seconds = 0.0;
};

// An optimizer argument: a strategy profile (classical), measurement angles
// (quantum), or a raw joint table (no-signaling).
using Argmax = std::variant<BehavioralStrategy, MeasurementSettings, JointDistribution>;

// Tie lists are capped here to keep results bounded on degenerate games.
inline constexpr int kMaxTies = 32;

struct OptimizationResult {
  double value = 0.0;
  Argmax argmax;
  Method method = Method::vertex_enum;
  std::vector<Argmax> ties;  // every optimizer found (argmax first), capped
  Audit audit;
  // Filled by the exact methods (vertex enumeration, LP).
  std::optional<Rational> exact_value;
  std::optional<std::array<Rational, 16>> exact_table;  // LP certificate
};

// Maximum welfare over behavioral strategies. Welfare is multilinear in the
// four strategy coordinates, so the optimum sits on a pure vertex; all 16 are
// evaluated exactly and the result is cross-checked against a dense strategy
// grid with step 1/grid_n, which must not exceed the vertex optimum by more
// than 1e-9 (a violation throws logic_error).
OptimizationResult classical_social_optimum(const GameSpec& g, int grid_n = 64);

struct StationaryPoint {
  BehavioralStrategy s;
  double welfare;
  double grad_norm;
};

// Zero-gradient points of the welfare over the strategy cube [0,1]^4, from
// exact case analysis of the (decoupled) 2x2 stationarity systems plus a
// dense residual scan as confirmation. When the solution set is a continuum,
// `degenerate` is set and `points` holds the midpoint representative of the
// feasible slab (the cube centroid when every strategy is stationary).
struct StationaryAnalysis {
  std::vector<StationaryPoint> points;
  bool degenerate = false;
};

StationaryAnalysis stationary_points(const GameSpec& g);

struct AngleSearchOptions {
  int grid_per_angle = 24;  // coarse grid resolution per angle
  double angle_tol = 1e-8;  // refinement bracket floor
  double tie_gap = 1e-9;    // values within this of the best count as ties
};

// Maximum welfare over measurement angles for a fixed shared state: coarse
// 4-d angle grid, then coordinate-descent golden-section refinement of the
// best grid points. Deterministic for fixed options.
OptimizationResult quantum_social_optimum(const GameSpec& g, const QuantumState& psi,
                                          const AngleSearchOptions& opt = {});

// Maximum welfare over all normalized non-signaling tables: an exact rational
// LP over the 16 entries subject to the 4 block normalizations and the 8
// marginal-consistency equalities. exact_table carries the optimal table as
// a certificate.
OptimizationResult no_signaling_social_optimum(const GameSpec& g);

}  // namespace qbg
