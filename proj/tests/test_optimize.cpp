#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "qbg/bell.hpp"
#include "qbg/optimize.hpp"
#include "qbg/payoffs.hpp"

using namespace qbg;

namespace {

const double kRoot2 = std::sqrt(2.0);

GameSpec random_rational_game(Rng& rng) {
  GameSpec g = benchmark_game();
  long w[4];
  long total = 0;
  for (long& v : w) {
    v = 1 + long(rng.next() % 9);
    total += v;
  }
  for (int i = 0; i < 4; ++i) g.prior[i / 2][i % 2] = Scalar::ratio(w[i], total);
  for (int ta = 0; ta < 2; ++ta)
    for (int tb = 0; tb < 2; ++tb)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          g.blocks[ta][tb].alice[a][b] = Scalar::ratio(long(rng.next() % 13) - 4, 4);
          g.blocks[ta][tb].bob[a][b] = Scalar::ratio(long(rng.next() % 13) - 4, 4);
        }
  return g;
}

bool strategy_near(const Argmax& a, const BehavioralStrategy& want) {
  const auto* s = std::get_if<BehavioralStrategy>(&a);
  if (!s) return false;
  return std::abs(s->p - want.p) < 1e-12 && std::abs(s->q - want.q) < 1e-12 &&
         std::abs(s->p_ - want.p_) < 1e-12 && std::abs(s->q_ - want.q_) < 1e-12;
}

}  // namespace

TEST_CASE("classical optimum of the benchmark game") {
  GameSpec g = benchmark_game();
  OptimizationResult r = classical_social_optimum(g, 16);
  CHECK(r.method == Method::vertex_enum);
  CHECK(r.value == 3.0);
  REQUIRE(r.exact_value);
  CHECK(*r.exact_value == 3);
  REQUIRE(r.ties.size() == 8);
  CHECK(strategy_near(r.argmax, {0, 0, 0, 0}));
  bool has_all_first = false;
  for (const auto& t : r.ties) {
    has_all_first |= strategy_near(t, {1, 1, 1, 1});
    const auto& s = std::get<BehavioralStrategy>(t);
    CHECK(payoffs_from_strategy(g, s).sum() == 3.0);
  }
  CHECK(has_all_first);
  CHECK(r.audit.evaluations > 16u);
  CHECK(r.audit.seconds >= 0.0);
}

TEST_CASE("classical optimum ties on a constant game") {
  GameSpec g = benchmark_game();
  for (int ta = 0; ta < 2; ++ta)
    for (int tb = 0; tb < 2; ++tb)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          g.blocks[ta][tb].alice[a][b] = Scalar(1);
          g.blocks[ta][tb].bob[a][b] = Scalar(1);
        }
  OptimizationResult r = classical_social_optimum(g, 4);
  CHECK(*r.exact_value == 4);
  CHECK(r.ties.size() == 16);
}

TEST_CASE("classical optimum equals the best normal-form cell sum") {
  Rng rng(61);
  for (int t = 0; t < 25; ++t) {
    GameSpec g = random_rational_game(rng);
    OptimizationResult r = classical_social_optimum(g, 16);
    NormalForm nf = normal_form(g);
    Rational best = nf.cells[0][0].sum().to_rational();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) best = std::max(best, nf.cells[i][j].sum().to_rational());
    REQUIRE(r.exact_value);
    CHECK(*r.exact_value == best);
  }
}

TEST_CASE("stationary analysis of the benchmark game") {
  StationaryAnalysis a = stationary_points(benchmark_game());
  CHECK_FALSE(a.degenerate);
  REQUIRE(a.points.size() == 1);
  const StationaryPoint& pt = a.points.front();
  CHECK(pt.s.p == 0.5);
  CHECK(pt.s.q == 0.5);
  CHECK(pt.s.p_ == 0.5);
  CHECK(pt.s.q_ == 0.5);
  CHECK(pt.welfare == 2.0);
  CHECK(pt.grad_norm <= 1e-12);
}

TEST_CASE("stationary analysis of degenerate games") {
  // Constant welfare: every strategy is stationary; centroid representative.
  GameSpec zero = benchmark_game();
  for (int ta = 0; ta < 2; ++ta)
    for (int tb = 0; tb < 2; ++tb)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          zero.blocks[ta][tb].alice[a][b] = Scalar(0);
          zero.blocks[ta][tb].bob[a][b] = Scalar(0);
        }
  StationaryAnalysis flat = stationary_points(zero);
  CHECK(flat.degenerate);
  REQUIRE_FALSE(flat.points.empty());
  CHECK(flat.points.front().s.p == 0.5);

  // welfare = p p_ / 2: gradient vanishes on the two facing edges p = p_ = 0.
  GameSpec corner = zero;
  corner.blocks[0][0].alice[0][0] = Scalar(2);
  StationaryAnalysis edge = stationary_points(corner);
  CHECK(edge.degenerate);
  REQUIRE_FALSE(edge.points.empty());
  for (const auto& pt : edge.points) CHECK(pt.grad_norm <= 1e-12);

  // welfare = p / 2: constant nonzero gradient, no stationary point at all.
  GameSpec tilt = zero;
  tilt.blocks[0][0].alice[0][0] = Scalar(2);
  tilt.blocks[0][0].alice[0][1] = Scalar(2);
  StationaryAnalysis none = stationary_points(tilt);
  CHECK_FALSE(none.degenerate);
  CHECK(none.points.empty());
}

TEST_CASE("quantum optimum of the benchmark game") {
  GameSpec g = benchmark_game();
  OptimizationResult r = quantum_social_optimum(g, bell_state());
  CHECK(r.method == Method::angle_search);
  double target = 2.0 + kRoot2;
  CHECK(r.value >= target - 1e-6);
  CHECK(r.value <= target + 1e-9);

  REQUIRE(std::holds_alternative<MeasurementSettings>(r.argmax));
  const auto& m = std::get<MeasurementSettings>(r.argmax);
  JointDistribution d = epr_distribution(bell_state(), m);
  CHECK(payoffs_from_distribution(g, d).sum() == doctest::Approx(r.value).epsilon(1e-12));
  ChshReport rep = chsh_report(d);
  CHECK(rep.delta == doctest::Approx(2.0 * kRoot2).epsilon(1e-6));
  CHECK(rep.regime == Regime::quantum);
  // The maximizing correlators are (1,1,1,-1) / sqrt(2) up to symmetry.
  for (double c : rep.corr) CHECK(std::abs(c) == doctest::Approx(kRoot2 / 2).epsilon(1e-5));
  CHECK(r.audit.evaluations > 0u);
}

TEST_CASE("quantum search on a product state cannot beat the classical bound") {
  QuantumState product({1.0, 0.0, 0.0, 0.0});
  OptimizationResult r = quantum_social_optimum(benchmark_game(), product);
  CHECK(r.value <= 3.0 + 1e-9);
  CHECK(r.value >= 3.0 - 1e-6);
}

TEST_CASE("no-signaling optimum of the benchmark game") {
  GameSpec g = benchmark_game();
  OptimizationResult r = no_signaling_social_optimum(g);
  CHECK(r.method == Method::lp);
  REQUIRE(r.exact_value);
  CHECK(*r.exact_value == 4);
  CHECK(r.value == 4.0);

  REQUIRE(r.exact_table);
  const auto& e = *r.exact_table;
  // The unique maximizer is the extremal box with perfect (anti)correlations.
  const Rational half(1, 2);
  for (int b = 0; b < 3; ++b) {
    CHECK(e[4 * b] == half);
    CHECK(e[4 * b + 1] == 0);
    CHECK(e[4 * b + 2] == 0);
    CHECK(e[4 * b + 3] == half);
  }
  CHECK(e[12] == 0);
  CHECK(e[13] == half);
  CHECK(e[14] == half);
  CHECK(e[15] == 0);

  for (const auto& s : table::block_sums(e)) CHECK(s == 1);
  for (const auto& r8 : table::no_signaling_residuals(e)) CHECK(r8 == 0);

  REQUIRE(std::holds_alternative<JointDistribution>(r.argmax));
  const auto& d = std::get<JointDistribution>(r.argmax);
  CHECK(payoffs_from_distribution(g, d).sum() == 4.0);
  CHECK(chsh_delta(d) == 4.0);
}

TEST_CASE("no-signaling optimum of the negated benchmark game") {
  GameSpec g = benchmark_game();
  for (int ta = 0; ta < 2; ++ta)
    for (int tb = 0; tb < 2; ++tb)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          g.blocks[ta][tb].alice[a][b] = -g.blocks[ta][tb].alice[a][b];
          g.blocks[ta][tb].bob[a][b] = -g.blocks[ta][tb].bob[a][b];
        }
  OptimizationResult r = no_signaling_social_optimum(g);
  REQUIRE(r.exact_value);
  CHECK(*r.exact_value == 0);
}

TEST_CASE("the three regimes nest on the benchmark game") {
  GameSpec g = benchmark_game();
  double classical = classical_social_optimum(g, 8).value;
  double quantum = quantum_social_optimum(g, bell_state()).value;
  double ns = no_signaling_social_optimum(g).value;
  CHECK(classical == 3.0);
  CHECK(quantum == doctest::Approx(2.0 + kRoot2).epsilon(1e-6));
  CHECK(ns == 4.0);
  CHECK(classical <= quantum + 1e-9);
  CHECK(quantum <= ns + 1e-9);
}

TEST_CASE("the no-signaling optimum dominates the classical one") {
  Rng rng(62);
  for (int t = 0; t < 8; ++t) {
    GameSpec g = random_rational_game(rng);
    OptimizationResult c = classical_social_optimum(g, 8);
    OptimizationResult n = no_signaling_social_optimum(g);
    REQUIRE(c.exact_value);
    REQUIRE(n.exact_value);
    CHECK(*n.exact_value >= *c.exact_value);
  }
}

TEST_CASE("optimizers are deterministic") {
  GameSpec g = benchmark_game();
  OptimizationResult a = quantum_social_optimum(g, bell_state());
  OptimizationResult b = quantum_social_optimum(g, bell_state());
  CHECK(a.value == b.value);
  CHECK(std::get<MeasurementSettings>(a.argmax).a1 == std::get<MeasurementSettings>(b.argmax).a1);
  CHECK(a.audit.evaluations == b.audit.evaluations);

  OptimizationResult c1 = classical_social_optimum(g, 16);
  OptimizationResult c2 = classical_social_optimum(g, 16);
  CHECK(c1.value == c2.value);
  CHECK(c1.ties.size() == c2.ties.size());
}
