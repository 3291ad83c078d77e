#include "qbg/optimize.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qbg/errors.hpp"
#include "qbg/game_eval.hpp"
#include "qbg/payoffs.hpp"
#include "qbg/simplex.hpp"

namespace qbg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void require_valid_game(const GameSpec& g) {
  if (auto issues = validate(g); !issues.empty())
    throw ValidationError("invalid game: " + issues.front());
}

template <class T>
T welfare_at(const GameEval<T>& ev, const T& p, const T& q, const T& p_, const T& q_) {
  auto pi = type_payoffs(ev, p, q, p_, q_);
  return pi[0] + pi[1] + pi[2] + pi[3];
}

// Multilinear welfare model
//   w = c0 + c1 p + c2 q + c3 p_ + c4 q_ + c5 p p_ + c6 p q_ + c7 q p_ + c8 q q_
// (no pq, p_q_ or higher terms arise: each per-type payoff is bilinear in one
// Alice coordinate and one Bob coordinate). Extracted by exact probing.
struct WelfareModel {
  std::array<Rational, 9> c;
};

WelfareModel welfare_model(const GameSpec& g) {
  auto ev = make_game_eval<Rational>(g);
  const Rational z(0), o(1);
  auto w = [&](const Rational& p, const Rational& q, const Rational& p_, const Rational& q_) {
    return welfare_at(ev, p, q, p_, q_);
  };
  WelfareModel m;
  m.c[0] = w(z, z, z, z);
  m.c[1] = w(o, z, z, z) - m.c[0];
  m.c[2] = w(z, o, z, z) - m.c[0];
  m.c[3] = w(z, z, o, z) - m.c[0];
  m.c[4] = w(z, z, z, o) - m.c[0];
  m.c[5] = w(o, z, o, z) - m.c[0] - m.c[1] - m.c[3];
  m.c[6] = w(o, z, z, o) - m.c[0] - m.c[1] - m.c[4];
  m.c[7] = w(z, o, o, z) - m.c[0] - m.c[2] - m.c[3];
  m.c[8] = w(z, o, z, o) - m.c[0] - m.c[2] - m.c[4];
  Rational check = m.c[0] + m.c[1] + m.c[2] + m.c[3] + m.c[4] + m.c[5] + m.c[6] + m.c[7] + m.c[8];
  if (check != w(o, o, o, o))
    throw std::logic_error("welfare is not multilinear of the expected shape");
  return m;
}

std::array<Rational, 4> model_gradient(const WelfareModel& m, const Rational& p, const Rational& q,
                                       const Rational& p_, const Rational& q_) {
  return {m.c[1] + m.c[5] * p_ + m.c[6] * q_, m.c[2] + m.c[7] * p_ + m.c[8] * q_,
          m.c[3] + m.c[5] * p + m.c[7] * q, m.c[4] + m.c[6] * p + m.c[8] * q};
}

// Solution of one 2x2 linear system a.(x,y) = rhs restricted to [0,1]^2.
struct SideSolution {
  enum Kind { empty, point, segment, plane } kind = empty;
  Rational x, y;  // representative (segment midpoint / square center)
};

bool in_unit(const Rational& v) { return v >= 0 && v <= 1; }

// Midpoint of {t in [0,1] : lo <= t <= hi}; false when the slice is empty.
bool clip_interval(Rational lo, Rational hi, Rational& mid) {
  if (lo < 0) lo = 0;
  if (hi > 1) hi = 1;
  if (lo > hi) return false;
  mid = (lo + hi) / 2;
  return true;
}

SideSolution solve_side(const Rational& a11, const Rational& a12, const Rational& r1,
                        const Rational& a21, const Rational& a22, const Rational& r2) {
  SideSolution s;
  Rational det = a11 * a22 - a12 * a21;
  if (det != 0) {
    s.x = (r1 * a22 - r2 * a12) / det;
    s.y = (a11 * r2 - a21 * r1) / det;
    s.kind = (in_unit(s.x) && in_unit(s.y)) ? SideSolution::point : SideSolution::empty;
    return s;
  }
  if (a11 == 0 && a12 == 0 && a21 == 0 && a22 == 0) {
    if (r1 == 0 && r2 == 0) {
      s.kind = SideSolution::plane;
      s.x = s.y = Rational(1, 2);
    }
    return s;
  }
  // Rank one: the two equations must be proportional, including the rhs.
  bool first_nonzero = a11 != 0 || a12 != 0;
  Rational a = first_nonzero ? a11 : a21, b = first_nonzero ? a12 : a22;
  Rational r = first_nonzero ? r1 : r2;
  Rational oa = first_nonzero ? a21 : a11, ob = first_nonzero ? a22 : a12;
  Rational orr = first_nonzero ? r2 : r1;
  if (a * orr - oa * r != 0 || b * orr - ob * r != 0) return s;  // inconsistent
  // Line a x + b y = r intersected with the unit square.
  if (b == 0) {
    s.x = r / a;
    if (!in_unit(s.x)) return s;
    s.y = Rational(1, 2);
  } else if (a == 0) {
    s.y = r / b;
    if (!in_unit(s.y)) return s;
    s.x = Rational(1, 2);
  } else {
    // y(x) in [0,1]  <=>  x between (r-b)/a and r/a (order depends on signs).
    Rational x0 = (r - b) / a, x1 = r / a;
    if (x0 > x1) std::swap(x0, x1);
    Rational mid;
    if (!clip_interval(x0, x1, mid)) return s;
    s.x = mid;
    s.y = (r - a * mid) / b;
  }
  s.kind = SideSolution::segment;
  return s;
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::vertex_enum: return "vertex_enum";
    case Method::stationary: return "stationary";
    case Method::grid: return "grid";
    case Method::angle_search: return "angle_search";
    default: return "lp";
  }
}

OptimizationResult classical_social_optimum(const GameSpec& g, int grid_n) {
  require_valid_game(g);
  if (grid_n < 1) throw ValidationError("grid resolution must be at least 1");
  auto t0 = Clock::now();

  OptimizationResult res;
  res.method = Method::vertex_enum;

  // Exact sweep of the 16 pure vertices, most significant coordinate p.
  auto evr = make_game_eval<Rational>(g);
  Rational best;
  std::vector<BehavioralStrategy> ties;
  for (int v = 0; v < 16; ++v) {
    int p = (v >> 3) & 1, q = (v >> 2) & 1, p_ = (v >> 1) & 1, q_ = v & 1;
    Rational w = welfare_at(evr, Rational(p), Rational(q), Rational(p_), Rational(q_));
    ++res.audit.evaluations;
    if (v == 0 || w > best) {
      best = w;
      ties.clear();
    }
    if (w == best) {
      BehavioralStrategy s{double(p), double(q), double(p_), double(q_)};
      if (static_cast<int>(ties.size()) < kMaxTies) ties.push_back(s);
    }
  }

  // Dense-grid cross-check of the vertex theorem on this game.
  auto ev = make_game_eval<double>(g);
  double grid_best = -std::numeric_limits<double>::infinity();
  const double step = 1.0 / grid_n;
  for (int i = 0; i <= grid_n; ++i)
    for (int j = 0; j <= grid_n; ++j)
      for (int k = 0; k <= grid_n; ++k)
        for (int l = 0; l <= grid_n; ++l) {
          double w = welfare_at(ev, i * step, j * step, k * step, l * step);
          if (w > grid_best) grid_best = w;
        }
  res.audit.evaluations += std::uint64_t(grid_n + 1) * (grid_n + 1) * (grid_n + 1) * (grid_n + 1);
  double best_d = rational_to_double(best);
  if (grid_best > best_d + 1e-9)
    throw std::logic_error("strategy grid exceeded the vertex optimum");

  res.value = best_d;
  res.exact_value = best;
  res.argmax = ties.front();
  for (const auto& s : ties) res.ties.emplace_back(s);
  res.audit.seconds = seconds_since(t0);
  return res;
}

StationaryAnalysis stationary_points(const GameSpec& g) {
  require_valid_game(g);
  auto m = welfare_model(g);
  const auto& c = m.c;

  // grad_p = c1 + c5 p_ + c6 q_ = 0 and grad_q = c2 + c7 p_ + c8 q_ = 0 pin
  // Bob's side; grad_p_ / grad_q_ pin Alice's. The two systems share the same
  // matrix up to transposition and decouple completely.
  SideSolution bob = solve_side(c[5], c[6], -c[1], c[7], c[8], -c[2]);
  SideSolution alice = solve_side(c[5], c[7], -c[3], c[6], c[8], -c[4]);

  StationaryAnalysis out;
  if (alice.kind == SideSolution::empty || bob.kind == SideSolution::empty) return out;
  out.degenerate = alice.kind != SideSolution::point || bob.kind != SideSolution::point;

  auto push_point = [&](const Rational& p, const Rational& q, const Rational& p_,
                        const Rational& q_) {
    auto ev = make_game_eval<Rational>(g);
    BehavioralStrategy s{rational_to_double(p), rational_to_double(q), rational_to_double(p_),
                         rational_to_double(q_)};
    double w = rational_to_double(welfare_at(ev, p, q, p_, q_));
    auto grad = model_gradient(m, p, q, p_, q_);
    double gn = 0.0;
    for (const auto& gcomp : grad) {
      double gd = rational_to_double(gcomp);
      gn += gd * gd;
    }
    out.points.push_back({s, w, std::sqrt(gn)});
  };
  push_point(alice.x, alice.y, bob.x, bob.y);

  // Residual scan: every grid strategy with (double) gradient norm <= 1e-10
  // must be exactly stationary and covered by the solution set above.
  double cd[9];
  for (int i = 0; i < 9; ++i) cd[i] = rational_to_double(c[i]);
  const int n = 32;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l) {
          double p = double(i) / n, q = double(j) / n, p_ = double(k) / n, q_ = double(l) / n;
          double g1 = cd[1] + cd[5] * p_ + cd[6] * q_;
          double g2 = cd[2] + cd[7] * p_ + cd[8] * q_;
          double g3 = cd[3] + cd[5] * p + cd[7] * q;
          double g4 = cd[4] + cd[6] * p + cd[8] * q;
          if (g1 * g1 + g2 * g2 + g3 * g3 + g4 * g4 > 1e-20) continue;
          if (out.degenerate) continue;  // continuum already reported
          Rational rp(i, n), rq(j, n), rp_(k, n), rq_(l, n);
          auto grad = model_gradient(m, rp, rq, rp_, rq_);
          bool exact_zero =
              grad[0] == 0 && grad[1] == 0 && grad[2] == 0 && grad[3] == 0;
          if (!exact_zero) continue;
          const auto& known = out.points.front().s;
          double dist = std::abs(known.p - rational_to_double(rp)) +
                        std::abs(known.q - rational_to_double(rq)) +
                        std::abs(known.p_ - rational_to_double(rp_)) +
                        std::abs(known.q_ - rational_to_double(rq_));
          if (dist > 1e-9) push_point(rp, rq, rp_, rq_);
        }
  return out;
}

OptimizationResult quantum_social_optimum(const GameSpec& g, const QuantumState& psi,
                                          const AngleSearchOptions& opt) {
  require_valid_game(g);
  if (opt.grid_per_angle < 2) throw ValidationError("angle grid must have at least 2 points");
  auto t0 = Clock::now();

  auto w = welfare_weights(g);
  OptimizationResult res;
  res.method = Method::angle_search;

  auto value_at = [&](const MeasurementSettings& m) {
    ++res.audit.evaluations;
    auto d = epr_distribution(psi, m);
    double acc = 0.0;
    for (int j = 0; j < 16; ++j) acc += w[j] * d[j];
    return acc;
  };

  const double two_pi = 2.0 * std::acos(-1.0);
  const int n = opt.grid_per_angle;
  const double h = two_pi / n;

  // Coarse scan; remember every grid value so ties can be seeded afterwards.
  std::vector<double> values(std::size_t(n) * n * n * n);
  double grid_best = -std::numeric_limits<double>::infinity();
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l, ++idx) {
          double v = value_at({i * h, j * h, k * h, l * h});
          values[idx] = v;
          if (v > grid_best) grid_best = v;
        }

  std::vector<MeasurementSettings> seeds;
  for (idx = 0; idx < values.size() && static_cast<int>(seeds.size()) < kMaxTies; ++idx) {
    if (values[idx] < grid_best - 1e-6) continue;
    int rem = static_cast<int>(idx);
    int l = rem % n;
    rem /= n;
    int k = rem % n;
    rem /= n;
    int j = rem % n;
    int i = rem / n;
    seeds.push_back({i * h, j * h, k * h, l * h});
  }

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto golden = [&](double lo, double hi, auto&& f1d) {
    double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
    double f1 = f1d(x1), f2 = f1d(x2);
    while (hi - lo > opt.angle_tol) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + invphi * (hi - lo);
        f2 = f1d(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - invphi * (hi - lo);
        f1 = f1d(x1);
      }
    }
    return (lo + hi) / 2.0;
  };

  auto refine = [&](MeasurementSettings m) {
    double cur = value_at(m);
    double span = h;
    int sweeps = 0;
    while (span > opt.angle_tol && sweeps++ < 200) {
      bool improved = false;
      double* coord[4] = {&m.a1, &m.a2, &m.b1, &m.b2};
      for (int ci = 0; ci < 4; ++ci) {
        double center = *coord[ci];
        double best_x = golden(center - span, center + span, [&](double x) {
          *coord[ci] = x;
          double v = value_at(m);
          *coord[ci] = center;
          return v;
        });
        *coord[ci] = best_x;
        double v = value_at(m);
        if (v >= cur) {
          if (v > cur + 1e-13) improved = true;
          cur = v;
        } else {
          *coord[ci] = center;
        }
      }
      if (!improved) span *= 0.25;
    }
    return std::make_pair(cur, m);
  };

  double best = -std::numeric_limits<double>::infinity();
  MeasurementSettings best_m{};
  std::vector<std::pair<double, MeasurementSettings>> refined;
  refined.reserve(seeds.size());
  for (const auto& seed : seeds) {
    auto r = refine(seed);
    refined.push_back(r);
    if (r.first > best) {
      best = r.first;
      best_m = r.second;
    }
  }

  res.value = best;
  res.argmax = best_m;
  res.ties.emplace_back(best_m);
  for (const auto& [v, m] : refined) {
    if (v < best - opt.tie_gap) continue;
    bool dup = false;
    for (const auto& t : res.ties) {
      const auto& tm = std::get<MeasurementSettings>(t);
      if (std::abs(tm.a1 - m.a1) < 1e-4 && std::abs(tm.a2 - m.a2) < 1e-4 &&
          std::abs(tm.b1 - m.b1) < 1e-4 && std::abs(tm.b2 - m.b2) < 1e-4)
        dup = true;
    }
    if (!dup && static_cast<int>(res.ties.size()) < kMaxTies) res.ties.emplace_back(m);
  }
  res.audit.seconds = seconds_since(t0);
  return res;
}

OptimizationResult no_signaling_social_optimum(const GameSpec& g) {
  require_valid_game(g);
  auto t0 = Clock::now();

  // Constraint matrix from the table_math definitions themselves: apply the
  // block-sum and residual maps to each unit table.
  std::vector<std::vector<Rational>> A(12, std::vector<Rational>(16, Rational(0)));
  std::vector<Rational> b(12, Rational(0));
  for (int r = 0; r < 4; ++r) b[r] = 1;
  for (int j = 0; j < 16; ++j) {
    std::array<Rational, 16> unit{};
    unit.fill(Rational(0));
    unit[j] = 1;
    auto sums = table::block_sums(unit);
    auto resid = table::no_signaling_residuals(unit);
    for (int r = 0; r < 4; ++r) A[r][j] = sums[r];
    for (int r = 0; r < 8; ++r) A[4 + r][j] = resid[r];
  }

  auto c = welfare_weights_exact(g);
  LpSolution sol = simplex_max(A, b, std::vector<Rational>(c.begin(), c.end()));

  OptimizationResult res;
  res.method = Method::lp;
  res.exact_value = sol.value;
  res.value = rational_to_double(sol.value);
  std::array<Rational, 16> cert{};
  std::array<double, 16> xd{};
  for (int j = 0; j < 16; ++j) {
    cert[j] = sol.x[j];
    xd[j] = rational_to_double(sol.x[j]);
  }
  res.exact_table = cert;
  res.argmax = JointDistribution(xd);
  res.ties.push_back(res.argmax);
  res.audit.evaluations = static_cast<std::uint64_t>(sol.pivots);
  res.audit.seconds = seconds_since(t0);
  return res;
}

}  // namespace qbg
