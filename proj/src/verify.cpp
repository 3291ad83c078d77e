#include "qbg/verify.hpp"

#include <cmath>
#include <sstream>

#include "qbg/bell.hpp"
#include "qbg/optimize.hpp"
#include "qbg/payoffs.hpp"
#include "qbg/quantum.hpp"

namespace qbg {

namespace {

// Reference 4x4 pure-strategy table, stored as twice the payoff so every
// entry is a small integer. Cell order (a1, a2, b1, b2); rows/columns ordered
// (B,B), (B,S), (S,B), (S,S).
constexpr int kReferenceTableTwice[4][4][4] = {
    {{2, 1, 2, 1}, {1, 2, 2, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}},
    {{2, 1, 1, 2}, {1, 0, 1, 0}, {1, 2, 1, 2}, {0, 1, 1, 0}},
    {{0, 1, 1, 0}, {1, 2, 1, 2}, {1, 0, 1, 0}, {2, 1, 1, 2}},
    {{0, 1, 0, 1}, {1, 0, 0, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}},
};

// Welfare monomial coefficients in the order
// (1, p, q, p_, q_, p*p_, p*q_, q*p_, q*q_). The reference closed form reads
// 2q_(p-q) + 2p_(p+q-1/2) - 2p + 3, i.e. coefficient -1 on p_.
constexpr double kReferenceWelfareCoeff[9] = {3, -2, 0, -1, 0, 2, 2, 2, -2};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

double welfare_of(const GameSpec& g, const BehavioralStrategy& s) {
  return payoffs_from_strategy(g, s).sum();
}

}  // namespace

const char* to_string(ClaimStatus s) {
  return s == ClaimStatus::reproduced ? "reproduced" : "discrepant";
}

int VerifyReport::reproduced() const {
  int n = 0;
  for (const auto& c : claims) n += c.status == ClaimStatus::reproduced;
  return n;
}

int VerifyReport::discrepant() const {
  int n = 0;
  for (const auto& c : claims) n += c.status == ClaimStatus::discrepant;
  return n;
}

VerifyReport verify_report(const GameSpec& g) {
  VerifyReport rep;
  const double sqrt2 = std::sqrt(2.0);

  // 1. Pure-strategy normal form.
  {
    NormalForm nf = normal_form(g);
    int mismatches = 0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const auto& cell = nf.cells[r][c];
        const Scalar* got[4] = {&cell.a1, &cell.a2, &cell.b1, &cell.b2};
        for (int t = 0; t < 4; ++t)
          if (*got[t] != Scalar::ratio(kReferenceTableTwice[r][c][t], 2)) ++mismatches;
      }
    rep.claims.push_back(
        {"normal-form-table", "pure-strategy payoff table matches the reference 4x4 table",
         mismatches == 0 ? ClaimStatus::reproduced : ClaimStatus::discrepant,
         mismatches == 0 ? "all 64 entries equal" : std::to_string(mismatches) + " entries differ",
         "reference table", "exact rational comparison of all 16 cells"});
  }

  // 2. Edge welfare at the all-(S,S) profile.
  {
    double w = welfare_of(g, {0, 0, 0, 0});
    rep.claims.push_back({"edge-welfare-ss", "welfare at the pure profile (S,S);(S,S) equals 3",
                          w == 3.0 ? ClaimStatus::reproduced : ClaimStatus::discrepant, fmt(w), "3",
                          "matches the reference table cell (S,S):(S,S) = 1 + 1/2 + 1 + 1/2"});
  }

  // 3. Edge welfare at the all-(B,B) profile: the reference reports 4, but
  // its own table cell sums to 3.
  {
    double w = welfare_of(g, {1, 1, 1, 1});
    rep.claims.push_back(
        {"edge-welfare-bb", "welfare at the pure profile (B,B);(B,B) equals 4",
         w == 4.0 ? ClaimStatus::reproduced : ClaimStatus::discrepant, fmt(w), "4",
         "computed welfare is " + fmt(w) + ", matching the reference table cell "
         "(B,B):(B,B) = 1 + 1/2 + 1 + 1/2; the reported 4 is consistent only with the "
         "closed form audited by claim welfare-closed-form"});
  }

  // 4. Closed-form welfare coefficients. Probe the multilinear welfare at
  // 0/1 vertices (exact in double arithmetic) and compare monomial by
  // monomial against the reference closed form.
  {
    auto w = [&](double p, double q, double p_, double q_) {
      return welfare_of(g, {p, q, p_, q_});
    };
    double c[9];
    c[0] = w(0, 0, 0, 0);
    c[1] = w(1, 0, 0, 0) - c[0];
    c[2] = w(0, 1, 0, 0) - c[0];
    c[3] = w(0, 0, 1, 0) - c[0];
    c[4] = w(0, 0, 0, 1) - c[0];
    c[5] = w(1, 0, 1, 0) - c[0] - c[1] - c[3];
    c[6] = w(1, 0, 0, 1) - c[0] - c[1] - c[4];
    c[7] = w(0, 1, 1, 0) - c[0] - c[2] - c[3];
    c[8] = w(0, 1, 0, 1) - c[0] - c[2] - c[4];
    static const char* names[9] = {"1", "p", "q", "p_", "q_", "p*p_", "p*q_", "q*p_", "q*q_"};
    std::string diff;
    for (int i = 0; i < 9; ++i)
      if (c[i] != kReferenceWelfareCoeff[i]) {
        if (!diff.empty()) diff += ", ";
        diff += std::string(names[i]) + ": computed " + fmt(c[i]) + " vs reference " +
                fmt(kReferenceWelfareCoeff[i]);
      }
    rep.claims.push_back(
        {"welfare-closed-form",
         "welfare equals the reference closed form 2q_(p-q) + 2p_(p+q-1/2) - 2p + 3",
         diff.empty() ? ClaimStatus::reproduced : ClaimStatus::discrepant,
         diff.empty() ? "all coefficients equal" : diff, "coefficient -1 on p_ (from p+q-1/2)",
         "computed closed form is 2q_(p-q) + 2p_(p+q-1) - 2p + 3; at (p,q,p_,q_) = (0,0,1,0) "
         "the reference form gives 2 while the welfare (reference table cell (S,S):(B,S) "
         "summed) is 1"});
  }

  // 5. Stationary point of the welfare.
  {
    auto st = stationary_points(g);
    bool unique_half = !st.degenerate && st.points.size() == 1;
    BehavioralStrategy sp{0.5, 0.5, 0.5, 0.5};
    if (unique_half) {
      const auto& s = st.points.front().s;
      unique_half = s.p == 0.5 && s.q == 0.5 && s.p_ == 0.5 && s.q_ == 0.5 &&
                    st.points.front().welfare == 2.0;
      sp = s;
    }
    // Reference point: gradient component in p is w(1,.) - w(0,.) by
    // multilinearity.
    double ref_w = welfare_of(g, {0.5, 0.5, 0.25, 0.25});
    double ref_grad_p = welfare_of(g, {1, 0.5, 0.25, 0.25}) - welfare_of(g, {0, 0.5, 0.25, 0.25});
    bool ref_ok = ref_w == 2.5 && ref_grad_p == 0.0;
    rep.claims.push_back(
        {"stationary-point",
         "interior stationary point at (1/2,1/2);(1/4,1/4) with welfare 5/2",
         ref_ok ? ClaimStatus::reproduced : ClaimStatus::discrepant,
         unique_half ? "unique stationary point (1/2,1/2);(1/2,1/2), welfare 2"
                     : "stationary analysis differs from (1/2,1/2);(1/2,1/2)",
         "(1/2,1/2);(1/4,1/4), welfare 5/2",
         "at the reference point the welfare is " + fmt(ref_w) +
             " and the welfare gradient in p is " + fmt(ref_grad_p) +
             ", so it is neither stationary nor of value 5/2; grad at " +
             "(1/2,1/2);(1/2,1/2) vanishes with welfare " +
             fmt(welfare_of(g, sp))});
  }

  // 6. Welfare-CHSH identity w = delta/2 + 2 on non-signaling tables.
  {
    Rng rng(0);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
      JointDistribution d = sample_no_signaling(rng);
      worst = std::max(worst, std::abs(welfare_delta_residual(g, d)));
    }
    for (int i = 0; i < 2000; ++i) {
      JointDistribution d = from_strategy(sample_strategy(rng));
      worst = std::max(worst, std::abs(welfare_delta_residual(g, d)));
    }
    rep.claims.push_back(
        {"welfare-chsh-identity", "welfare = delta/2 + 2 on normalized non-signaling tables",
         worst <= 1e-12 ? ClaimStatus::reproduced : ClaimStatus::discrepant,
         "max |residual| = " + fmt(worst) + " over 4000 seeded tables", "identity holds",
         "2000 non-signaling samples plus 2000 factorizable tables, seed 0"});
  }

  // 7. Classical CHSH bound |delta| <= 2 for factorizable tables.
  {
    Rng rng(1);
    double worst = 0.0;
    for (int i = 0; i < 20000; ++i)
      worst = std::max(worst, std::abs(chsh_delta(from_strategy(sample_strategy(rng)))));
    bool vertices_ok = true;
    for (int v = 0; v < 16; ++v) {
      BehavioralStrategy s{double((v >> 3) & 1), double((v >> 2) & 1), double((v >> 1) & 1),
                           double(v & 1)};
      if (std::abs(chsh_delta(from_strategy(s))) > 2.0) vertices_ok = false;
    }
    bool ok = vertices_ok && worst <= 2.0 + 1e-12;
    rep.claims.push_back({"classical-chsh-bound", "factorizable tables satisfy |delta| <= 2",
                          ok ? ClaimStatus::reproduced : ClaimStatus::discrepant,
                          "max |delta| = " + fmt(worst) + " over 20000 strategies; all 16 pure "
                          "vertices within the bound",
                          "|delta| <= 2", "seed 1"});
  }

  // 8. Quantum CHSH bound |delta| <= 2*sqrt(2).
  {
    Rng rng(2);
    double worst = 0.0;
    for (int i = 0; i < 5000; ++i) {
      QuantumState psi = random_state(rng);
      MeasurementSettings ms = random_settings(rng);
      worst = std::max(worst, std::abs(chsh_delta(epr_distribution(psi, ms))));
    }
    double canonical = chsh_delta(epr_distribution(bell_state(), canonical_settings()));
    bool ok = worst <= 2.0 * sqrt2 + 1e-9 && std::abs(canonical - 2.0 * sqrt2) <= 1e-12;
    rep.claims.push_back(
        {"quantum-chsh-bound",
         "measurement tables satisfy |delta| <= 2*sqrt(2), attained at the canonical angles",
         ok ? ClaimStatus::reproduced : ClaimStatus::discrepant,
         "max |delta| = " + fmt(worst) + " over 5000 random states/settings; canonical angles "
         "give " + fmt(canonical),
         "2*sqrt(2) = " + fmt(2.0 * sqrt2), "seed 2"});
  }

  // 9. Quantum social optimum 2 + sqrt(2).
  {
    auto opt = quantum_social_optimum(g, bell_state());
    double target = 2.0 + sqrt2;
    bool ok = std::abs(opt.value - target) <= 1e-6;
    double delta = chsh_delta(epr_distribution(bell_state(),
                                               std::get<MeasurementSettings>(opt.argmax)));
    rep.claims.push_back(
        {"quantum-optimum",
         "maximal welfare over measurement angles with the entangled state is 2 + sqrt(2)",
         ok ? ClaimStatus::reproduced : ClaimStatus::discrepant,
         fmt(opt.value) + " at delta = " + fmt(delta), "2 + sqrt(2) = " + fmt(target),
         "angle-grid search plus golden-section refinement; matches delta/2 + 2 at "
         "delta = 2*sqrt(2)"});
  }

  rep.notes.push_back(
      "reference welfare range for the local regime is stated as [2, 3]; the identity "
      "w = delta/2 + 2 with delta in [-2, 2] gives [1, 3], and the pure profile "
      "(B,B);(S,S) attains welfare 1. Upper bound 3 reproduced, lower bound differs.");
  rep.notes.push_back(
      "reference welfare range for the quantum regime is stated as [2, 2 + sqrt(2)]; the "
      "identity gives [2 - sqrt(2), 2 + sqrt(2)], and the canonical angles with both of "
      "Bob's directions rotated by pi attain welfare 2 - sqrt(2) (delta = -2*sqrt(2)). "
      "Upper bound reproduced, lower bound differs.");
  return rep;
}

}  // namespace qbg
