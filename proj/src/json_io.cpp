#include "qbg/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>

#include "qbg/errors.hpp"

namespace qbg {

namespace {

const char* kBlockKeys[2][2] = {{"A1B1", "A1B2"}, {"A2B1", "A2B2"}};

std::array<std::array<Scalar, 2>, 2> matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw ValidationError("expected a 2x2 matrix");
  std::array<std::array<Scalar, 2>, 2> m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m[r][c] = scalar_from_json(j[r][c]);
  return m;
}

Json matrix_to_json(const std::array<std::array<Scalar, 2>, 2>& m) {
  Json j = Json::array();
  for (int r = 0; r < 2; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 2; ++c) row.push_back(scalar_to_json(m[r][c]));
    j.push_back(row);
  }
  return j;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (!s.exact()) return s.to_double();
  Rational r = s.to_rational();
  if (denominator(r) == 1) {
    const auto& num = numerator(r);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(num);
  }
  return rational_to_string(r);
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(Rational(j.get<std::int64_t>()));
  if (j.is_number_float()) return Scalar::real(j.get<double>());
  if (j.is_string()) {
    if (auto r = parse_rational(j.get<std::string>())) return Scalar(*r);
    throw ValidationError("cannot parse \"" + j.get<std::string>() + "\" as a rational");
  }
  throw ValidationError("expected a number or rational string");
}

Json to_json(const GameSpec& g) {
  Json j;
  j["actions"] = g.actions;
  j["prior"] = matrix_to_json(g.prior);
  Json blocks;
  for (int at = 0; at < 2; ++at)
    for (int bt = 0; bt < 2; ++bt)
      blocks[kBlockKeys[at][bt]] = {{"alice", matrix_to_json(g.blocks[at][bt].alice)},
                                    {"bob", matrix_to_json(g.blocks[at][bt].bob)}};
  j["blocks"] = blocks;
  return j;
}

GameSpec game_from_json(const Json& j) {
  GameSpec g;
  if (j.contains("actions")) {
    if (!j["actions"].is_array() || j["actions"].size() != 2)
      throw ValidationError("actions must be an array of two labels");
    g.actions = {j["actions"][0].get<std::string>(), j["actions"][1].get<std::string>()};
  }
  if (!j.contains("prior") || !j.contains("blocks"))
    throw ValidationError("game file needs 'prior' and 'blocks'");
  g.prior = matrix_from_json(j["prior"]);
  for (int at = 0; at < 2; ++at)
    for (int bt = 0; bt < 2; ++bt) {
      const char* key = kBlockKeys[at][bt];
      if (!j["blocks"].contains(key))
        throw ValidationError(std::string("game file is missing block ") + key);
      const Json& blk = j["blocks"][key];
      if (!blk.contains("alice") || !blk.contains("bob"))
        throw ValidationError(std::string("block ") + key + " needs 'alice' and 'bob'");
      g.blocks[at][bt].alice = matrix_from_json(blk["alice"]);
      g.blocks[at][bt].bob = matrix_from_json(blk["bob"]);
    }
  return g;
}

Json to_json(const JointDistribution& d) {
  return Json{{"eps", d.values()}};
}

JointDistribution distribution_from_json(const Json& j, double tol) {
  if (!j.contains("eps") || !j["eps"].is_array() || j["eps"].size() != 16)
    throw ValidationError("distribution file needs an 'eps' array of 16 entries");
  std::array<double, 16> eps{};
  for (int i = 0; i < 16; ++i) {
    const Json& v = j["eps"][i];
    if (v.is_string()) {
      auto r = parse_rational(v.get<std::string>());
      if (!r) throw ValidationError("cannot parse eps entry " + std::to_string(i + 1));
      eps[i] = rational_to_double(*r);
    } else if (v.is_number()) {
      eps[i] = v.get<double>();
    } else {
      throw ValidationError("eps entries must be numbers or rational strings");
    }
  }
  return JointDistribution(eps, tol);
}

Json to_json(const BehavioralStrategy& s) {
  return Json{{"p", s.p}, {"q", s.q}, {"p_", s.p_}, {"q_", s.q_}};
}

Json to_json(const MeasurementSettings& m) {
  return Json{{"a1", m.a1}, {"a2", m.a2}, {"b1", m.b1}, {"b2", m.b2}};
}

Json to_json(const PayoffProfile& p) {
  return Json{{"a1", p.a1}, {"a2", p.a2}, {"b1", p.b1}, {"b2", p.b2}, {"welfare", p.sum()}};
}

Json to_json(const ChshReport& r) {
  return Json{{"corr11", r.corr[0]}, {"corr12", r.corr[1]}, {"corr21", r.corr[2]},
              {"corr22", r.corr[3]}, {"delta", r.delta},    {"regime", to_string(r.regime)}};
}

Json to_json(const NormalForm& nf, const GameSpec& g) {
  Json j;
  Json labels = Json::array();
  for (int i = 0; i < 4; ++i) labels.push_back(pure_pair_label(g, i));
  j["rows"] = labels;
  j["cols"] = labels;
  Json cells = Json::array();
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) {
      const auto& cell = nf.cells[r][c];
      row.push_back(Json{{"a1", scalar_to_json(cell.a1)},
                         {"a2", scalar_to_json(cell.a2)},
                         {"b1", scalar_to_json(cell.b1)},
                         {"b2", scalar_to_json(cell.b2)}});
    }
    cells.push_back(row);
  }
  j["cells"] = cells;
  return j;
}

namespace {

Json argmax_to_json(const Argmax& a) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BehavioralStrategy>)
          return Json{{"strategy", to_json(v)}};
        else if constexpr (std::is_same_v<T, MeasurementSettings>)
          return Json{{"settings", to_json(v)}};
        else
          return Json{{"table", to_json(v)}};
      },
      a);
}

}  // namespace

Json to_json(const OptimizationResult& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["value"] = r.value;
  if (r.exact_value) j["exact_value"] = rational_to_string(*r.exact_value);
  j["argmax"] = argmax_to_json(r.argmax);
  Json ties = Json::array();
  for (const auto& t : r.ties) ties.push_back(argmax_to_json(t));
  j["ties"] = ties;
  if (r.exact_table) {
    Json cert = Json::array();
    for (const auto& x : *r.exact_table) cert.push_back(rational_to_string(x));
    j["exact_table"] = cert;
  }
  j["audit"] = Json{{"evaluations", r.audit.evaluations}, {"seconds", r.audit.seconds}};
  return j;
}

Json to_json(const VerifyReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims)
    claims.push_back(Json{{"id", c.id},
                          {"description", c.description},
                          {"status", to_string(c.status)},
                          {"computed", c.computed},
                          {"reference", c.reference},
                          {"detail", c.detail}});
  return Json{{"claims", claims},
              {"notes", r.notes},
              {"summary", Json{{"claims", r.claims.size()},
                               {"reproduced", r.reproduced()},
                               {"discrepant", r.discrepant()}}}};
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError("cannot parse " + path + ": " + e.what());
  }
}

GameSpec load_game(const std::string& path) { return game_from_json(load_json(path)); }

JointDistribution load_distribution(const std::string& path, double tol) {
  return distribution_from_json(load_json(path), tol);
}

}  // namespace qbg
