#include "qbg/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qbg/errors.hpp"
#include "qbg/json_io.hpp"

namespace qbg {

namespace {

// Shortest round-trip representation, locale independent.
std::string dnum(double v) { return Json(v).dump(); }

std::vector<double> parse_csv_doubles(const std::string& text, std::size_t expected,
                                      const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse '" + item + "' in " + what);
    }
  }
  if (out.size() != expected)
    throw ValidationError(what + " needs " + std::to_string(expected) + " comma-separated values");
  return out;
}

struct CommonInputs {
  std::string game_path;
  std::string format;  // "json", "csv" or "pretty"; empty = subcommand default
};

GameSpec resolve_game(const CommonInputs& in) {
  return in.game_path.empty() ? benchmark_game() : load_game(in.game_path);
}

std::string pick_format(const CommonInputs& in, const char* fallback) {
  return in.format.empty() ? fallback : in.format;
}

QuantumState parse_state(const std::string& text) {
  if (text.empty() || text == "bell") return bell_state();
  auto v = parse_csv_doubles(text, 8, "--state");
  return QuantumState({std::complex<double>(v[0], v[1]), std::complex<double>(v[2], v[3]),
                       std::complex<double>(v[4], v[5]), std::complex<double>(v[6], v[7])});
}

MeasurementSettings parse_angles(const std::string& text, bool degrees) {
  auto v = parse_csv_doubles(text, 4, "--angles");
  double scale = degrees ? std::acos(-1.0) / 180.0 : 1.0;
  return {v[0] * scale, v[1] * scale, v[2] * scale, v[3] * scale};
}

// The distribution a payoffs/chsh invocation refers to: exactly one of a
// strategy, a table file, or measurement angles (with an optional state).
struct SourceOptions {
  std::string strategy, distribution, angles, state;
  bool degrees = false;
  double tol = kFeasTol;
};

JointDistribution resolve_distribution(const SourceOptions& src) {
  int given = !src.strategy.empty() + !src.distribution.empty() + !src.angles.empty();
  if (given != 1)
    throw ValidationError("give exactly one of --strategy, --distribution, --angles");
  if (!src.strategy.empty()) {
    auto v = parse_csv_doubles(src.strategy, 4, "--strategy");
    return from_strategy({v[0], v[1], v[2], v[3]});
  }
  if (!src.distribution.empty()) return load_distribution(src.distribution, src.tol);
  return epr_distribution(parse_state(src.state), parse_angles(src.angles, src.degrees));
}

void emit_key_values(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& kv,
                     const std::string& format) {
  if (format == "csv") {
    out << "field,value\n";
    for (const auto& [k, v] : kv) out << k << "," << v << "\n";
  } else {
    for (const auto& [k, v] : kv) out << k << " = " << v << "\n";
  }
}

int cmd_table2(const CommonInputs& in, std::ostream& out) {
  GameSpec g = resolve_game(in);
  NormalForm nf = normal_form(g);
  std::string format = pick_format(in, "pretty");
  if (format == "json") {
    out << to_json(nf, g).dump(2) << "\n";
    return kExitOk;
  }
  if (format == "csv") {
    out << "row,col,a1,a2,b1,b2\n";
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const auto& cell = nf.cells[r][c];
        out << "\"" << pure_pair_label(g, r) << "\",\"" << pure_pair_label(g, c) << "\","
            << cell.a1.str() << "," << cell.a2.str() << "," << cell.b1.str() << ","
            << cell.b2.str() << "\n";
      }
    return kExitOk;
  }
  // Pretty: fixed-width grid of ((a1,a2),(b1,b2)) cells.
  std::array<std::string, 4> labels;
  std::array<std::array<std::string, 4>, 4> text;
  std::size_t width = 0;
  for (int r = 0; r < 4; ++r) {
    labels[r] = pure_pair_label(g, r);
    width = std::max(width, labels[r].size());
    for (int c = 0; c < 4; ++c) {
      const auto& cell = nf.cells[r][c];
      text[r][c] = "((" + cell.a1.str() + "," + cell.a2.str() + "),(" + cell.b1.str() + "," +
                   cell.b2.str() + "))";
      width = std::max(width, text[r][c].size());
    }
  }
  auto pad = [&](const std::string& s) {
    return s + std::string(width + 2 - s.size(), ' ');
  };
  out << pad("");
  for (int c = 0; c < 4; ++c) out << pad(labels[c]);
  out << "\n";
  for (int r = 0; r < 4; ++r) {
    out << pad(labels[r]);
    for (int c = 0; c < 4; ++c) out << pad(text[r][c]);
    out << "\n";
  }
  return kExitOk;
}

int cmd_payoffs(const CommonInputs& in, const SourceOptions& src, std::ostream& out) {
  GameSpec g = resolve_game(in);
  PayoffProfile p{};
  if (!src.strategy.empty()) {
    auto v = parse_csv_doubles(src.strategy, 4, "--strategy");
    p = payoffs_from_strategy(g, {v[0], v[1], v[2], v[3]});
  } else {
    p = payoffs_from_distribution(g, resolve_distribution(src), src.tol);
  }
  std::string format = pick_format(in, "json");
  if (format == "json") {
    out << to_json(p).dump(2) << "\n";
  } else {
    emit_key_values(out,
                    {{"a1", dnum(p.a1)},
                     {"a2", dnum(p.a2)},
                     {"b1", dnum(p.b1)},
                     {"b2", dnum(p.b2)},
                     {"welfare", dnum(p.sum())}},
                    format);
  }
  return kExitOk;
}

int cmd_chsh(const CommonInputs& in, const SourceOptions& src, std::ostream& out) {
  ChshReport r = chsh_report(resolve_distribution(src), src.tol);
  std::string format = pick_format(in, "json");
  if (format == "json") {
    out << to_json(r).dump(2) << "\n";
  } else {
    emit_key_values(out,
                    {{"corr11", dnum(r.corr[0])},
                     {"corr12", dnum(r.corr[1])},
                     {"corr21", dnum(r.corr[2])},
                     {"corr22", dnum(r.corr[3])},
                     {"delta", dnum(r.delta)},
                     {"regime", to_string(r.regime)}},
                    format);
  }
  return kExitOk;
}

int cmd_optimize(const CommonInputs& in, const std::string& regime, const std::string& state,
                 int grid, const std::string& json_path, std::ostream& out) {
  GameSpec g = resolve_game(in);
  OptimizationResult res;
  if (regime == "classical") {
    res = classical_social_optimum(g, grid > 0 ? grid : 64);
  } else if (regime == "quantum") {
    AngleSearchOptions opt;
    if (grid > 0) opt.grid_per_angle = grid;
    res = quantum_social_optimum(g, parse_state(state), opt);
  } else if (regime == "no-signaling") {
    res = no_signaling_social_optimum(g);
  } else {
    throw ValidationError("--regime must be classical, quantum or no-signaling");
  }
  Json j = to_json(res);
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) throw ValidationError("cannot write " + json_path);
    f << j.dump(2) << "\n";
  }
  std::string format = pick_format(in, "json");
  if (format == "json") {
    out << j.dump(2) << "\n";
  } else {
    std::vector<std::pair<std::string, std::string>> kv = {
        {"method", to_string(res.method)},
        {"value", dnum(res.value)},
    };
    if (res.exact_value) kv.emplace_back("exact_value", rational_to_string(*res.exact_value));
    kv.emplace_back("ties", std::to_string(res.ties.size()));
    kv.emplace_back("evaluations", std::to_string(res.audit.evaluations));
    emit_key_values(out, kv, format);
  }
  return kExitOk;
}

int cmd_verify(const CommonInputs& in, bool strict, std::ostream& out) {
  GameSpec g = resolve_game(in);
  VerifyReport rep = verify_report(g);
  std::string format = pick_format(in, "json");
  if (format == "json") {
    out << to_json(rep).dump(2) << "\n";
  } else if (format == "csv") {
    out << "id,status,computed,reference\n";
    for (const auto& c : rep.claims)
      out << c.id << "," << to_string(c.status) << ",\"" << c.computed << "\",\"" << c.reference
          << "\"\n";
  } else {
    for (const auto& c : rep.claims) {
      out << "[" << to_string(c.status) << "] " << c.id << ": " << c.description << "\n";
      out << "    computed:  " << c.computed << "\n";
      out << "    reference: " << c.reference << "\n";
      if (!c.detail.empty()) out << "    detail:    " << c.detail << "\n";
    }
    for (const auto& n : rep.notes) out << "note: " << n << "\n";
    out << rep.reproduced() << "/" << rep.claims.size() << " reproduced, " << rep.discrepant()
        << " discrepant\n";
  }
  if (rep.discrepant() > 0) return kExitDiscrepant;
  if (strict && !rep.notes.empty()) return kExitDiscrepant;
  return kExitOk;
}

int cmd_sample(const CommonInputs& in, std::uint64_t seed, int count, bool factorizable,
               std::ostream& out) {
  if (count < 1) throw ValidationError("--count must be at least 1");
  Rng rng(seed);
  std::vector<JointDistribution> samples;
  samples.reserve(count);
  for (int i = 0; i < count; ++i)
    samples.push_back(factorizable ? from_strategy(sample_strategy(rng))
                                   : sample_no_signaling(rng));
  std::string format = pick_format(in, "json");
  if (format == "csv") {
    out << "sample";
    for (int j = 1; j <= 16; ++j) out << ",e" << j;
    out << "\n";
    for (int i = 0; i < count; ++i) {
      out << i;
      for (int j = 0; j < 16; ++j) out << "," << dnum(samples[i][j]);
      out << "\n";
    }
    return kExitOk;
  }
  // A single sample uses the distribution-file layout so it can be piped back
  // into --distribution.
  if (count == 1) {
    out << to_json(samples[0]).dump(2) << "\n";
  } else {
    Json arr = Json::array();
    for (const auto& d : samples) arr.push_back(to_json(d));
    out << Json{{"samples", arr}}.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"social-welfare analysis of a two-player Bayesian game under classical, "
               "quantum and no-signaling correlations"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options (--seed, --format) after the subcommand too

  CommonInputs common;
  std::uint64_t seed = 0;
  app.add_option("--format", common.format, "output format: json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--seed", seed, "seed for sampling subcommands (default 0)");

  auto add_game_option = [&](CLI::App* cmd) {
    cmd->add_option("--game", common.game_path, "game description file (default: built-in game)");
  };

  CLI::App* table2 = app.add_subcommand(
      "table2", "print the 4x4 pure-strategy payoff table ((A1,A2),(B1,B2) per cell)");
  add_game_option(table2);

  SourceOptions src;
  auto add_source_options = [&](CLI::App* cmd) {
    cmd->add_option("--strategy", src.strategy, "behavioral strategy p,q,p_,q_");
    cmd->add_option("--distribution", src.distribution, "joint table file ({\"eps\": [16]})");
    cmd->add_option("--angles", src.angles, "measurement angles a1,a2,b1,b2");
    cmd->add_flag("--degrees", src.degrees, "interpret --angles in degrees (default radians)");
    cmd->add_option("--state", src.state,
                    "two-qubit state: 'bell' or 8 comma-separated re,im amplitudes");
    cmd->add_option("--tol", src.tol, "feasibility tolerance (default 1e-9)");
  };

  CLI::App* payoffs = app.add_subcommand("payoffs", "expected per-type payoffs and welfare");
  add_game_option(payoffs);
  add_source_options(payoffs);

  CLI::App* chsh = app.add_subcommand("chsh", "correlators, CHSH delta and regime of a table");
  add_source_options(chsh);

  std::string regime, opt_state, opt_json;
  int opt_grid = 0;
  CLI::App* optimize = app.add_subcommand("optimize", "maximize welfare over a regime");
  add_game_option(optimize);
  optimize->add_option("--regime", regime, "classical, quantum or no-signaling")
      ->required()
      ->check(CLI::IsMember({"classical", "quantum", "no-signaling"}));
  optimize->add_option("--state", opt_state, "state for --regime quantum (default bell)");
  optimize->add_option("--grid", opt_grid,
                       "grid resolution (strategy grid step 1/N, or angle points per axis)");
  optimize->add_option("--json", opt_json, "also write the JSON result to this file");

  bool strict = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "recompute all audited reference values and report reproduction status");
  add_game_option(verify);
  verify->add_flag("--strict", strict, "exit non-zero on informational notes as well");

  int count = 1;
  bool factorizable = false;
  CLI::App* sample = app.add_subcommand("sample", "draw random tables (seeded)");
  sample->add_option("--count", count, "number of samples (default 1)");
  sample->add_flag("--factorizable", factorizable,
                   "sample factorizable tables instead of general non-signaling ones");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qbg");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (table2->parsed()) return cmd_table2(common, out);
    if (payoffs->parsed()) return cmd_payoffs(common, src, out);
    if (chsh->parsed()) return cmd_chsh(common, src, out);
    if (optimize->parsed()) return cmd_optimize(common, regime, opt_state, opt_grid, opt_json, out);
    if (verify->parsed()) return cmd_verify(common, strict, out);
    if (sample->parsed()) return cmd_sample(common, seed, count, factorizable, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  err << "no subcommand given\n";
  return kExitUsage;
}

}  // namespace qbg
