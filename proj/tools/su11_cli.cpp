// Command-line front end: figure-curve sweeps as CSV, SQL/Heisenberg
// comparison at calibrated photon number, and the closed-form-vs-oracle
// equivalence check.
//
// Exit codes: 0 success, 1 check failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "su11/su11.hpp"

namespace {

struct CommonFlags {
  std::string quantity, var, range, config, out;
  std::vector<std::string> schemes;
  double g = 1.0, alpha = 1.0, T = 1.0, eta = 1.0, phi = 0.0, theta1 = 0.0;
};

su11::Range parse_range(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3)
    throw su11::InvalidArgument("--range expects start:stop:steps, got " + s);
  try {
    return su11::Range{std::stod(parts[0]), std::stod(parts[1]),
                       std::stoul(parts[2])};
  } catch (const std::exception&) {
    throw su11::InvalidArgument("--range expects numeric start:stop:steps");
  }
}

std::pair<unsigned, unsigned> parse_scheme(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw su11::InvalidArgument("--scheme expects m,n, got " + s);
  try {
    const unsigned long m = std::stoul(s.substr(0, comma));
    const unsigned long n = std::stoul(s.substr(comma + 1));
    return {unsigned(m), unsigned(n)};
  } catch (const std::exception&) {
    throw su11::InvalidArgument("--scheme expects numeric m,n");
  }
}

su11::SweepSpec spec_from_json(const nlohmann::json& j) {
  su11::SweepSpec spec;
  if (j.contains("quantity"))
    spec.quantity = su11::parse_quantity(j.at("quantity").get<std::string>());
  if (j.contains("var"))
    spec.var = su11::parse_sweep_var(j.at("var").get<std::string>());
  if (j.contains("range")) {
    const auto& r = j.at("range");
    spec.range.start = r.value("start", spec.range.start);
    spec.range.stop = r.value("stop", spec.range.stop);
    spec.range.steps = r.value("steps", spec.range.steps);
  }
  if (j.contains("fixed")) {
    const auto& f = j.at("fixed");
    spec.fixed.g = f.value("g", spec.fixed.g);
    spec.fixed.theta1 = f.value("theta1", spec.fixed.theta1);
    spec.fixed.theta2 = spec.fixed.theta1 + std::numbers::pi;
    if (f.contains("alpha"))
      spec.fixed.alpha = {f.at("alpha").get<double>(), 0.0};
    spec.fixed.T = f.value("T", spec.fixed.T);
    spec.fixed.eta = f.value("eta", spec.fixed.eta);
    spec.fixed.phi = f.value("phi", spec.fixed.phi);
  }
  if (j.contains("schemes")) {
    spec.schemes.clear();
    for (const auto& s : j.at("schemes"))
      spec.schemes.emplace_back(s.at(0).get<unsigned>(),
                                s.at(1).get<unsigned>());
  }
  return spec;
}

/// Writes to --out when given, stdout otherwise.
template <class Rows>
void emit_csv(const Rows& rows, const std::string& out) {
  if (out.empty()) {
    su11::write_csv(std::cout, rows);
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw su11::InvalidArgument("cannot open output file: " + out);
  su11::write_csv(f, rows);
}

int run_sweep_cmd(const CommonFlags& fl, const CLI::App& cmd) {
  su11::SweepSpec spec;
  spec.range = su11::Range{0.01, 1.5, 150};
  if (!fl.config.empty()) {
    std::ifstream f(fl.config);
    if (!f) throw su11::InvalidArgument("cannot open config: " + fl.config);
    nlohmann::json j;
    try {
      f >> j;
    } catch (const std::exception& e) {
      throw su11::InvalidArgument(std::string("config parse error: ") +
                                  e.what());
    }
    spec = spec_from_json(j);
  }
  // Flags override the config file.
  if (cmd.count("--quantity")) spec.quantity = su11::parse_quantity(fl.quantity);
  if (cmd.count("--var")) spec.var = su11::parse_sweep_var(fl.var);
  if (cmd.count("--range")) spec.range = parse_range(fl.range);
  if (cmd.count("--g")) spec.fixed.g = fl.g;
  if (cmd.count("--alpha")) spec.fixed.alpha = {fl.alpha, 0.0};
  if (cmd.count("--T")) spec.fixed.T = fl.T;
  if (cmd.count("--eta")) spec.fixed.eta = fl.eta;
  if (cmd.count("--phi")) spec.fixed.phi = fl.phi;
  if (cmd.count("--theta1")) {
    spec.fixed.theta1 = fl.theta1;
    spec.fixed.theta2 = fl.theta1 + std::numbers::pi;
  }
  if (!fl.schemes.empty()) {
    spec.schemes.clear();
    for (const std::string& s : fl.schemes)
      spec.schemes.push_back(parse_scheme(s));
  }
  emit_csv(su11::run_sweep(spec), fl.out);
  return 0;
}

int run_preset_cmd(const std::string& name, const std::string& out) {
  const std::vector<su11::PresetSpec> presets = su11::figure_presets();
  const su11::PresetSpec* p = su11::find_preset(presets, name);
  if (!p) {
    std::string names;
    for (const auto& q : presets) names += " " + q.name;
    throw su11::InvalidArgument("unknown preset '" + name +
                                "'; available:" + names);
  }
  if (p->is_compare_sql)
    emit_csv(su11::compare_sql(p->cmp), out);
  else
    emit_csv(su11::run_sweep(p->sweep), out);
  return 0;
}

int run_compare_sql_cmd(const CommonFlags& fl, const CLI::App& cmd) {
  su11::CompareSqlSpec spec;
  spec.phi_range = su11::Range{0.01, 1.5, 150};
  spec.schemes = {{0u, 0u}, {1u, 1u}, {2u, 2u}, {3u, 3u}};
  if (cmd.count("--g")) spec.g = fl.g;
  if (cmd.count("--T")) spec.T = fl.T;
  if (cmd.count("--theta1")) spec.theta1 = fl.theta1;
  if (cmd.count("--range")) spec.phi_range = parse_range(fl.range);
  if (!fl.schemes.empty()) {
    spec.schemes.clear();
    for (const std::string& s : fl.schemes)
      spec.schemes.push_back(parse_scheme(s));
  }
  emit_csv(su11::compare_sql(spec), fl.out);
  return 0;
}

struct DeviationTracker {
  std::map<std::string, double> per_field;
  double worst = 0.0;
  std::string worst_desc;

  void update(const std::string& field, double rel, const std::string& desc) {
    double& slot = per_field[field];
    slot = std::max(slot, rel);
    if (rel > worst) {
      worst = rel;
      worst_desc = desc + " [" + field + "]";
    }
  }
};

std::string describe(const su11::ModelParams& p) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "m=%u n=%u g=%g alpha=%g T=%g phi=%g", p.m, p.n, p.g,
                p.alpha.real(), p.T, p.phi);
  return buf;
}

int run_oracle_check_cmd(const CommonFlags& fl, const CLI::App& cmd) {
  constexpr double kTol = 1e-6;
  su11::fock::SqueezeCache cache;
  DeviationTracker dev;

  const bool single_point = cmd.count("--g") || cmd.count("--alpha") ||
                            cmd.count("--T") || cmd.count("--phi") ||
                            !fl.schemes.empty();

  std::vector<std::pair<unsigned, unsigned>> schemes;
  std::vector<double> gs, alphas, Ts, phis;
  if (single_point) {
    schemes = {{1u, 1u}};
    if (!fl.schemes.empty()) {
      schemes.clear();
      for (const std::string& s : fl.schemes)
        schemes.push_back(parse_scheme(s));
    }
    gs = {cmd.count("--g") ? fl.g : 1.0};
    alphas = {cmd.count("--alpha") ? fl.alpha : 1.0};
    Ts = {cmd.count("--T") ? fl.T : 1.0};
    phis = {cmd.count("--phi") ? fl.phi : 0.6};
  } else {
    for (unsigned m = 0; m <= 2; ++m)
      for (unsigned n = 0; n <= 2; ++n) schemes.push_back({m, n});
    gs = {0.5, 1.0};
    alphas = {0.5, 1.0};
    Ts = {0.7, 1.0};
    phis = {0.3, 0.6};
  }

  for (double g : gs)
    for (double a : alphas)
      for (double T : Ts)
        for (auto [m, n] : schemes) {
          su11::ModelParams p;
          p.g = g;
          p.alpha = {a, 0.0};
          p.T = T;
          p.m = m;
          p.n = n;
          // One ladder climb serves every requested phase.
          const std::vector<su11::PointComparison> pts = su11::compare_points(
              p, phis, su11::closed_form_stats, {}, &cache);
          for (const auto& pc : pts) {
            for (const auto& f : pc.fields)
              dev.update(f.field, f.rel, describe(pc.params));
            std::printf(
                "point %-38s worst %.3e (%s)  level %zu  cert %.3e\n",
                describe(pc.params).c_str(), pc.worst_rel,
                pc.worst_field.c_str(), pc.level, pc.certificate);
          }
          if (T == 1.0) {
            p.phi = phis.front();
            const su11::QfiComparison qc = su11::compare_qfi_point(p, {}, &cache);
            dev.update("qfi",
                       su11::relative_deviation(qc.f_closed, qc.f_oracle),
                       describe(qc.params));
            dev.update("qfi_mean_na",
                       su11::relative_deviation(qc.na_closed, qc.na_oracle),
                       describe(qc.params));
            std::printf("qfi   %-38s worst %.3e  level %zu  cert %.3e\n",
                        describe(qc.params).c_str(), qc.worst_rel, qc.level,
                        qc.certificate);
          }
        }

  std::printf("\nmax relative deviation per quantity:\n");
  for (const auto& [field, rel] : dev.per_field)
    std::printf("  %-14s %.3e\n", field.c_str(), rel);
  if (dev.worst < kTol) {
    std::printf("RESULT: PASS (all within %.0e)\n", kTol);
    return 0;
  }
  std::printf("RESULT: FAIL — worst deviation %.3e at %s (tolerance %.0e)\n",
              dev.worst, dev.worst_desc.c_str(), kTol);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Phase sensitivity, quantum Fisher information, and Cramer-Rao bounds "
      "for an SU(1,1) interferometer with multi-photon subtraction"};
  app.require_subcommand(1);

  CommonFlags fl;
  auto add_common = [&fl](CLI::App* cmd, bool model_flags) {
    cmd->add_option("--range", fl.range, "sweep range start:stop:steps");
    cmd->add_option("--scheme", fl.schemes,
                    "subtraction scheme m,n (repeatable)");
    cmd->add_option("--g", fl.g, "OPA gain factor");
    cmd->add_option("--T", fl.T, "internal transmittance in (0,1]");
    cmd->add_option("--theta1", fl.theta1, "first OPA pump phase");
    cmd->add_option("--out", fl.out, "write CSV/report to this path");
    if (model_flags) {
      cmd->add_option("--alpha", fl.alpha, "coherent input amplitude");
      cmd->add_option("--eta", fl.eta, "detection transmittance in (0,1]");
      cmd->add_option("--phi", fl.phi, "interferometer phase");
    }
  };

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate one curve family");
  sweep->add_option("--quantity", fl.quantity,
                    "sensitivity|qfi|qfi_lossy|qcrb|qcrb_lossy|mean_photon");
  sweep->add_option("--var", fl.var, "sweep variable: phi|g|alpha|T|eta");
  sweep->add_option("--config", fl.config, "JSON file mirroring the sweep spec");
  add_common(sweep, /*model_flags=*/true);

  CLI::App* preset =
      app.add_subcommand("preset", "run a pinned figure-curve preset");
  std::string preset_name;
  preset->add_option("name", preset_name, "preset name, e.g. fig2a")
      ->required();
  std::string preset_out;
  preset->add_option("--out", preset_out, "write CSV to this path");

  CLI::App* cmp = app.add_subcommand(
      "compare-sql",
      "sensitivity vs shot-noise/Heisenberg limits at photon number "
      "calibrated to N = 4");
  add_common(cmp, /*model_flags=*/false);

  CLI::App* check = app.add_subcommand(
      "oracle-check",
      "compare closed forms against the truncated-Fock-space oracle");
  add_common(check, /*model_flags=*/true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sweep->parsed()) return run_sweep_cmd(fl, *sweep);
    if (preset->parsed()) return run_preset_cmd(preset_name, preset_out);
    if (cmp->parsed()) return run_compare_sql_cmd(fl, *cmp);
    if (check->parsed()) return run_oracle_check_cmd(fl, *check);
  } catch (const su11::InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const su11::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
