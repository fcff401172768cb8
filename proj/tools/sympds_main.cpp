// Command-line front end: verification suites, branching tables, spectra,
// the repartition figure, and the sign-rule discrepancy report.

#include <CLI11.hpp>
#include <complex>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "sympds/ktypes.hpp"
#include "sympds/specfun.hpp"
#include "sympds/suites.hpp"

namespace {

using nlohmann::json;
using namespace sympds;

constexpr int kExitPass = 0;
constexpr int kExitToleranceFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path " + path);
  out << text;
}

std::string ktypes_csv(int n, int delta, int l_max) {
  std::string out = "l,l2,dim\n";
  char buf[96];
  for (const auto& label : ktypes::branching(delta, l_max)) {
    std::snprintf(buf, sizeof buf, "%d,%d,%lld\n", label.l, label.l2,
                  static_cast<long long>(ktypes::weyl_dim(n, label)));
    out += buf;
  }
  return out;
}

json ktypes_json(int n, int delta, int l_max) {
  json rows = json::array();
  for (const auto& label : ktypes::branching(delta, l_max))
    rows.push_back({{"l", label.l},
                    {"l2", label.l2},
                    {"dim", ktypes::weyl_dim(n, label)}});
  return {{"n", n}, {"delta", delta}, {"l_max", l_max}, {"rows", rows}};
}

std::string eigenvalues_csv(const Parameter& param, int l_max) {
  std::string out = "l,l2,re,im,modulus,pole\n";
  char buf[192];
  for (const auto& row : ktypes::eigenvalue_table(param, l_max)) {
    std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%.17g,%d\n", row.label.l,
                  row.label.l2, row.value.real(), row.value.imag(),
                  std::abs(row.value), row.pole ? 1 : 0);
    out += buf;
  }
  return out;
}

json eigenvalues_json(const Parameter& param, int l_max) {
  json rows = json::array();
  for (const auto& row : ktypes::eigenvalue_table(param, l_max))
    rows.push_back({{"l", row.label.l},
                    {"l2", row.label.l2},
                    {"re", row.value.real()},
                    {"im", row.value.imag()},
                    {"modulus", std::abs(row.value)},
                    {"pole", row.pole}});
  return {{"mu_re", param.mu.real()},
          {"mu_im", param.mu.imag()},
          {"delta", param.delta},
          {"n", param.n},
          {"rows", rows}};
}

json discrepancy_json(int n, int l_max) {
  json rows = json::array();
  for (const auto& label : ktypes::branching(0, l_max)) {
    const auto row = ktypes::classify_pi00(n, label);
    rows.push_back({{"l", label.l},
                    {"l2", label.l2},
                    {"eigenvalue_re", row.computed_eigenvalue.real()},
                    {"eigenvalue_im", row.computed_eigenvalue.imag()},
                    {"computed_sign", row.computed_sign},
                    {"paper_mod4_class", row.paper_mod4_class},
                    {"agree", row.agree}});
  }
  return {{"n", n}, {"l_max", l_max}, {"rows", rows}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degenerate principal series toolkit for the complex symplectic group"};
  app.require_subcommand(1);

  suites::RunConfig cfg;
  std::string config_path;
  std::vector<std::string> suite_sel;
  double mu_re = 0.0, mu_im = 0.0;
  bool mu_given = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file (flags win)");
    cmd->add_option("--delta", cfg.delta, "character index");
    cmd->add_option("--n", cfg.n, "rank n");
    cmd->add_option("--l-max", cfg.l_max, "largest highest-weight entry");
    cmd->add_option("--grid-m", cfg.grid_m, "grid points per axis (power of 2)");
    cmd->add_option("--grid-l", cfg.grid_l, "grid half-width");
    cmd->add_option("--quad-budget", cfg.quad_budget, "sphere quadrature points");
    cmd->add_option("--seed", cfg.seed, "RNG seed");
    cmd->add_option("--tol", cfg.tol, "tolerance override (0 = per-check defaults)");
    cmd->add_option("--out", cfg.out_path, "output path (default stdout)");
    cmd->add_option("--format", cfg.format, "json|csv|svg");
    cmd->add_option_function<double>(
        "--mu", [&](const double& v) { mu_re = v; mu_given = true; },
        "Re mu");
    cmd->add_option_function<double>(
        "--mu-im", [&](const double& v) { mu_im = v; mu_given = true; },
        "Im mu");
  };

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify);
  verify->add_option("--suite", suite_sel, "suite name (repeatable; default all)");

  CLI::App* cmd_ktypes = app.add_subcommand("ktypes", "branching table");
  add_common(cmd_ktypes);

  CLI::App* cmd_eigen = app.add_subcommand("eigenvalues", "intertwiner spectrum");
  add_common(cmd_eigen);

  CLI::App* cmd_figure = app.add_subcommand("figure", "repartition scatter");
  add_common(cmd_figure);

  CLI::App* cmd_disc =
      app.add_subcommand("report-discrepancy", "sign-rule comparison rows");
  add_common(cmd_disc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    // config file first, then flags override by re-parsing
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot open config " + config_path);
      json j = json::parse(in);
      suites::RunConfig file_cfg;
      from_json(j, file_cfg);
      const suites::RunConfig flag_cfg = cfg;
      cfg = file_cfg;
      // flags win: re-apply any flag the user actually passed
      auto sub = app.get_subcommands().front();
      if (sub->count("--delta")) cfg.delta = flag_cfg.delta;
      if (sub->count("--n")) cfg.n = flag_cfg.n;
      if (sub->count("--l-max")) cfg.l_max = flag_cfg.l_max;
      if (sub->count("--grid-m")) cfg.grid_m = flag_cfg.grid_m;
      if (sub->count("--grid-l")) cfg.grid_l = flag_cfg.grid_l;
      if (sub->count("--quad-budget")) cfg.quad_budget = flag_cfg.quad_budget;
      if (sub->count("--seed")) cfg.seed = flag_cfg.seed;
      if (sub->count("--tol")) cfg.tol = flag_cfg.tol;
      if (sub->count("--out")) cfg.out_path = flag_cfg.out_path;
      if (sub->count("--format")) cfg.format = flag_cfg.format;
    }
    if (mu_given) {
      cfg.mu_re = mu_re;
      cfg.mu_im = mu_im;
    }

    if (verify->parsed()) {
      std::vector<std::string> selected =
          suite_sel.empty() ? suites::suite_names() : suite_sel;
      for (const auto& s : selected)
        if (!suites::is_suite(s)) {
          std::cerr << "unknown suite: " << s << "\n";
          return kExitUsage;
        }
      json report;
      report["config"] = cfg;
      report["suites"] = json::array();
      bool all_pass = true;
      for (const auto& s : selected) {
        const auto rep = suites::run_suite(s, cfg);
        all_pass = all_pass && rep.pass;
        report["suites"].push_back(suites::to_json(rep));
      }
      report["pass"] = all_pass;
      write_output(cfg.out_path, report.dump(2) + "\n");
      return all_pass ? kExitPass : kExitToleranceFailure;
    }

    if (cmd_ktypes->parsed()) {
      const int n = std::max(cfg.n, 2);
      if (cfg.format == "csv")
        write_output(cfg.out_path, ktypes_csv(n, cfg.delta, cfg.l_max));
      else
        write_output(cfg.out_path,
                     ktypes_json(n, cfg.delta, cfg.l_max).dump(2) + "\n");
      return kExitPass;
    }

    if (cmd_eigen->parsed()) {
      const Parameter param(cfg.mu(), cfg.delta, cfg.n);
      if (cfg.format == "csv")
        write_output(cfg.out_path, eigenvalues_csv(param, cfg.l_max));
      else
        write_output(cfg.out_path,
                     eigenvalues_json(param, cfg.l_max).dump(2) + "\n");
      return kExitPass;
    }

    if (cmd_figure->parsed()) {
      const auto pts = ktypes::emit_repartition(std::max(cfg.n, 1), cfg.l_max);
      if (cfg.format == "csv")
        write_output(cfg.out_path, ktypes::repartition_csv(pts));
      else
        write_output(cfg.out_path,
                     ktypes::repartition_svg(pts, "eigenvalue +1",
                                             "eigenvalue -1"));
      return kExitPass;
    }

    if (cmd_disc->parsed()) {
      write_output(cfg.out_path,
                   discrepancy_json(std::max(cfg.n, 1), cfg.l_max).dump(2) + "\n");
      return kExitPass;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
