// Command-line front end: build circuit sets, run identity suites, run the
// numeric oracle, print Riemann schemes. JSON on stdout, diagnostics on
// stderr. Exit codes: 0 success, 1 failed checks, 2 invalid parameters,
// 3 numeric failure.

#include <CLI11.hpp>

#include <iostream>

#include "hgm/json_io.hpp"

namespace {

using namespace hgm;

std::vector<Rational> parse_list(const std::string& csv) {
  std::vector<Rational> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    std::string tok = csv.substr(pos, comma - pos);
    if (!tok.empty()) out.push_back(parse_rational(tok));
    pos = comma + 1;
  }
  return out;
}

std::vector<size_t> parse_sizes(const std::string& csv) {
  std::vector<size_t> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    std::string tok = csv.substr(pos, comma - pos);
    if (!tok.empty()) out.push_back(std::stoul(tok));
    pos = comma + 1;
  }
  return out;
}

int emit_violations(const std::vector<Violation>& v) {
  std::cout << json{{"violations", violations_to_json(v)}}.dump(2) << "\n";
  std::cerr << violations_message(v) << "\n";
  return 2;
}

void summarize(const Report& rep) {
  size_t failed = 0, skipped = 0;
  for (const auto& c : rep.checks) {
    if (c.skipped)
      ++skipped;
    else if (!c.pass)
      ++failed;
  }
  std::cerr << rep.suite << ": " << rep.checks.size() << " checks, " << failed
            << " failed, " << skipped << " skipped, " << rep.wall_time
            << " s\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monodromy matrices of pFq and Lauricella F_C"};
  app.require_subcommand(1);
  app.set_config("--config");

  std::string a_csv, b_csv, system = "ghg", sizes_csv, format = "json";
  long prec = kDefaultPrecision;
  std::string tol_str;
  size_t trials = 10;
  uint64_t seed = 42;
  unsigned jobs = 0;
  std::string eps_str = "1/10";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--prec", prec, "working precision in bits (>= 64)");
    cmd->add_option("--format", format)->check(CLI::IsMember({"json"}));
  };
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--a", a_csv, "comma-separated upper parameters, e.g. 1/3,1/5");
    cmd->add_option("--b", b_csv, "comma-separated lower parameters");
  };

  auto* cmd_bg = app.add_subcommand("build-ghg", "closed-form pFq circuit set");
  add_common(cmd_bg);
  add_params(cmd_bg);
  long p_flag = 0, m_flag = 0;
  cmd_bg->add_option("--p", p_flag, "rank (inferred from --a when omitted)");

  auto* cmd_bf = app.add_subcommand("build-fc", "closed-form F_C circuit set");
  add_common(cmd_bf);
  add_params(cmd_bf);
  cmd_bf->add_option("--m", m_flag, "variables (inferred from --b when omitted)");

  auto* cmd_sc = app.add_subcommand("scheme", "Riemann scheme of the pFq equation");
  add_common(cmd_sc);
  add_params(cmd_sc);

  auto* cmd_ve = app.add_subcommand("verify", "seeded identity suite");
  add_common(cmd_ve);
  cmd_ve->add_option("--system", system)->check(CLI::IsMember({"ghg", "fc"}));
  cmd_ve->add_option("--p", sizes_csv, "ranks to sweep, e.g. 2,3,4 (ghg)");
  cmd_ve->add_option("--m", sizes_csv, "variable counts to sweep (fc)");
  cmd_ve->add_option("--trials", trials);
  cmd_ve->add_option("--seed", seed);
  cmd_ve->add_option("--jobs", jobs, "parallel trials (default: cores)");
  cmd_ve->add_option("--tol", tol_str, "residual tolerance as a decimal");

  auto* cmd_or = app.add_subcommand(
      "oracle", "numeric analytic-continuation check against the closed forms");
  add_common(cmd_or);
  add_params(cmd_or);
  cmd_or->add_option("--tol", tol_str);
  cmd_or->add_option("--eps", eps_str, "loop base point");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_bg->parsed() || cmd_sc->parsed()) {
      GHGParams params{parse_list(a_csv), parse_list(b_csv)};
      if (p_flag > 0 && static_cast<size_t>(p_flag) != params.p()) {
        std::cerr << "--p disagrees with --a length\n";
        return 2;
      }
      if (auto v = validate_ghg(params); !v.empty()) return emit_violations(v);
      if (cmd_sc->parsed()) {
        std::cout << riemann_scheme_to_json(riemann_scheme(params)).dump(2) << "\n";
      } else {
        auto set = build_circuit_set(params, prec);
        std::cout << circuit_set_to_json(set).dump(2) << "\n";
      }
      return 0;
    }
    if (cmd_bf->parsed()) {
      auto a = parse_list(a_csv);
      if (a.size() != 2) {
        std::cerr << "build-fc needs exactly two upper parameters\n";
        return 2;
      }
      FCParams params{a[0], a[1], parse_list(b_csv)};
      if (m_flag > 0 && static_cast<size_t>(m_flag) != params.m()) {
        std::cerr << "--m disagrees with --b length\n";
        return 2;
      }
      if (auto v = validate_fc(params); !v.empty()) return emit_violations(v);
      auto set = build_circuit_set_fc(params, prec);
      std::cout << circuit_set_to_json(set).dump(2) << "\n";
      return 0;
    }
    if (cmd_ve->parsed()) {
      SuiteConfig cfg;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.precision_bits = prec;
      cfg.jobs = jobs;
      if (!tol_str.empty()) cfg.tolerance = Real::from_string(tol_str, prec);
      std::vector<size_t> sizes =
          sizes_csv.empty() ? std::vector<size_t>{} : parse_sizes(sizes_csv);
      Report rep;
      if (system == "ghg") {
        if (sizes.empty()) sizes = {2, 3, 4, 5, 6};
        rep = run_suite_ghg(sizes, cfg);
      } else {
        if (sizes.empty()) sizes = {1, 2, 3, 4, 5, 6};
        rep = run_suite_fc(sizes, cfg);
      }
      std::cout << report_to_json(rep).dump(2) << "\n";
      summarize(rep);
      return rep.all_pass() ? 0 : 1;
    }
    if (cmd_or->parsed()) {
      GHGParams params{parse_list(a_csv), parse_list(b_csv)};
      if (auto v = validate_ghg(params); !v.empty()) return emit_violations(v);
      Real tol = tol_str.empty() ? Real::from_string("1e-10", prec)
                                 : Real::from_string(tol_str, prec);
      Report rep =
          compare_to_closed_form(params, prec, tol, parse_rational(eps_str));
      std::cout << report_to_json(rep).dump(2) << "\n";
      summarize(rep);
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const InvalidParams& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const MTooLarge& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return 0;
}
