#include "relaysec/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <vector>

#include "relaysec/config.hpp"
#include "relaysec/dmc_rates.hpp"
#include "relaysec/errors.hpp"
#include "relaysec/gaussian_rates.hpp"
#include "relaysec/geometry.hpp"
#include "relaysec/optimizer.hpp"
#include "relaysec/report.hpp"

namespace relaysec {

namespace {

std::string num6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

struct CliOptions {
  std::string config_path;
  std::string out_path;
  std::string case_arg;  // case1|case2|case3|all, empty = config decides
  std::uint64_t seed = 0;
  bool seed_set = false;
  unsigned grid = 0;      // 0 = unset
  unsigned restarts = 0;  // 0 = unset
};

SearchConfig apply_overrides(SearchConfig cfg, const CliOptions& opt) {
  if (opt.seed_set) cfg.seed = opt.seed;
  if (opt.grid != 0) cfg.grid_points = opt.grid;
  if (opt.restarts != 0) cfg.restarts = opt.restarts;
  cfg.validate();
  return cfg;
}

std::vector<EavesdropperCase> requested_cases(
    const CliOptions& opt, const ConfigDoc& doc,
    const GaussianOrthogonalChannel& ch) {
  if (opt.case_arg == "all") {
    return {EavesdropperCase::case1, EavesdropperCase::case2,
            EavesdropperCase::case3};
  }
  if (!opt.case_arg.empty()) {
    return {eavesdropper_case_from_string(opt.case_arg)};
  }
  if (config_has_eavesdropper_section(doc)) {
    const auto c = ch.eavesdropper_case();
    if (!c) return {};  // explicit flags, both off
    return {*c};
  }
  return {EavesdropperCase::case1, EavesdropperCase::case2,
          EavesdropperCase::case3};
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open output file: " + path);
  out << text;
  out.flush();
  if (!out) throw io_error("failed writing output file: " + path);
}

int run_evaluate(const CliOptions& opt, std::ostream& out) {
  const ConfigDoc doc = load_config_file(opt.config_path);
  const GaussianOrthogonalChannel base = channel_from_config(doc);
  const SearchConfig cfg =
      apply_overrides(search_config_from_config(doc, SearchConfig{}), opt);

  RateReport report;
  report.config = cfg;
  report.echo_eavesdropper_section = config_has_eavesdropper_section(doc);

  const BoundResult capacity =
      optimize_bound(base, SecrecyBound::relay_capacity, cfg);

  const auto cases = requested_cases(opt, doc, base);
  if (cases.empty()) {
    report.channel = base;
    report.no_active_eavesdropper = true;
    report.no_secrecy_capacity = capacity.value;
    out << render_report(report);
    if (!opt.out_path.empty()) {
      write_text_file(opt.out_path, render_report(report));
    }
    return exit_ok;
  }

  report.channel = cases.size() == 1 ? base.with_case(cases.front()) : base;
  for (const EavesdropperCase ecase : cases) {
    const GaussianOrthogonalChannel ch = base.with_case(ecase);
    const BoundResult pdf = optimize_bound(ch, SecrecyBound::pdf_inner, cfg);
    const CovarianceParams seeds[] = {pdf.params};
    const BoundResult outer =
        optimize_bound(ch, SecrecyBound::genie_outer, cfg, seeds);
    const BoundResult nf = optimize_bound(ch, SecrecyBound::nf_inner, cfg);
    CaseRates entry;
    entry.ecase = ecase;
    entry.pdf_inner = pdf.value;
    entry.nf_inner = nf.value;
    entry.genie_outer = outer.value;
    entry.wiretap_baseline = wiretap_baseline(ch);
    entry.no_secrecy_capacity = capacity.value;
    entry.nf_extrapolated = ecase == EavesdropperCase::case1;
    report.entries.push_back(entry);
  }
  report.check_invariants();

  const std::string text = render_report(report);
  out << text;
  if (!opt.out_path.empty()) write_text_file(opt.out_path, text);
  return exit_ok;
}

int run_sweep(const CliOptions& opt, std::ostream& out) {
  const ConfigDoc doc = load_config_file(opt.config_path);
  const SweepSpec spec = sweep_from_config(doc);
  // Sweeps evaluate hundreds of optimizations; default to a lighter grid
  // than a single evaluate call. The config or --grid still override.
  SearchConfig sweep_defaults;
  sweep_defaults.grid_points = 5;
  const SearchConfig cfg =
      apply_overrides(search_config_from_config(doc, sweep_defaults), opt);

  std::vector<EavesdropperCase> cases;
  if (opt.case_arg.empty() || opt.case_arg == "all") {
    cases = {EavesdropperCase::case1, EavesdropperCase::case2,
             EavesdropperCase::case3};
  } else {
    cases = {eavesdropper_case_from_string(opt.case_arg)};
  }

  const SweepResult result = sweep_relay_position(
      spec.geometry, spec.relay_from, spec.relay_to, spec.samples, cases,
      cfg);
  emit_table(result, opt.out_path);

  out << "sweep: " << result.rows.size() << " rows -> " << opt.out_path
      << "\n";
  out << "optimizer: grid = " << cfg.grid_points
      << ", restarts = " << cfg.restarts << ", seed = " << cfg.seed << "\n";
  for (const auto& note : result.notes) out << "note: " << note << "\n";
  return exit_ok;
}

int run_mimome(const CliOptions& opt, std::ostream& out) {
  const ConfigDoc doc = load_config_file(opt.config_path);
  const MimomeInstance inst = mimome_from_config(doc);
  const SearchConfig cfg =
      apply_overrides(search_config_from_config(doc, SearchConfig{}), opt);
  const MimomeResult result = mimome_secrecy(inst, cfg);
  out << "secrecy_rate = " << num6(result.rate) << "\n";
  for (Eigen::Index i = 0; i < result.k_x.rows(); ++i) {
    out << "k_x" << (i == 0 ? " = " : "       ");
    for (Eigen::Index j = 0; j < result.k_x.cols(); ++j) {
      out << (j == 0 ? "" : " ") << num6(result.k_x(i, j));
    }
    out << (i + 1 < result.k_x.rows() ? " ;" : "") << "\n";
  }
  return exit_ok;
}

}  // namespace

ExampleCheck check_example(const ExampleChannel& ex) {
  ExampleCheck check;
  const auto factor = validate_factorization(ex.channel);
  const double rate = randomized_pdf_inner_bound(ex.channel, ex.scheme);
  const bool rate_ok = std::abs(rate - ex.expected_rate_bits) <= 1e-9;
  check.pass = rate_ok && factor.pass;
  check.message = ex.name + ": rate " + num6(rate) + " (expected " +
                  num6(ex.expected_rate_bits) + "), factorization " +
                  (factor.pass ? "ok" : "violated");
  if (!check.pass) check.message += " -- FAILED";
  return check;
}

int verify_examples(std::ostream& out) {
  int failures = 0;
  for (int id = 1; id <= 3; ++id) {
    const ExampleCheck check = check_example(example_channel(id));
    out << check.message << "\n";
    if (!check.pass) ++failures;
  }
  out << (3 - failures) << "/3 examples verified\n";
  return failures;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Secrecy-rate bounds for relay channels with orthogonal "
               "components"};
  app.require_subcommand(1);

  CliOptions opt;
  auto add_common = [&](CLI::App* cmd, bool needs_config) {
    auto* config =
        cmd->add_option("--config", opt.config_path, "config file path");
    if (needs_config) config->required();
    cmd->add_option("--out", opt.out_path, "output file path");
    cmd->add_option("--seed", opt.seed, "optimizer seed")
        ->each([&](const std::string&) { opt.seed_set = true; });
    cmd->add_option("--case", opt.case_arg, "case1|case2|case3|all")
        ->check(CLI::IsMember({"case1", "case2", "case3", "all"}));
    cmd->add_option("--grid", opt.grid, "grid points per axis");
    cmd->add_option("--restarts", opt.restarts, "ascent restarts");
  };

  auto* evaluate =
      app.add_subcommand("evaluate", "optimize the bounds for one channel");
  add_common(evaluate, true);
  auto* sweep =
      app.add_subcommand("sweep", "relay-position sweep, writes a CSV");
  add_common(sweep, true);
  sweep->get_option("--out")->required();
  auto* verify = app.add_subcommand("verify-examples",
                                    "check the canonical example channels");
  auto* mimome =
      app.add_subcommand("mimome", "multi-antenna wiretap secrecy capacity");
  add_common(mimome, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse_error;
  }

  try {
    if (evaluate->parsed()) return run_evaluate(opt, out);
    if (sweep->parsed()) return run_sweep(opt, out);
    if (mimome->parsed()) return run_mimome(opt, out);
    if (verify->parsed()) {
      return verify_examples(out) == 0 ? exit_ok : exit_failure;
    }
    err << "error: no command\n";
    return exit_parse_error;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse_error;
  } catch (const io_error& e) {
    err << "io error: " << e.what() << "\n";
    return exit_io_error;
  } catch (const numeric_error& e) {
    err << "numeric error: " << e.what() << "\n";
    return exit_numeric_error;
  } catch (const argument_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_argument_error;
  }
}

}  // namespace relaysec
