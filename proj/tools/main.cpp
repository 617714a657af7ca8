#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

void add_form_options(CLI::App* cmd, qfc::cli::RunConfig& cfg) {
  cmd->add_option("--p", cfg.p, "Characteristic (odd prime)")->required();
  cmd->add_option("--e", cfg.e, "Extension degree of F_q over F_p")->capture_default_str();
  cmd->add_option("--m", cfg.m, "Number of variables")->required();
  cmd->add_option("--coeffs", cfg.coeffs, "Coefficients \"i,j:c;...\" (1-based, i <= j)");
  cmd->add_option("--canonical", cfg.canonical, "Standard form \"r=<n>,type=<I|II|III>[,mu=<1|gamma>]\"");
  cmd->add_option("--trace", cfg.trace, "Tr(sum c_i x^(q^i+1)) coefficients \"c0,c1,...\" in F_{q^m}");
}

void add_common_options(CLI::App* cmd, qfc::cli::RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "json or csv")->capture_default_str();
  cmd->add_option("--output", cfg.output, "Write to this file instead of stdout");
  cmd->add_option("--max-points", cfg.max_points, "Largest q^m enumerated")
      ->envname("QFCODES_MAX_POINTS")
      ->capture_default_str();
  cmd->add_option("--time-budget", cfg.time_budget, "Seconds before giving up (0 = none)")
      ->envname("QFCODES_TIME_BUDGET");
  cmd->add_option("--workers", cfg.workers, "Worker threads")->envname("QFCODES_WORKERS")->capture_default_str();
}

void add_verify_options(CLI::App* cmd, qfc::cli::RunConfig& cfg) {
  cmd->add_option("--convention", cfg.convention, "paper, reflected or adjudicate")->capture_default_str();
  cmd->add_option("--cache-dir", cfg.cache_dir, "Result cache directory")->envname("QFCODES_CACHE_DIR");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qfc::cli;
  CLI::App app{"Codes from preimages of quadratic forms over odd finite fields"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* classify = app.add_subcommand("classify", "Classify a quadratic form and print a standardizing transform");
  add_form_options(classify, cfg);
  add_common_options(classify, cfg);

  auto* verify = app.add_subcommand("verify", "Enumerate the code and compare with the closed forms");
  add_form_options(verify, cfg);
  add_common_options(verify, cfg);
  add_verify_options(verify, cfg);
  verify->add_option("--a", cfg.a, "Target value, or all-nonzero")->required();

  auto* sweep = app.add_subcommand("sweep", "Verify every class, m and nonzero a over a grid");
  add_common_options(sweep, cfg);
  add_verify_options(sweep, cfg);
  sweep->add_option("--q-list", cfg.q_list, "Field orders")->delimiter(',')->capture_default_str();
  sweep->add_option("--m-max", cfg.m_max, "Largest m")->capture_default_str();

  auto* minimal = app.add_subcommand("minimal", "Ratio and exhaustive minimal-codeword checks");
  add_form_options(minimal, cfg);
  add_common_options(minimal, cfg);
  minimal->add_option("--a", cfg.a, "Target value, or all-nonzero")->required();
  minimal->add_option("--seed", cfg.seed, "Seed for sampled pair checks")->capture_default_str();
  minimal->add_option("--pair-budget", cfg.pair_budget, "Codeword pairs examined before sampling")
      ->envname("QFCODES_PAIR_BUDGET")
      ->capture_default_str();

  // an explicitly empty --q-list means an empty grid
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string_view(argv[i]) == "--q-list" && std::string_view(argv[i + 1]).empty()) {
      cfg.q_list.clear();
      std::copy(argv + i + 2, argv + argc, argv + i);
      argc -= 2;
      break;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      std::cerr << "cannot open " << cfg.output << "\n";
      return kInvalid;
    }
  }
  std::ostream& out = cfg.output.empty() ? std::cout : file;

  try {
    if (*classify) return run_classify(cfg, out);
    if (*verify) return run_verify(cfg, out);
    if (*sweep) return run_sweep(cfg, out);
    return run_minimal(cfg, out);
  } catch (const qfc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
