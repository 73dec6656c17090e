#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tangle/cli/commands.hpp"
#include "tangle/cli/input.hpp"

namespace cli = tangle::cli;

int main(int argc, char** argv) {
  CLI::App app{"Tangles, entropies and invariants of pure three-qubit states", "tanglectl"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::Options opt;
  std::string out_path;
  app.add_option("--seed", opt.seed, "Seed for every random draw")->capture_default_str();
  app.add_flag("--normalize", opt.normalize, "Rescale input to unit norm");
  app.add_flag("--oracle", opt.oracle, "Cross-check measures against the density-matrix oracle");
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--out", out_path, "Write output to this file instead of standard output");

  std::string source = "-";
  auto* measures = app.add_subcommand("measures", "All measures of one state");
  measures->add_option("input", source, "Preset name, JSON file, or - for standard input");

  app.add_subcommand("table5", "Reference states: tabulated vs recomputed measures");

  std::size_t sweep_n = 100;
  std::string sweep_kind = "haar";
  auto* sweep = app.add_subcommand("sweep", "CSV of measures over random states");
  sweep->add_option("--n", sweep_n, "Number of rows")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--kind", sweep_kind, "haar or asd")->check(CLI::IsMember({"haar", "asd"}))->capture_default_str();

  std::string suite = "all";
  std::size_t verify_n = 10000;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite, "propositions, averages, monogamy, ckw, extrema or all")->capture_default_str();
  verify->add_option("--n", verify_n, "Samples per suite")->capture_default_str();

  std::string classify_source = "-";
  auto* classify = app.add_subcommand("classify", "SLOCC class and tangle profile of an ASD state");
  classify->add_option("input", classify_source, "Preset name, JSON file, or - for standard input");

  std::vector<std::string> tangles;
  auto* reconstruct = app.add_subcommand("reconstruct", "ASD state with prescribed pairwise tangles");
  reconstruct->add_option("tangles", tangles, "tau_AB tau_AC tau_BC (decimals or fractions)")->expected(3)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitInput;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "cannot write \"" << out_path << "\"\n";
      return cli::kExitInput;
    }
  }

  std::ostringstream out;
  int code = cli::kExitOk;
  try {
    if (*measures) {
      code = cli::cmd_measures(cli::load_state(source, opt.normalize), opt, out, std::cerr);
    } else if (app.got_subcommand("table5")) {
      code = cli::cmd_table5(opt, out);
    } else if (*sweep) {
      code = cli::cmd_sweep(sweep_n, sweep_kind == "asd" ? cli::SweepKind::Asd : cli::SweepKind::Haar, opt.seed, out);
    } else if (*verify) {
      code = cli::cmd_verify(suite, verify_n, opt, out, std::cerr);
    } else if (*classify) {
      code = cli::cmd_classify(cli::load_state(classify_source, opt.normalize), opt, out, std::cerr);
    } else if (*reconstruct) {
      code = cli::cmd_reconstruct(cli::parse_real(tangles[0], "tau_AB"), cli::parse_real(tangles[1], "tau_AC"),
                                  cli::parse_real(tangles[2], "tau_BC"), opt, out, std::cerr);
    }
  } catch (const cli::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return cli::kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInput;
  }

  if (out_path.empty()) {
    std::cout << out.str() << std::flush;
  } else {
    if (!(file << out.str()) || !file.flush()) {
      std::cerr << "cannot write \"" << out_path << "\"\n";
      return cli::kExitInput;
    }
  }
  return code;
}
