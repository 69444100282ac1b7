// dsup: experiment driver for support-uncertainty verification.
//
// Subcommands: coherence, verify, support, search, picket, landscape.
// See README.md for the document schemas. Exit status: 0 ok, 2 when the
// active pair failed isometry verification, 1 on any error.

#include <iostream>

#include <CLI11.hpp>

#include "dsup/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"support-uncertainty experiments for p-orthonormal basis pairs"};
  app.require_subcommand(1);

  dsup::RunConfig cfg;
  std::string pair_text;
  std::string format_text = "json";
  std::string vector_text;
  std::string grid_text;
  std::string out_text;
  std::string write_pair_text;
  double p_value = 2.0;

  auto* coherence = app.add_subcommand("coherence", "coherences of a pair");
  auto* verify = app.add_subcommand("verify", "check both support inequalities for one vector");
  auto* support = app.add_subcommand("support", "minimal support sizes across eps levels");
  auto* search = app.add_subcommand("search", "random search for low-slack witnesses");
  auto* picket = app.add_subcommand("picket", "the spike-comb equality witness, n = m^2");
  auto* landscape = app.add_subcommand("landscape", "verify one vector over an (eps, delta) grid");

  for (CLI::App* sub : {coherence, verify, support, search, landscape}) {
    sub->add_option("--pair", pair_text,
                    "pair source: fourier:<n> | genperm:<file> | load:<file>")
        ->required();
    sub->add_option("--p", p_value, "norm exponent override (> 1)");
    sub->add_option("--write-pair", write_pair_text,
                    "also save the active pair's matrix file to this path");
  }
  for (CLI::App* sub : {coherence, verify, support, search, picket, landscape}) {
    sub->add_option("--format", format_text, "json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out_text, "write the document here instead of stdout");
  }
  for (CLI::App* sub : {verify, search}) {
    sub->add_option("--eps", cfg.eps, "support level for the first basis, in [0, 1)");
    sub->add_option("--delta", cfg.delta, "support level for the second basis, in [0, 1)");
  }
  for (CLI::App* sub : {verify, support, search, landscape}) {
    sub->add_option("--seed", cfg.seed, "RNG seed (echoed in the document)");
  }
  for (CLI::App* sub : {verify, support, landscape}) {
    sub->add_option("--vector", vector_text,
                    "input vector as a JSON array of numbers or [re,im] pairs "
                    "(default: seeded random)");
  }
  for (CLI::App* sub : {support, landscape}) {
    sub->add_option("--grid", grid_text,
                    "eps list (support) or eps-list:delta-list (landscape)");
  }
  search->add_option("--trials", cfg.trials, "number of random vectors to probe");
  picket->add_option("--m", cfg.picket_m, "comb spacing; the pair has dimension m^2")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = dsup::command_from_string(sub->get_name());
    if (cfg.command != dsup::Command::picket) {
      cfg.pair_source = dsup::parse_pair_source(pair_text);
    }
    auto given = [sub](const std::string& name) {
      const CLI::Option* opt = sub->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    if (given("--p")) cfg.p = p_value;
    if (given("--vector")) cfg.vector_json = vector_text;
    if (given("--grid")) cfg.grid = grid_text;
    if (given("--out")) cfg.output_path = out_text;
    if (given("--write-pair")) cfg.write_pair_path = write_pair_text;
    cfg.format = format_text == "csv" ? dsup::OutputFormat::csv : dsup::OutputFormat::json;

    const dsup::RunResult result = dsup::run_command(cfg);
    if (!cfg.output_path) std::cout << result.document;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "dsup: error: " << e.what() << "\n";
    return 1;
  }
}
