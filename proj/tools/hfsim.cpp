// hfsim: distances, similarities and ideal-alternative ranking for hesitant
// fuzzy sets.

#include <iostream>

#include <CLI11.hpp>

#include "hfsim/cli.hpp"
#include "hfsim/error.hpp"

int main(int argc, char** argv) {
  using namespace hfsim::cli;

  CLI::App app{"Hesitant fuzzy set distance/similarity measures and decision ranking"};
  app.require_subcommand(1);

  RunConfig config;
  std::string policy = "pessimistic";
  std::string format = "plain";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--policy", policy, "Extension policy")
        ->check(CLI::IsMember({"pessimistic", "optimistic"}));
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  };
  auto add_measure = [&](CLI::App* sub) {
    sub->add_option("--input", config.input, "Input JSON document")->required();
    sub->add_option("--measure", config.measure, "Measure code, e.g. d4, s4, s11")->required();
    sub->add_option("--p", config.p_values, "Parameter values (space or comma separated)")
        ->required()
        ->delimiter(',');
    sub->add_option("--transform", config.transform, "s0 transform: linear|exponential|reciprocal");
    sub->add_option("--base", config.base, "Base distance for s0 and d18");
    add_common(sub);
  };

  auto* distance = app.add_subcommand("distance", "Distance between sets A and B");
  auto* similarity = app.add_subcommand("similarity", "Similarity between sets A and B");
  auto* rank = app.add_subcommand("rank", "Rank alternatives by relative similarity");
  auto* reproduce = app.add_subcommand("reproduce-paper", "Recompute the published example tables");
  add_measure(distance);
  add_measure(similarity);
  add_measure(rank);
  reproduce->add_option("--input", config.input, "Decision problem (defaults to the bundled matrix)");
  add_common(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    config.command = parse_command(app.get_subcommands().front()->get_name());
    config.policy = hfsim::parse_policy(policy);
    config.format = parse_format(format);
  } catch (const hfsim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return run(config, std::cout, std::cerr);
}
