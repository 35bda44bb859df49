#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "smgame/catalog.h"
#include "smgame/runner.h"

int main(int argc, char** argv) {
  CLI::App app{"Smooth-market game dynamics toolkit"};
  app.set_version_flag("--version", smgame::LibraryVersion());
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "Run the analyses of a scenario file");
  std::string scenario_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  run->add_option("scenario-file", scenario_path, "Scenario file (YAML)")->required();
  CLI::Option* out_opt = run->add_option("--out", out_dir, "Output directory");
  CLI::Option* seed_opt = run->add_option("--seed", seed, "Override sampling seeds");

  CLI::App* list = app.add_subcommand("list-games", "Print the built-in games");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : smgame::kExitScenarioError;
  }

  if (*list) {
    for (const smgame::CatalogEntry& entry : smgame::GameCatalog()) {
      std::cout << entry.key << "\t" << smgame::ToString(entry.tag) << "\t"
                << (entry.uses_epsilon ? "epsilon (default 0.1)" : "-") << "\t"
                << entry.profits << "\n";
    }
    std::cout << "polymatrix\tsm_declared\tplayers, dims, concavity, seed\t"
                 "random zero-sum bilinear market\n";
    std::cout << "near_sm\tnear_sm\tdims, concavity, couplings with alpha pairs\t"
                 "bilinear market with goods exchange\n";
    return 0;
  }

  smgame::RunOptions options;
  if (*out_opt) options.output_dir = out_dir;
  if (*seed_opt) options.seed = seed;
  return smgame::RunScenarioFile(scenario_path, options, std::cerr);
}
