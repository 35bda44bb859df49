#ifndef SMGAME_RUNNER_H_
#define SMGAME_RUNNER_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "smgame/scenario.h"

namespace smgame {

inline constexpr int kExitOk = 0;
inline constexpr int kExitScenarioError = 2;
inline constexpr int kExitDivergence = 3;

struct RunOptions {
  std::optional<std::string> output_dir;  // overrides the scenario's
  std::optional<std::uint64_t> seed;      // overrides every sampling seed
};

std::string LibraryVersion();

// Applies the overrides and runs every requested analysis in order, writing
// artifacts plus manifest.yaml into the output directory. A diverging
// trajectory keeps its partial CSV, the remaining analyses still run, and the
// exit code is kExitDivergence. Failures are reported on `err` and in
// error.yaml.
int RunScenario(Scenario scenario, const RunOptions& options, std::ostream& err);

// Parses the file first; a ScenarioError gives kExitScenarioError.
int RunScenarioFile(const std::string& path, const RunOptions& options,
                    std::ostream& err);

}  // namespace smgame

#endif  // SMGAME_RUNNER_H_
