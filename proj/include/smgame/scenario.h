#ifndef SMGAME_SCENARIO_H_
#define SMGAME_SCENARIO_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "smgame/dynamics.h"
#include "smgame/errors.h"
#include "smgame/game.h"

namespace smgame {

inline constexpr std::string_view kScenarioSchema = "smgame-scenario/1";

struct BuiltinGameConfig {
  std::string name;
  double epsilon = 0.1;
  bool operator==(const BuiltinGameConfig&) const = default;
};

struct PolymatrixConfig {
  std::size_t players = 2;
  std::vector<std::size_t> dims;
  double concavity = 1.0;
  std::uint64_t seed = 0;
  bool operator==(const PolymatrixConfig&) const = default;
};

struct ExchangeConfig {
  std::size_t first = 0;
  std::size_t second = 1;
  std::vector<Vector> money;  // rows; empty means zero
  std::vector<Vector> goods;
  double alpha_first = 1.0;
  double alpha_second = 1.0;
  bool operator==(const ExchangeConfig&) const = default;
};

struct NearSmConfig {
  std::vector<std::size_t> dims;
  std::vector<double> concavity;
  std::vector<ExchangeConfig> couplings;
  bool operator==(const NearSmConfig&) const = default;
};

using GameConfig = std::variant<BuiltinGameConfig, PolymatrixConfig, NearSmConfig>;

enum class Analysis {
  kSimulate,
  kClassify,
  kCheckSm,
  kLegibility,
  kPhaseGrid,
  kBoundedness,
};

std::string_view ToString(Analysis a);

struct IntegratorConfig {
  Method kind = Method::kRk4;
  double step = 0.01;  // dt, or the base step for discrete runs
  std::size_t steps = 1000;
  double noise_std = 0.0;
  std::uint64_t seed = 0;
  std::size_t sample_stride = 1;
  bool operator==(const IntegratorConfig&) const = default;
};

struct GridConfig {
  double lo = -3.0;
  double hi = 3.0;
  std::size_t resolution = 101;
  bool operator==(const GridConfig&) const = default;
};

struct ClassifyConfig {
  std::vector<Vector> seeds;  // empty: use the initial points
  double newton_tol = 1e-10;
  std::size_t max_iter = 100;
  double eig_tol = kDefaultEigTol;
  bool operator==(const ClassifyConfig&) const = default;
};

struct CheckSmConfig {
  std::size_t points = 20;
  double tolerance = 1e-8;
  double lo = -2.0;
  double hi = 2.0;
  std::uint64_t seed = 0;
  bool operator==(const CheckSmConfig&) const = default;
};

struct BoundednessConfig {
  double radius = 5.0;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  bool operator==(const BoundednessConfig&) const = default;
};

struct Scenario {
  GameConfig game;
  std::vector<double> rates;  // resolved to all ones when omitted
  IntegratorConfig integrator;
  std::vector<Vector> initial;
  std::vector<Analysis> analyses;
  std::optional<GridConfig> grid;
  ClassifyConfig classify;
  CheckSmConfig check_sm;
  BoundednessConfig boundedness;
  std::string output_dir = "smgame-out";

  bool operator==(const Scenario&) const = default;
};

// Parse or validation failure. `field` is a dotted path, `line` is 1-based
// (0 when unknown).
class ScenarioError : public Error {
 public:
  ScenarioError(std::string field, int line, const std::string& message);

  const std::string& field() const { return field_; }
  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::string field_;
  int line_;
  std::string message_;
};

// Parses YAML (JSON is accepted as a subset). Unknown keys are errors.
// Also accepts a run manifest and parses its embedded scenario.
Scenario ParseScenario(std::string_view text);
Scenario LoadScenarioFile(const std::string& path);

// Canonical YAML form; doubles carry 17 significant digits so ParseScenario
// reproduces the same value.
std::string EmitScenario(const Scenario& scenario);

// Scenario embedded under the `scenario` key of a run manifest.
Scenario ScenarioFromManifest(const std::string& manifest_path);

std::size_t PlayerCount(const GameConfig& game);
std::size_t JointDimension(const GameConfig& game);

GameDefinition BuildGame(const GameConfig& game);

}  // namespace smgame

#endif  // SMGAME_SCENARIO_H_
