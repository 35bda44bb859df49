#include "smgame/runner.h"

#include <yaml-cpp/yaml.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "smgame/artifacts.h"
#include "smgame/kernels.h"
#include "smgame/phase_grid.h"

namespace smgame {
namespace {

namespace fs = std::filesystem;

struct Failure {
  Failure(std::string kind_in, std::string message_in, std::string field_in = "",
          int line_in = 0)
      : kind(std::move(kind_in)),
        message(std::move(message_in)),
        field(std::move(field_in)),
        line(line_in) {}

  std::string kind;  // scenario, numeric, divergence, io
  std::string message;
  std::string field;
  int line;
};

class Run {
 public:
  Run(const Scenario& scenario, std::ostream& err)
      : scenario_(scenario),
        dir_(scenario.output_dir),
        err_(err),
        game_(BuildGame(scenario.game)),
        rates_(scenario.rates) {}

  int Execute() {
    for (Analysis a : scenario_.analyses) {
      try {
        Dispatch(a);
      } catch (const DivergenceError& e) {
        Report({"divergence", e.what()}, kExitDivergence);
      } catch (const NumericError& e) {
        Report({"numeric", e.what()}, kExitDivergence);
      } catch (const Error& e) {
        Report({"scenario", std::string(ToString(a)) + ": " + e.what()},
               kExitScenarioError);
      }
    }
    return exit_code_;
  }

  const std::vector<std::string>& artifacts() const { return artifacts_; }
  const std::vector<Failure>& failures() const { return failures_; }

 private:
  void Dispatch(Analysis a) {
    switch (a) {
      case Analysis::kSimulate: return Simulate();
      case Analysis::kClassify: return Classify();
      case Analysis::kCheckSm: return CheckSm();
      case Analysis::kLegibility: return Legibility();
      case Analysis::kPhaseGrid: return PhaseGrid();
      case Analysis::kBoundedness: return Boundedness();
    }
  }

  void Report(Failure f, int code) {
    err_ << "smgame: " << f.kind << ": " << f.message << "\n";
    failures_.push_back(std::move(f));
    if (exit_code_ == kExitOk || code == kExitScenarioError) exit_code_ = code;
  }

  void Write(const std::string& name, const std::string& contents) {
    std::ofstream out(dir_ / name, std::ios::binary | std::ios::trunc);
    out << contents;
    out.close();
    if (!out) throw Error("cannot write " + (dir_ / name).string());
    artifacts_.push_back(name);
  }

  Trajectory Integrate(const Vector& w0) const {
    const IntegratorConfig& in = scenario_.integrator;
    if (in.kind == Method::kDiscrete) {
      DiscreteOptions opt;
      opt.base_step = in.step;
      opt.steps = in.steps;
      opt.noise_std = in.noise_std;
      opt.seed = in.seed;
      opt.sample_stride = in.sample_stride;
      return IntegrateDiscrete(game_, w0, rates_, opt);
    }
    ContinuousOptions opt;
    opt.method = in.kind;
    opt.dt = in.step;
    opt.steps = in.steps;
    opt.sample_stride = in.sample_stride;
    return IntegrateContinuous(game_, w0, rates_, opt);
  }

  void Simulate() {
    for (std::size_t k = 0; k < scenario_.initial.size(); ++k) {
      const std::string name = "trajectory_" + std::to_string(k) + ".csv";
      try {
        const Trajectory t = Integrate(scenario_.initial[k]);
        std::ostringstream csv;
        WriteTrajectoryCsv(csv, t);
        Write(name, csv.str());
      } catch (const DivergenceError& e) {
        std::ostringstream csv;
        WriteTrajectoryCsv(csv, e.partial());
        Write(name, csv.str());
        Report({"divergence",
                name + ": " + e.what() + " at step " + std::to_string(e.step())},
               kExitDivergence);
      }
    }
  }

  void Classify() {
    const std::vector<Vector>& seeds = scenario_.classify.seeds.empty()
                                           ? scenario_.initial
                                           : scenario_.classify.seeds;
    NewtonOptions opt;
    opt.tol = scenario_.classify.newton_tol;
    opt.max_iter = scenario_.classify.max_iter;
    opt.eig_tol = scenario_.classify.eig_tol;
    Write("fixed_points.yaml", FixedPointYaml(FindFixedPoints(game_, seeds, opt)));
  }

  void CheckSm() {
    const CheckSmConfig& c = scenario_.check_sm;
    const std::vector<Vector> points =
        SampleUniformPoints(game_.dim(), c.points, c.lo, c.hi, c.seed);
    Write("sm_structure.yaml",
          StructureVerdictYaml(game_.name(),
                               VerifySmStructure(game_, points, c.tolerance)));
  }

  void Legibility() {
    std::vector<LegibilityEntry> entries;
    for (const Vector& w : scenario_.initial) {
      LegibilityEntry e;
      e.point = w;
      e.ledger = ComputeForecastLedger(game_, w, rates_);
      if (game_.has_goods()) {
        e.has_split = true;
        e.split = NearSmSentimentSplit(game_, w, rates_);
      }
      entries.push_back(std::move(e));
    }
    Write("legibility.yaml", LegibilityYaml(entries));
  }

  void PhaseGrid() {
    const GridConfig& g = *scenario_.grid;
    std::ostringstream csv;
    WritePhaseGridCsv(csv, ComputePhaseGrid(game_, rates_, g.lo, g.hi, g.resolution));
    Write("phase_grid.csv", csv.str());
  }

  void Boundedness() {
    const BoundednessConfig& b = scenario_.boundedness;
    Write("boundedness.yaml",
          BoundednessYaml(BoundednessProbe(game_, b.radius, b.samples, rates_, b.seed)));
  }

  const Scenario& scenario_;
  fs::path dir_;
  std::ostream& err_;
  GameDefinition game_;
  LearningRates rates_;
  std::vector<std::string> artifacts_;
  std::vector<Failure> failures_;
  int exit_code_ = kExitOk;
};

void EmitFailures(YAML::Emitter& out, const std::vector<Failure>& failures) {
  out << YAML::BeginSeq;
  for (const Failure& f : failures) {
    out << YAML::BeginMap;
    out << YAML::Key << "kind" << YAML::Value << f.kind;
    out << YAML::Key << "message" << YAML::Value << f.message;
    if (!f.field.empty()) out << YAML::Key << "field" << YAML::Value << f.field;
    if (f.line > 0) out << YAML::Key << "line" << YAML::Value << f.line;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
}

std::string ErrorYaml(int exit_code, const std::vector<Failure>& failures) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "status" << YAML::Value << "error";
  out << YAML::Key << "exit_code" << YAML::Value << exit_code;
  out << YAML::Key << "errors" << YAML::Value;
  EmitFailures(out, failures);
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

bool WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  out.close();
  return static_cast<bool>(out);
}

std::string HashHex(std::uint64_t h) {
  char buffer[20];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(h));
  return buffer;
}

int ScenarioFailure(const Failure& f, const std::optional<fs::path>& dir,
                    std::ostream& err) {
  err << "smgame: " << f.kind << " error: " << f.message << "\n";
  const std::string report = ErrorYaml(kExitScenarioError, {f});
  err << report;
  if (dir) {
    std::error_code ec;
    fs::create_directories(*dir, ec);
    if (!ec) WriteFile(*dir / "error.yaml", report);
  }
  return kExitScenarioError;
}

}  // namespace

std::string LibraryVersion() { return SMGAME_VERSION; }

int RunScenario(Scenario scenario, const RunOptions& options, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  if (options.output_dir) scenario.output_dir = *options.output_dir;
  if (options.seed) {
    scenario.integrator.seed = *options.seed;
    scenario.check_sm.seed = *options.seed;
    scenario.boundedness.seed = *options.seed;
  }
  const fs::path dir = scenario.output_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    return ScenarioFailure({"io", "cannot create output directory '" +
                                      dir.string() + "'", "output_dir", 0},
                           std::nullopt, err);
  }

  const std::string canonical = EmitScenario(scenario);
  std::optional<Run> run;
  try {
    run.emplace(scenario, err);
  } catch (const Error& e) {
    return ScenarioFailure({"scenario", e.what(), "game", 0}, dir, err);
  }
  const int code = run->Execute();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "library_version" << YAML::Value << LibraryVersion();
  out << YAML::Key << "kernels" << YAML::Value << std::string(kernels::Active().name);
  out << YAML::Key << "scenario_hash" << YAML::Value
      << "fnv1a64:" + HashHex(Fnv1a64(canonical));
  out << YAML::Key << "wall_clock_seconds" << YAML::Value << seconds;
  out << YAML::Key << "status" << YAML::Value
      << (code == kExitOk ? "ok" : code == kExitDivergence ? "diverged" : "error");
  out << YAML::Key << "exit_code" << YAML::Value << code;
  out << YAML::Key << "artifacts" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (const std::string& a : run->artifacts()) out << a;
  out << YAML::EndSeq;
  if (!run->failures().empty()) {
    out << YAML::Key << "errors" << YAML::Value;
    EmitFailures(out, run->failures());
  }
  out << YAML::Key << "scenario" << YAML::Value << YAML::Load(canonical);
  out << YAML::EndMap;
  if (!WriteFile(dir / "manifest.yaml", std::string(out.c_str()) + "\n")) {
    err << "smgame: io error: cannot write manifest.yaml\n";
    return kExitScenarioError;
  }
  if (code != kExitOk) WriteFile(dir / "error.yaml", ErrorYaml(code, run->failures()));
  return code;
}

int RunScenarioFile(const std::string& path, const RunOptions& options,
                    std::ostream& err) {
  std::optional<fs::path> dir;
  if (options.output_dir) dir = *options.output_dir;
  Scenario scenario;
  try {
    scenario = LoadScenarioFile(path);
  } catch (const ScenarioError& e) {
    return ScenarioFailure({"scenario", e.what(), e.field(), e.line()}, dir, err);
  }
  return RunScenario(std::move(scenario), options, err);
}

}  // namespace smgame
