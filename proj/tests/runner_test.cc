#include <gtest/gtest.h>
#include <yaml-cpp/yaml.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "oracles.h"
#include "smgame/artifacts.h"
#include "smgame/catalog.h"
#include "smgame/errors.h"
#include "smgame/phase_grid.h"
#include "smgame/polymatrix.h"
#include "smgame/runner.h"

namespace smgame {
namespace {

namespace fs = std::filesystem;
using testing::ReadFile;
using testing::ScratchDir;

int RunText(const std::string& text, const fs::path& dir, std::string* err_out = nullptr,
            std::optional<std::uint64_t> seed = std::nullopt) {
  const fs::path file = dir / "scenario.yaml";
  std::ofstream(file) << text;
  std::ostringstream err;
  RunOptions options;
  options.output_dir = (dir / "out").string();
  options.seed = seed;
  const int code = RunScenarioFile(file.string(), options, err);
  if (err_out) *err_out = err.str();
  return code;
}

std::vector<std::vector<double>> ReadCsv(const fs::path& path, std::string* header) {
  std::istringstream in(ReadFile(path));
  std::string line;
  std::getline(in, *header);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

TEST(RunScenario, MinimalSmSimulateAndClassify) {
  const auto dir = ScratchDir("run_minimal");
  ASSERT_EQ(RunText(R"(schema: smgame-scenario/1
game: {builtin: {name: minimal_sm}}
integrator: {kind: rk4, step: 0.01, steps: 10000, sample_stride: 100}
initial: [[1, 1]]
analyses: [simulate, classify]
)",
                    dir),
            kExitOk);
  std::string header;
  const auto rows = ReadCsv(dir / "out" / "trajectory_0.csv", &header);
  EXPECT_EQ(header, "t,w_0,w_1,f_1,f_2,s_1,s_2,f_eta,s_eta,additivity_residual");
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_LT(std::hypot(rows.back()[1], rows.back()[2]), 1e-3);
  EXPECT_DOUBLE_EQ(rows.back()[0], 100.0);

  const YAML::Node fp = YAML::LoadFile((dir / "out" / "fixed_points.yaml").string());
  ASSERT_EQ(fp["fixed_points"].size(), 1u);
  EXPECT_EQ(fp["fixed_points"][0]["classification"].as<std::string>(), "stable_local_nash");
  EXPECT_LT(std::abs(fp["fixed_points"][0]["location"][0].as<double>()), 1e-9);

  const YAML::Node manifest = YAML::LoadFile((dir / "out" / "manifest.yaml").string());
  EXPECT_EQ(manifest["library_version"].as<std::string>(), LibraryVersion());
  EXPECT_EQ(manifest["status"].as<std::string>(), "ok");
  EXPECT_EQ(manifest["scenario_hash"].as<std::string>().rfind("fnv1a64:", 0), 0u);
  EXPECT_GE(manifest["wall_clock_seconds"].as<double>(), 0.0);
  EXPECT_EQ(manifest["artifacts"].size(), 2u);
}

TEST(RunScenario, PotentialCheckSmVerdict) {
  const auto dir = ScratchDir("run_check_sm");
  ASSERT_EQ(RunText("schema: smgame-scenario/1\ngame: {builtin: {name: potential}}\n"
                    "analyses: [check-sm]\n",
                    dir),
            kExitOk);
  const YAML::Node v = YAML::LoadFile((dir / "out" / "sm_structure.yaml").string());
  EXPECT_FALSE(v["is_sm"].as<bool>());
  EXPECT_NEAR(v["max_offblock_s_norm"].as<double>(), 1.0, 1e-12);
  EXPECT_EQ(v["sampled_points"].as<int>(), 20);
}

TEST(RunScenario, EmptyAnalysesWritesOnlyTheManifest) {
  const auto dir = ScratchDir("run_empty");
  ASSERT_EQ(RunText("schema: smgame-scenario/1\ngame: {builtin: {name: swirls}}\n", dir),
            kExitOk);
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir / "out")) {
    files.push_back(entry.path().filename().string());
  }
  EXPECT_EQ(files, (std::vector<std::string>{"manifest.yaml"}));
}

TEST(RunScenario, ParseErrorExitsTwoWithReport) {
  const auto dir = ScratchDir("run_parse_error");
  std::string err;
  EXPECT_EQ(RunText("schema: smgame-scenario/1\ngame: {builtin: {name: swirls}}\n"
                    "analyses: [simulate]\nintial: [[1, 1]]\n",
                    dir, &err),
            kExitScenarioError);
  EXPECT_NE(err.find("intial"), std::string::npos);
  const YAML::Node report = YAML::LoadFile((dir / "out" / "error.yaml").string());
  EXPECT_EQ(report["exit_code"].as<int>(), 2);
  EXPECT_EQ(report["errors"][0]["field"].as<std::string>(), "intial");
  EXPECT_EQ(report["errors"][0]["line"].as<int>(), 4);
  EXPECT_FALSE(fs::exists(dir / "out" / "manifest.yaml"));
}

TEST(RunScenario, DivergenceExitsThreeAndKeepsPartialOutput) {
  const auto dir = ScratchDir("run_divergence");
  EXPECT_EQ(RunText(R"(schema: smgame-scenario/1
game: {builtin: {name: potential}}
integrator: {steps: 5000, sample_stride: 100}
initial: [[1, 1], [0, 0]]
analyses: [simulate, check-sm]
)",
                    dir),
            kExitDivergence);
  std::string header;
  const auto rows = ReadCsv(dir / "out" / "trajectory_0.csv", &header);
  EXPECT_GT(rows.size(), 10u);
  EXPECT_LT(rows.back()[0], 50.0);
  EXPECT_TRUE(fs::exists(dir / "out" / "trajectory_1.csv"));
  EXPECT_TRUE(fs::exists(dir / "out" / "sm_structure.yaml"));
  const YAML::Node manifest = YAML::LoadFile((dir / "out" / "manifest.yaml").string());
  EXPECT_EQ(manifest["status"].as<std::string>(), "diverged");
  EXPECT_EQ(manifest["errors"][0]["kind"].as<std::string>(), "divergence");
  EXPECT_TRUE(fs::exists(dir / "out" / "error.yaml"));
}

constexpr const char* kNoisy = R"(schema: smgame-scenario/1
game: {builtin: {name: half_game}}
rates: [1, 0.125]
integrator: {kind: discrete, step: 0.05, steps: 3000, noise_std: 0.01, seed: 5, sample_stride: 10}
initial: [[1, 1], [-0.5, 0.25]]
analyses: [simulate, phase-grid, legibility]
grid: {lo: -1, hi: 1, resolution: 9}
)";

TEST(RunScenario, SameScenarioAndSeedGiveIdenticalBytes) {
  const auto a = ScratchDir("run_det_a");
  const auto b = ScratchDir("run_det_b");
  const auto c = ScratchDir("run_det_c");
  ASSERT_EQ(RunText(kNoisy, a), kExitOk);
  ASSERT_EQ(RunText(kNoisy, b), kExitOk);
  ASSERT_EQ(RunText(kNoisy, c, nullptr, 6), kExitOk);
  for (const char* name : {"trajectory_0.csv", "trajectory_1.csv", "phase_grid.csv",
                           "legibility.yaml"}) {
    const std::string bytes = ReadFile(a / "out" / name);
    EXPECT_FALSE(bytes.empty());
    EXPECT_EQ(bytes, ReadFile(b / "out" / name)) << name;
  }
  EXPECT_NE(ReadFile(a / "out" / "trajectory_0.csv"), ReadFile(c / "out" / "trajectory_0.csv"));
  const Scenario reseeded = ScenarioFromManifest((c / "out" / "manifest.yaml").string());
  EXPECT_EQ(reseeded.integrator.seed, 6u);
}

TEST(RunScenario, ManifestScenarioRoundTrips) {
  const auto dir = ScratchDir("run_roundtrip");
  ASSERT_EQ(RunText(kNoisy, dir), kExitOk);
  Scenario expected = ParseScenario(kNoisy);
  expected.output_dir = (dir / "out").string();
  const Scenario restored = ScenarioFromManifest((dir / "out" / "manifest.yaml").string());
  EXPECT_EQ(restored, expected);

  // Re-running the recovered scenario reproduces the artifacts.
  std::ostringstream err;
  RunOptions options;
  options.output_dir = (dir / "again").string();
  ASSERT_EQ(RunScenario(restored, options, err), kExitOk);
  EXPECT_EQ(ReadFile(dir / "out" / "trajectory_1.csv"),
            ReadFile(dir / "again" / "trajectory_1.csv"));
}

TEST(RunScenario, ManifestFileRunsDirectly) {
  const auto dir = ScratchDir("run_manifest_file");
  ASSERT_EQ(RunText(kNoisy, dir), kExitOk);
  std::ostringstream err;
  RunOptions options;
  options.output_dir = (dir / "again").string();
  ASSERT_EQ(RunScenarioFile((dir / "out" / "manifest.yaml").string(), options, err), kExitOk)
      << err.str();
  EXPECT_EQ(ReadFile(dir / "out" / "trajectory_1.csv"),
            ReadFile(dir / "again" / "trajectory_1.csv"));
}

TEST(RunScenario, NearSmLegibilityIncludesSplit) {
  const auto dir = ScratchDir("run_near_sm");
  ASSERT_EQ(RunText(R"(schema: smgame-scenario/1
game:
  near_sm:
    dims: [1, 1]
    concavity: [0.1, 0.1]
    couplings:
      - players: [0, 1]
        goods: [[1]]
        alpha: [2, 1]
initial: [[0.5, -1]]
analyses: [legibility, boundedness]
)",
                    dir),
            kExitOk);
  const YAML::Node l = YAML::LoadFile((dir / "out" / "legibility.yaml").string());
  const YAML::Node split = l["points"][0]["near_sm_split"];
  ASSERT_TRUE(split);
  EXPECT_LE(std::abs(split["residual"].as<double>()), 1e-6);
  const YAML::Node b = YAML::LoadFile((dir / "out" / "boundedness.yaml").string());
  EXPECT_TRUE(b["negative_sentiment_on_shell"].as<bool>());
}

TEST(Cli, BinaryExitCodes) {
  const auto dir = ScratchDir("cli_binary");
  const std::string cli = SMGAME_CLI_PATH;
  std::ofstream(dir / "ok.yaml") << "schema: smgame-scenario/1\n"
                                    "game: {builtin: {name: hamiltonian_pair}}\n"
                                    "analyses: [check-sm]\n";
  std::ofstream(dir / "bad.yaml") << "schema: smgame-scenario/1\nnope: 1\n";
  const auto run = [&](const std::string& args) {
    const int status = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
  };
  EXPECT_EQ(run("run " + (dir / "ok.yaml").string() + " --out " + (dir / "o").string()), 0);
  EXPECT_TRUE(fs::exists(dir / "o" / "sm_structure.yaml"));
  EXPECT_EQ(run("run " + (dir / "bad.yaml").string() + " --out " + (dir / "b").string()), 2);
  EXPECT_EQ(run("run " + (dir / "missing.yaml").string()), 2);
  EXPECT_EQ(run("list-games"), 0);
  EXPECT_EQ(run("frobnicate"), 2);
}

TEST(PhaseGrid, HamiltonianSentimentVanishes) {
  const auto nodes =
      ComputePhaseGrid(BuiltinGame("hamiltonian_pair"), LearningRates::Uniform(2), -3, 3, 21);
  ASSERT_EQ(nodes.size(), 441u);
  for (const PhaseGridNode& n : nodes) {
    EXPECT_LE(std::abs(n.sentiment), 1e-10);
    EXPECT_EQ(n.sentiment_sign, 0);
  }
}

TEST(PhaseGrid, MinimalSmNegativeAwayFromOrigin) {
  const auto nodes =
      ComputePhaseGrid(BuiltinGame("minimal_sm"), LearningRates::Uniform(2), -3, 3, 101);
  for (const PhaseGridNode& n : nodes) {
    if (n.w0 == 0.0 && n.w1 == 0.0) {
      EXPECT_EQ(n.sentiment_sign, 0);
    } else {
      EXPECT_EQ(n.sentiment_sign, -1) << n.w0 << "," << n.w1;
      EXPECT_NEAR(n.sentiment, -0.1 * (n.xi0 * n.xi0 + n.xi1 * n.xi1), 1e-12);
    }
  }
}

TEST(PhaseGrid, SwirlsSignsNearOriginAndCorners) {
  // S = diag(1 - |w_i|): positive inside the unit box, negative where both
  // |w_i| > 1. The origin itself is a fixed point with zero sentiment.
  const auto nodes = ComputePhaseGrid(BuiltinGame("swirls"), LearningRates::Uniform(2), -3, 3, 101);
  ASSERT_EQ(nodes.size(), 101u * 101u);
  EXPECT_EQ(nodes[0].w0, -3.0);
  EXPECT_EQ(nodes[0].w1, -3.0);
  EXPECT_DOUBLE_EQ(nodes[1].w1, -2.94);
  for (const PhaseGridNode& n : nodes) {
    const double r = std::hypot(n.w0, n.w1);
    if (r == 0.0) {
      EXPECT_EQ(n.sentiment_sign, 0);
    } else if (std::abs(n.w0) < 0.5 && std::abs(n.w1) < 0.5) {
      EXPECT_EQ(n.sentiment_sign, 1);
    } else if (std::abs(n.w0) > 1.0 && std::abs(n.w1) > 1.0) {
      EXPECT_EQ(n.sentiment_sign, -1);
    }
  }
}

TEST(PhaseGrid, RequiresPlanarGame) {
  const PolymatrixGame pg = RandomPolymatrixSm(2, {2, 1}, 1.0, 0);
  EXPECT_THROW(ComputePhaseGrid(pg.game, LearningRates::Uniform(2), -1, 1, 5), UnsupportedQuery);
}

TEST(Artifacts, DoublesUseSeventeenDigits) {
  EXPECT_EQ(FormatDouble(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(FormatDouble(1.0 / 3.0)), 1.0 / 3.0);
  std::ostringstream csv;
  WritePhaseGridCsv(csv, {PhaseGridNode{0.5, -1, 1, 2, 2.5, -0.25, -1}});
  EXPECT_EQ(csv.str(), "w_0,w_1,xi_0,xi_1,f_eta,sentiment,sentiment_sign\n"
                       "0.5,-1,1,2,2.5,-0.25,-1\n");
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

}  // namespace
}  // namespace smgame
