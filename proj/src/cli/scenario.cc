#include "smgame/scenario.h"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "smgame/catalog.h"
#include "smgame/near_sm.h"
#include "smgame/polymatrix.h"

namespace smgame {
namespace {

struct AnalysisName {
  Analysis analysis;
  std::string_view name;
};

constexpr AnalysisName kAnalysisNames[] = {
    {Analysis::kSimulate, "simulate"},     {Analysis::kClassify, "classify"},
    {Analysis::kCheckSm, "check-sm"},      {Analysis::kLegibility, "legibility"},
    {Analysis::kPhaseGrid, "phase-grid"},  {Analysis::kBoundedness, "boundedness"},
};

int LineOf(const YAML::Node& node) {
  const YAML::Mark mark = node.Mark();
  return mark.line >= 0 ? mark.line + 1 : 0;
}

std::string Join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

[[noreturn]] void Fail(const std::string& field, const YAML::Node& node,
                       const std::string& message) {
  throw ScenarioError(field, node ? LineOf(node) : 0, message);
}

void RequireMap(const YAML::Node& node, const std::string& field,
                std::initializer_list<std::string_view> allowed) {
  if (!node.IsMap()) Fail(field, node, "expected a mapping");
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      Fail(Join(field, key), kv.first, "unknown key '" + key + "'");
    }
  }
}

double ReadDouble(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) Fail(field, node, "expected a number");
  try {
    return node.as<double>();
  } catch (const YAML::Exception&) {
    Fail(field, node, "expected a number, got '" + node.Scalar() + "'");
  }
}

double ReadFinite(const YAML::Node& node, const std::string& field) {
  const double x = ReadDouble(node, field);
  if (!std::isfinite(x)) Fail(field, node, "must be finite");
  return x;
}

std::uint64_t ReadUnsigned(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) Fail(field, node, "expected a non-negative integer");
  const std::string& text = node.Scalar();
  std::uint64_t value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    Fail(field, node, "expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

std::string ReadString(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) Fail(field, node, "expected a string");
  return node.Scalar();
}

Vector ReadVector(const YAML::Node& node, const std::string& field) {
  if (!node.IsSequence()) Fail(field, node, "expected a list of numbers");
  Vector out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(ReadFinite(node[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<Vector> ReadRows(const YAML::Node& node, const std::string& field) {
  if (!node.IsSequence()) Fail(field, node, "expected a list of lists");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < node.size(); ++i) {
    rows.push_back(ReadVector(node[i], field + "[" + std::to_string(i) + "]"));
  }
  return rows;
}

std::vector<std::size_t> ReadDims(const YAML::Node& node,
                                  const std::string& field) {
  if (!node.IsSequence() || node.size() == 0) {
    Fail(field, node, "expected a non-empty list of dimensions");
  }
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    const std::uint64_t d = ReadUnsigned(node[i], f);
    if (d == 0) Fail(f, node[i], "dimensions must be positive");
    dims.push_back(static_cast<std::size_t>(d));
  }
  return dims;
}

GameConfig ReadGame(const YAML::Node& node) {
  RequireMap(node, "game", {"builtin", "polymatrix", "near_sm"});
  if (node.size() != 1) {
    Fail("game", node, "exactly one of builtin, polymatrix, near_sm is required");
  }
  if (const YAML::Node b = node["builtin"]) {
    RequireMap(b, "game.builtin", {"name", "epsilon"});
    BuiltinGameConfig cfg;
    if (!b["name"]) Fail("game.builtin.name", b, "missing");
    cfg.name = ReadString(b["name"], "game.builtin.name");
    if (b["epsilon"]) cfg.epsilon = ReadFinite(b["epsilon"], "game.builtin.epsilon");
    return cfg;
  }
  if (const YAML::Node p = node["polymatrix"]) {
    RequireMap(p, "game.polymatrix", {"players", "dims", "concavity", "seed"});
    PolymatrixConfig cfg;
    if (!p["dims"]) Fail("game.polymatrix.dims", p, "missing");
    cfg.dims = ReadDims(p["dims"], "game.polymatrix.dims");
    cfg.players = p["players"] ? ReadUnsigned(p["players"], "game.polymatrix.players")
                               : cfg.dims.size();
    if (cfg.players != cfg.dims.size()) {
      Fail("game.polymatrix.players", p["players"],
           "must equal the number of dims entries");
    }
    if (cfg.players < 2) Fail("game.polymatrix.players", p, "must be >= 2");
    if (p["concavity"]) {
      cfg.concavity = ReadFinite(p["concavity"], "game.polymatrix.concavity");
    }
    if (!(cfg.concavity > 0.0)) {
      Fail("game.polymatrix.concavity", p["concavity"], "must be > 0");
    }
    if (p["seed"]) cfg.seed = ReadUnsigned(p["seed"], "game.polymatrix.seed");
    return cfg;
  }
  const YAML::Node m = node["near_sm"];
  RequireMap(m, "game.near_sm", {"dims", "concavity", "couplings"});
  NearSmConfig cfg;
  if (!m["dims"]) Fail("game.near_sm.dims", m, "missing");
  cfg.dims = ReadDims(m["dims"], "game.near_sm.dims");
  if (!m["concavity"]) Fail("game.near_sm.concavity", m, "missing");
  cfg.concavity = ReadVector(m["concavity"], "game.near_sm.concavity");
  if (cfg.concavity.size() != cfg.dims.size()) {
    Fail("game.near_sm.concavity", m["concavity"], "need one value per player");
  }
  if (m["couplings"]) {
    const YAML::Node list = m["couplings"];
    if (!list.IsSequence()) Fail("game.near_sm.couplings", list, "expected a list");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string f = "game.near_sm.couplings[" + std::to_string(k) + "]";
      const YAML::Node c = list[k];
      RequireMap(c, f, {"players", "money", "goods", "alpha"});
      ExchangeConfig ex;
      if (!c["players"] || !c["players"].IsSequence() || c["players"].size() != 2) {
        Fail(f + ".players", c, "expected [i, j]");
      }
      ex.first = ReadUnsigned(c["players"][0], f + ".players[0]");
      ex.second = ReadUnsigned(c["players"][1], f + ".players[1]");
      if (!(ex.first < ex.second && ex.second < cfg.dims.size())) {
        Fail(f + ".players", c["players"], "players must satisfy i < j < n");
      }
      if (c["money"]) ex.money = ReadRows(c["money"], f + ".money");
      if (c["goods"]) ex.goods = ReadRows(c["goods"], f + ".goods");
      if (c["alpha"]) {
        const Vector alpha = ReadVector(c["alpha"], f + ".alpha");
        if (alpha.size() != 2) Fail(f + ".alpha", c["alpha"], "expected [a_ij, a_ji]");
        ex.alpha_first = alpha[0];
        ex.alpha_second = alpha[1];
      }
      cfg.couplings.push_back(std::move(ex));
    }
  }
  return cfg;
}

Method ReadMethod(const YAML::Node& node, const std::string& field) {
  const std::string kind = ReadString(node, field);
  for (Method m : {Method::kRk4, Method::kEuler, Method::kDiscrete}) {
    if (kind == ToString(m)) return m;
  }
  Fail(field, node, "unknown integrator '" + kind + "' (rk4, euler, discrete)");
}

Scenario ParseNode(const YAML::Node& root) {
  RequireMap(root, "", {"schema", "game", "rates", "integrator", "initial",
                        "analyses", "grid", "classify", "check_sm",
                        "boundedness", "output_dir"});
  if (!root["schema"]) Fail("schema", root, "missing schema key");
  const std::string schema = ReadString(root["schema"], "schema");
  if (schema != kScenarioSchema) {
    Fail("schema", root["schema"],
         "unsupported schema '" + schema + "', expected " +
             std::string(kScenarioSchema));
  }
  if (!root["game"]) Fail("game", root, "missing game");

  Scenario s;
  s.game = ReadGame(root["game"]);
  GameDefinition game = [&] {
    try {
      return BuildGame(s.game);
    } catch (const ArgumentError& e) {
      Fail("game", root["game"], e.what());
    }
  }();
  const std::size_t n = game.num_players();
  const std::size_t d = game.dim();

  if (root["rates"]) {
    s.rates = ReadVector(root["rates"], "rates");
    if (s.rates.size() != n) {
      Fail("rates", root["rates"],
           "expected " + std::to_string(n) + " learning rates");
    }
    for (double eta : s.rates) {
      if (!(eta > 0.0)) Fail("rates", root["rates"], "learning rates must be > 0");
    }
  } else {
    s.rates.assign(n, 1.0);
  }

  if (const YAML::Node in = root["integrator"]) {
    RequireMap(in, "integrator",
               {"kind", "step", "steps", "noise_std", "seed", "sample_stride"});
    if (in["kind"]) s.integrator.kind = ReadMethod(in["kind"], "integrator.kind");
    if (in["step"]) s.integrator.step = ReadFinite(in["step"], "integrator.step");
    if (!(s.integrator.step > 0.0)) Fail("integrator.step", in, "must be > 0");
    if (in["steps"]) s.integrator.steps = ReadUnsigned(in["steps"], "integrator.steps");
    if (s.integrator.steps < 1) Fail("integrator.steps", in, "must be >= 1");
    if (in["noise_std"]) {
      s.integrator.noise_std = ReadFinite(in["noise_std"], "integrator.noise_std");
    }
    if (s.integrator.noise_std < 0.0) Fail("integrator.noise_std", in, "must be >= 0");
    if (s.integrator.noise_std > 0.0 && s.integrator.kind != Method::kDiscrete) {
      Fail("integrator.noise_std", in["noise_std"],
           "gradient noise is only supported by the discrete integrator");
    }
    if (in["seed"]) s.integrator.seed = ReadUnsigned(in["seed"], "integrator.seed");
    if (in["sample_stride"]) {
      s.integrator.sample_stride =
          ReadUnsigned(in["sample_stride"], "integrator.sample_stride");
    }
    if (s.integrator.sample_stride < 1) {
      Fail("integrator.sample_stride", in, "must be >= 1");
    }
  }

  const auto read_points = [&](const YAML::Node& node, const std::string& field) {
    std::vector<Vector> points = ReadRows(node, field);
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (points[k].size() != d) {
        Fail(field + "[" + std::to_string(k) + "]", node[k],
             "expected a point of dimension " + std::to_string(d));
      }
    }
    return points;
  };
  if (root["initial"]) s.initial = read_points(root["initial"], "initial");

  if (const YAML::Node list = root["analyses"]) {
    if (!list.IsSequence()) Fail("analyses", list, "expected a list");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string field = "analyses[" + std::to_string(k) + "]";
      const std::string name = ReadString(list[k], field);
      const auto it = std::find_if(std::begin(kAnalysisNames), std::end(kAnalysisNames),
                                   [&](const AnalysisName& a) { return a.name == name; });
      if (it == std::end(kAnalysisNames)) {
        Fail(field, list[k], "unknown analysis '" + name + "'");
      }
      s.analyses.push_back(it->analysis);
    }
  }
  const auto wants = [&](Analysis a) {
    return std::find(s.analyses.begin(), s.analyses.end(), a) != s.analyses.end();
  };

  if (const YAML::Node g = root["grid"]) {
    RequireMap(g, "grid", {"lo", "hi", "resolution"});
    GridConfig grid;
    if (g["lo"]) grid.lo = ReadFinite(g["lo"], "grid.lo");
    if (g["hi"]) grid.hi = ReadFinite(g["hi"], "grid.hi");
    if (g["resolution"]) grid.resolution = ReadUnsigned(g["resolution"], "grid.resolution");
    if (!(grid.hi > grid.lo)) Fail("grid", g, "needs lo < hi");
    if (grid.resolution < 2) Fail("grid.resolution", g, "must be >= 2");
    s.grid = grid;
  }
  if (wants(Analysis::kPhaseGrid)) {
    if (!s.grid) Fail("grid", root, "phase-grid requires a grid block");
    if (d != 2) Fail("analyses", root["analyses"], "phase-grid needs a planar game (d = 2)");
  }

  if (const YAML::Node c = root["classify"]) {
    RequireMap(c, "classify", {"seeds", "newton_tol", "max_iter", "eig_tol"});
    if (c["seeds"]) s.classify.seeds = read_points(c["seeds"], "classify.seeds");
    if (c["newton_tol"]) s.classify.newton_tol = ReadFinite(c["newton_tol"], "classify.newton_tol");
    if (c["max_iter"]) s.classify.max_iter = ReadUnsigned(c["max_iter"], "classify.max_iter");
    if (c["eig_tol"]) s.classify.eig_tol = ReadFinite(c["eig_tol"], "classify.eig_tol");
    if (!(s.classify.newton_tol > 0.0)) Fail("classify.newton_tol", c, "must be > 0");
    if (!(s.classify.eig_tol >= 0.0)) Fail("classify.eig_tol", c, "must be >= 0");
  }
  if (const YAML::Node c = root["check_sm"]) {
    RequireMap(c, "check_sm", {"points", "tolerance", "lo", "hi", "seed"});
    if (c["points"]) s.check_sm.points = ReadUnsigned(c["points"], "check_sm.points");
    if (c["tolerance"]) s.check_sm.tolerance = ReadFinite(c["tolerance"], "check_sm.tolerance");
    if (c["lo"]) s.check_sm.lo = ReadFinite(c["lo"], "check_sm.lo");
    if (c["hi"]) s.check_sm.hi = ReadFinite(c["hi"], "check_sm.hi");
    if (c["seed"]) s.check_sm.seed = ReadUnsigned(c["seed"], "check_sm.seed");
    if (s.check_sm.points < 1) Fail("check_sm.points", c, "must be >= 1");
    if (!(s.check_sm.hi > s.check_sm.lo)) Fail("check_sm", c, "needs lo < hi");
  }
  if (const YAML::Node b = root["boundedness"]) {
    RequireMap(b, "boundedness", {"radius", "samples", "seed"});
    if (b["radius"]) s.boundedness.radius = ReadFinite(b["radius"], "boundedness.radius");
    if (b["samples"]) s.boundedness.samples = ReadUnsigned(b["samples"], "boundedness.samples");
    if (b["seed"]) s.boundedness.seed = ReadUnsigned(b["seed"], "boundedness.seed");
    if (!(s.boundedness.radius > 0.0)) Fail("boundedness.radius", b, "must be > 0");
    if (s.boundedness.samples < 1) Fail("boundedness.samples", b, "must be >= 1");
  }

  if ((wants(Analysis::kSimulate) || wants(Analysis::kLegibility)) &&
      s.initial.empty()) {
    Fail("initial", root, "simulate and legibility need initial points");
  }
  if (wants(Analysis::kClassify) && s.initial.empty() && s.classify.seeds.empty()) {
    Fail("classify.seeds", root, "classify needs seeds or initial points");
  }

  if (root["output_dir"]) {
    s.output_dir = ReadString(root["output_dir"], "output_dir");
    if (s.output_dir.empty()) Fail("output_dir", root["output_dir"], "must not be empty");
  }
  return s;
}

void EmitVector(YAML::Emitter& out, const Vector& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (double x : v) out << x;
  out << YAML::EndSeq;
}

void EmitRows(YAML::Emitter& out, const std::vector<Vector>& rows) {
  out << YAML::BeginSeq;
  for (const Vector& r : rows) EmitVector(out, r);
  out << YAML::EndSeq;
}

template <typename T>
void EmitUnsigned(YAML::Emitter& out, T value) {
  out << static_cast<unsigned long long>(value);
}

void EmitGame(YAML::Emitter& out, const GameConfig& game) {
  out << YAML::BeginMap;
  if (const auto* b = std::get_if<BuiltinGameConfig>(&game)) {
    out << YAML::Key << "builtin" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << b->name;
    out << YAML::Key << "epsilon" << YAML::Value << b->epsilon;
    out << YAML::EndMap;
  } else if (const auto* p = std::get_if<PolymatrixConfig>(&game)) {
    out << YAML::Key << "polymatrix" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "players" << YAML::Value;
    EmitUnsigned(out, p->players);
    out << YAML::Key << "dims" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (std::size_t dim : p->dims) EmitUnsigned(out, dim);
    out << YAML::EndSeq;
    out << YAML::Key << "concavity" << YAML::Value << p->concavity;
    out << YAML::Key << "seed" << YAML::Value;
    EmitUnsigned(out, p->seed);
    out << YAML::EndMap;
  } else {
    const auto& m = std::get<NearSmConfig>(game);
    out << YAML::Key << "near_sm" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "dims" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (std::size_t dim : m.dims) EmitUnsigned(out, dim);
    out << YAML::EndSeq;
    out << YAML::Key << "concavity" << YAML::Value;
    EmitVector(out, m.concavity);
    out << YAML::Key << "couplings" << YAML::Value << YAML::BeginSeq;
    for (const ExchangeConfig& ex : m.couplings) {
      out << YAML::BeginMap;
      out << YAML::Key << "players" << YAML::Value << YAML::Flow << YAML::BeginSeq;
      EmitUnsigned(out, ex.first);
      EmitUnsigned(out, ex.second);
      out << YAML::EndSeq;
      out << YAML::Key << "money" << YAML::Value;
      EmitRows(out, ex.money);
      out << YAML::Key << "goods" << YAML::Value;
      EmitRows(out, ex.goods);
      out << YAML::Key << "alpha" << YAML::Value;
      EmitVector(out, {ex.alpha_first, ex.alpha_second});
      out << YAML::EndMap;
    }
    out << YAML::EndSeq << YAML::EndMap;
  }
  out << YAML::EndMap;
}

Matrix ToMatrix(const std::vector<Vector>& rows, std::size_t r, std::size_t c,
                const std::string& what) {
  Matrix m(r, c);
  if (rows.empty()) return m;
  if (rows.size() != r) throw ArgumentError(what + " must have d_i rows");
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ArgumentError(what + " must have d_j columns");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

std::string_view ToString(Analysis a) {
  for (const AnalysisName& entry : kAnalysisNames) {
    if (entry.analysis == a) return entry.name;
  }
  return "";
}

ScenarioError::ScenarioError(std::string field, int line,
                             const std::string& message)
    : Error((field.empty() ? std::string("scenario") : field) +
            (line > 0 ? " (line " + std::to_string(line) + ")" : "") + ": " +
            message),
      field_(std::move(field)),
      line_(line),
      message_(message) {}

Scenario ParseScenario(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ScenarioError("", e.mark.line + 1, e.msg);
  }
  if (!root || root.IsNull()) throw ScenarioError("", 0, "empty scenario");
  // A run manifest is accepted in place of the scenario it embeds.
  if (root.IsMap() && !root["schema"] && root["scenario"]) root = root["scenario"];
  try {
    return ParseNode(root);
  } catch (const YAML::Exception& e) {
    throw ScenarioError("", e.mark.line >= 0 ? e.mark.line + 1 : 0, e.msg);
  }
}

Scenario LoadScenarioFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("", 0, "cannot read scenario file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseScenario(buffer.str());
}

std::string EmitScenario(const Scenario& s) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "schema" << YAML::Value << std::string(kScenarioSchema);
  out << YAML::Key << "game" << YAML::Value;
  EmitGame(out, s.game);
  out << YAML::Key << "rates" << YAML::Value;
  EmitVector(out, s.rates);

  out << YAML::Key << "integrator" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "kind" << YAML::Value << std::string(ToString(s.integrator.kind));
  out << YAML::Key << "step" << YAML::Value << s.integrator.step;
  out << YAML::Key << "steps" << YAML::Value;
  EmitUnsigned(out, s.integrator.steps);
  out << YAML::Key << "noise_std" << YAML::Value << s.integrator.noise_std;
  out << YAML::Key << "seed" << YAML::Value;
  EmitUnsigned(out, s.integrator.seed);
  out << YAML::Key << "sample_stride" << YAML::Value;
  EmitUnsigned(out, s.integrator.sample_stride);
  out << YAML::EndMap;

  out << YAML::Key << "initial" << YAML::Value;
  EmitRows(out, s.initial);
  out << YAML::Key << "analyses" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (Analysis a : s.analyses) out << std::string(ToString(a));
  out << YAML::EndSeq;

  if (s.grid) {
    out << YAML::Key << "grid" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "lo" << YAML::Value << s.grid->lo;
    out << YAML::Key << "hi" << YAML::Value << s.grid->hi;
    out << YAML::Key << "resolution" << YAML::Value;
    EmitUnsigned(out, s.grid->resolution);
    out << YAML::EndMap;
  }

  out << YAML::Key << "classify" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "seeds" << YAML::Value;
  EmitRows(out, s.classify.seeds);
  out << YAML::Key << "newton_tol" << YAML::Value << s.classify.newton_tol;
  out << YAML::Key << "max_iter" << YAML::Value;
  EmitUnsigned(out, s.classify.max_iter);
  out << YAML::Key << "eig_tol" << YAML::Value << s.classify.eig_tol;
  out << YAML::EndMap;

  out << YAML::Key << "check_sm" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "points" << YAML::Value;
  EmitUnsigned(out, s.check_sm.points);
  out << YAML::Key << "tolerance" << YAML::Value << s.check_sm.tolerance;
  out << YAML::Key << "lo" << YAML::Value << s.check_sm.lo;
  out << YAML::Key << "hi" << YAML::Value << s.check_sm.hi;
  out << YAML::Key << "seed" << YAML::Value;
  EmitUnsigned(out, s.check_sm.seed);
  out << YAML::EndMap;

  out << YAML::Key << "boundedness" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "radius" << YAML::Value << s.boundedness.radius;
  out << YAML::Key << "samples" << YAML::Value;
  EmitUnsigned(out, s.boundedness.samples);
  out << YAML::Key << "seed" << YAML::Value;
  EmitUnsigned(out, s.boundedness.seed);
  out << YAML::EndMap;

  out << YAML::Key << "output_dir" << YAML::Value << s.output_dir;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

Scenario ScenarioFromManifest(const std::string& manifest_path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(manifest_path);
  } catch (const YAML::Exception& e) {
    throw ScenarioError("", 0, "cannot read manifest: " + e.msg);
  }
  if (!root["scenario"]) throw ScenarioError("scenario", 0, "manifest has no scenario");
  return ParseNode(root["scenario"]);
}

std::size_t PlayerCount(const GameConfig& game) {
  if (std::holds_alternative<BuiltinGameConfig>(game)) return 2;
  if (const auto* p = std::get_if<PolymatrixConfig>(&game)) return p->dims.size();
  return std::get<NearSmConfig>(game).dims.size();
}

std::size_t JointDimension(const GameConfig& game) {
  if (std::holds_alternative<BuiltinGameConfig>(game)) return 2;
  const std::vector<std::size_t>& dims =
      std::holds_alternative<PolymatrixConfig>(game)
          ? std::get<PolymatrixConfig>(game).dims
          : std::get<NearSmConfig>(game).dims;
  std::size_t total = 0;
  for (std::size_t d : dims) total += d;
  return total;
}

GameDefinition BuildGame(const GameConfig& game) {
  if (const auto* b = std::get_if<BuiltinGameConfig>(&game)) {
    return BuiltinGame(b->name, b->epsilon);
  }
  if (const auto* p = std::get_if<PolymatrixConfig>(&game)) {
    return RandomPolymatrixSm(p->players, p->dims, p->concavity, p->seed).game;
  }
  const auto& m = std::get<NearSmConfig>(game);
  std::vector<BilinearExchange> exchanges;
  for (const ExchangeConfig& ex : m.couplings) {
    if (ex.second >= m.dims.size()) throw ArgumentError("coupling player out of range");
    BilinearExchange b;
    b.first = ex.first;
    b.second = ex.second;
    b.money = ToMatrix(ex.money, m.dims[ex.first], m.dims[ex.second], "money");
    b.goods = ToMatrix(ex.goods, m.dims[ex.first], m.dims[ex.second], "goods");
    b.valuation = {ex.alpha_first, ex.alpha_second};
    exchanges.push_back(std::move(b));
  }
  return MakeBilinearMarket(m.dims, m.concavity, std::move(exchanges));
}

}  // namespace smgame
