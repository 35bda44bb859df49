#include "smgame/artifacts.h"

#include <yaml-cpp/yaml.h>

#include <cstdio>

namespace smgame {
namespace {

YAML::Emitter& operator<<(YAML::Emitter& out, const Vector& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (double x : v) out << x;
  return out << YAML::EndSeq;
}

std::string Finish(const YAML::Emitter& out) {
  return std::string(out.c_str()) + "\n";
}

void NewEmitter(YAML::Emitter& out) { out.SetDoublePrecision(17); }

}  // namespace

std::string FormatDouble(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

void WriteTrajectoryCsv(std::ostream& out, const Trajectory& trajectory) {
  if (trajectory.ledgers.size() != trajectory.states.size()) {
    throw ArgumentError("trajectory CSV needs one ledger per sample");
  }
  const std::size_t d = trajectory.states.empty() ? 0 : trajectory.states[0].size();
  const std::size_t n =
      trajectory.ledgers.empty() ? 0 : trajectory.ledgers[0].per_player_forecast.size();
  out << "t";
  for (std::size_t k = 0; k < d; ++k) out << ",w_" << k;
  for (std::size_t i = 1; i <= n; ++i) out << ",f_" << i;
  for (std::size_t i = 1; i <= n; ++i) out << ",s_" << i;
  out << ",f_eta,s_eta,additivity_residual\n";
  for (std::size_t r = 0; r < trajectory.states.size(); ++r) {
    const ForecastLedger& ledger = trajectory.ledgers[r];
    out << FormatDouble(trajectory.times[r]);
    for (double x : trajectory.states[r]) out << ',' << FormatDouble(x);
    for (double x : ledger.per_player_forecast) out << ',' << FormatDouble(x);
    for (double x : ledger.per_player_sentiment) out << ',' << FormatDouble(x);
    out << ',' << FormatDouble(ledger.weighted_forecast) << ','
        << FormatDouble(ledger.aggregate_sentiment) << ','
        << FormatDouble(ledger.additivity_residual) << '\n';
  }
}

void WritePhaseGridCsv(std::ostream& out,
                       const std::vector<PhaseGridNode>& nodes) {
  out << "w_0,w_1,xi_0,xi_1,f_eta,sentiment,sentiment_sign\n";
  for (const PhaseGridNode& node : nodes) {
    out << FormatDouble(node.w0) << ',' << FormatDouble(node.w1) << ','
        << FormatDouble(node.xi0) << ',' << FormatDouble(node.xi1) << ','
        << FormatDouble(node.f_eta) << ',' << FormatDouble(node.sentiment)
        << ',' << node.sentiment_sign << '\n';
  }
}

std::string FixedPointYaml(const FixedPointSearch& search) {
  YAML::Emitter out;
  NewEmitter(out);
  out << YAML::BeginMap;
  out << YAML::Key << "fixed_points" << YAML::Value << YAML::BeginSeq;
  for (const FixedPointReport& r : search.roots) {
    out << YAML::BeginMap;
    out << YAML::Key << "location" << YAML::Value << r.location;
    out << YAML::Key << "residual" << YAML::Value << r.residual;
    out << YAML::Key << "s_eigenvalues" << YAML::Value << r.s_eigenvalues;
    out << YAML::Key << "classification" << YAML::Value
        << std::string(ToString(r.classification));
    out << YAML::Key << "tolerance" << YAML::Value << r.tolerance;
    out << YAML::Key << "absolute_tolerance" << YAML::Value << r.absolute_tolerance;
    out << YAML::Key << "blocks" << YAML::Value << YAML::BeginSeq;
    for (const BlockSpectrum& b : r.blocks) {
      out << YAML::BeginMap;
      out << YAML::Key << "eigenvalues" << YAML::Value << b.eigenvalues;
      out << YAML::Key << "negative_definite" << YAML::Value << b.negative_definite;
      out << YAML::Key << "positive_definite" << YAML::Value << b.positive_definite;
      out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    out << YAML::Key << "block_test_agrees" << YAML::Value << r.BlockTestAgrees();
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::Key << "seeds" << YAML::Value << YAML::BeginSeq;
  for (const SeedOutcome& s : search.seeds) {
    out << YAML::BeginMap;
    out << YAML::Key << "seed" << YAML::Value << s.seed;
    out << YAML::Key << "converged" << YAML::Value << s.converged;
    out << YAML::Key << "iterations" << YAML::Value
        << static_cast<unsigned long long>(s.iterations);
    if (s.converged) {
      out << YAML::Key << "root" << YAML::Value << s.root;
    } else {
      out << YAML::Key << "failure" << YAML::Value << s.failure;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;
  return Finish(out);
}

std::string StructureVerdictYaml(const std::string& game_name,
                                 const StructureVerdict& verdict) {
  YAML::Emitter out;
  NewEmitter(out);
  out << YAML::BeginMap;
  out << YAML::Key << "game" << YAML::Value << game_name;
  out << YAML::Key << "is_sm" << YAML::Value << verdict.is_sm;
  out << YAML::Key << "max_offblock_s_norm" << YAML::Value
      << verdict.max_offblock_s_norm;
  out << YAML::Key << "tolerance" << YAML::Value << verdict.tolerance;
  out << YAML::Key << "sampled_points" << YAML::Value
      << static_cast<unsigned long long>(verdict.sampled_points);
  out << YAML::EndMap;
  return Finish(out);
}

std::string BoundednessYaml(const BoundednessVerdict& verdict) {
  YAML::Emitter out;
  NewEmitter(out);
  out << YAML::BeginMap;
  out << YAML::Key << "negative_sentiment_on_shell" << YAML::Value
      << verdict.negative_sentiment_on_shell;
  out << YAML::Key << "worst_value" << YAML::Value << verdict.worst_value;
  out << YAML::Key << "radius" << YAML::Value << verdict.radius;
  out << YAML::Key << "samples" << YAML::Value
      << static_cast<unsigned long long>(verdict.samples);
  out << YAML::EndMap;
  return Finish(out);
}

std::string LegibilityYaml(const std::vector<LegibilityEntry>& entries) {
  YAML::Emitter out;
  NewEmitter(out);
  out << YAML::BeginMap;
  out << YAML::Key << "points" << YAML::Value << YAML::BeginSeq;
  for (const LegibilityEntry& e : entries) {
    const ForecastLedger& l = e.ledger;
    out << YAML::BeginMap;
    out << YAML::Key << "w" << YAML::Value << e.point;
    out << YAML::Key << "per_player_forecast" << YAML::Value << l.per_player_forecast;
    out << YAML::Key << "weighted_forecast" << YAML::Value << l.weighted_forecast;
    out << YAML::Key << "per_player_sentiment" << YAML::Value << l.per_player_sentiment;
    out << YAML::Key << "per_player_sentiment_sum" << YAML::Value
        << l.SumPerPlayerSentiment();
    out << YAML::Key << "per_player_flow_rate" << YAML::Value << l.per_player_flow_rate;
    out << YAML::Key << "aggregate_sentiment" << YAML::Value << l.aggregate_sentiment;
    out << YAML::Key << "additivity_residual" << YAML::Value << l.additivity_residual;
    out << YAML::Key << "flow_fd_sentiment" << YAML::Value << l.flow_fd_sentiment;
    out << YAML::Key << "flow_check_discrepancy" << YAML::Value
        << l.flow_check_discrepancy;
    if (e.has_split) {
      out << YAML::Key << "near_sm_split" << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "block_sum" << YAML::Value << e.split.block_sum;
      out << YAML::Key << "correction_sum" << YAML::Value << e.split.correction_sum;
      out << YAML::Key << "total" << YAML::Value << e.split.total;
      out << YAML::Key << "residual" << YAML::Value << e.split.Residual();
      out << YAML::EndMap;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;
  return Finish(out);
}

}  // namespace smgame
