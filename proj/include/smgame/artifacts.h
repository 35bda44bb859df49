#ifndef SMGAME_ARTIFACTS_H_
#define SMGAME_ARTIFACTS_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "smgame/calculus.h"
#include "smgame/dynamics.h"
#include "smgame/forecasting.h"
#include "smgame/phase_grid.h"

namespace smgame {

// %.17g, which round-trips every finite double.
std::string FormatDouble(double x);

std::uint64_t Fnv1a64(std::string_view bytes);

// Columns: t, w_0..w_{d-1}, f_1..f_n, s_1..s_n, f_eta, s_eta,
// additivity_residual. Requires recorded ledgers.
void WriteTrajectoryCsv(std::ostream& out, const Trajectory& trajectory);

// Columns: w_0, w_1, xi_0, xi_1, f_eta, sentiment, sentiment_sign.
void WritePhaseGridCsv(std::ostream& out,
                       const std::vector<PhaseGridNode>& nodes);

std::string FixedPointYaml(const FixedPointSearch& search);
std::string StructureVerdictYaml(const std::string& game_name,
                                 const StructureVerdict& verdict);
std::string BoundednessYaml(const BoundednessVerdict& verdict);

struct LegibilityEntry {
  Vector point;
  ForecastLedger ledger;
  bool has_split = false;
  SentimentSplit split;
};
std::string LegibilityYaml(const std::vector<LegibilityEntry>& entries);

}  // namespace smgame

#endif  // SMGAME_ARTIFACTS_H_
