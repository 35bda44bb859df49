#include <algorithm>
#include <limits>
#include <random>

#include "smgame/dynamics.h"
#include "smgame/kernels.h"

namespace smgame {

BoundednessVerdict BoundednessProbe(const GameDefinition& game, double radius,
                                    std::size_t shell_samples,
                                    const LearningRates& rates,
                                    std::uint64_t seed, double fd_step) {
  if (!(radius > 0.0)) throw ArgumentError("probe radius must be > 0");
  if (shell_samples < 1) throw ArgumentError("probe needs at least one sample");
  if (rates.size() != game.num_players()) {
    throw ArgumentError("learning rates do not match the player count");
  }

  const ParameterPartition& p = game.partition();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  BoundednessVerdict verdict;
  verdict.radius = radius;
  verdict.samples = shell_samples;
  verdict.worst_value = -std::numeric_limits<double>::infinity();
  bool all_negative = true;

  Vector w(game.dim());
  for (std::size_t s = 0; s < shell_samples; ++s) {
    for (std::size_t i = 0; i < game.num_players(); ++i) {
      auto slice = p.Slice(std::span<double>(w), i);
      double norm = 0.0;
      while (norm == 0.0) {
        for (double& x : slice) x = gauss(rng);
        norm = Norm2(slice);
      }
      for (double& x : slice) x *= radius / norm;
    }
    const ForecastLedger ledger = ComputeForecastLedger(game, w, rates, fd_step);
    for (double sentiment : ledger.per_player_sentiment) {
      verdict.worst_value = std::max(verdict.worst_value, sentiment);
      all_negative = all_negative && sentiment < 0.0;
    }
  }
  verdict.negative_sentiment_on_shell = all_negative;
  return verdict;
}

}  // namespace smgame
