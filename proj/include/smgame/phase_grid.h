#ifndef SMGAME_PHASE_GRID_H_
#define SMGAME_PHASE_GRID_H_

#include <cstddef>
#include <vector>

#include "smgame/game.h"

namespace smgame {

struct PhaseGridNode {
  double w0 = 0.0;
  double w1 = 0.0;
  double xi0 = 0.0;  // components of xi_eta
  double xi1 = 0.0;
  double f_eta = 0.0;  // 1/2 sum_i eta_i ||xi_i||^2
  double sentiment = 0.0;  // xi_eta^T J xi_eta
  int sentiment_sign = 0;
};

// Nodes lo + (hi - lo) k / (resolution - 1) on both axes, w0 varying slowest.
// The sign is 0 when |sentiment| <= sign_tol * max(1, ||xi_eta||^2).
// Throws UnsupportedQuery unless the game is planar (d = 2).
std::vector<PhaseGridNode> ComputePhaseGrid(const GameDefinition& game,
                                            const LearningRates& rates,
                                            double lo, double hi,
                                            std::size_t resolution,
                                            double sign_tol = 1e-12);

}  // namespace smgame

#endif  // SMGAME_PHASE_GRID_H_
