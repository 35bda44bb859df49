#ifndef SMGAME_NEAR_SM_H_
#define SMGAME_NEAR_SM_H_

#include <cstddef>
#include <vector>

#include "smgame/game.h"

namespace smgame {

// Bilinear exchange between players first < second:
//   money  g_ij     = w_i^T money w_j
//   goods  omega_ij = w_i^T goods w_j
// with player i receiving alpha_ij * omega_ij and player j receiving
// -alpha_ji * omega_ij.
struct BilinearExchange {
  std::size_t first = 0;
  std::size_t second = 1;
  Matrix money;
  Matrix goods;
  ValuationPair valuation;
};

// Market with self terms f_i = -(c_i / 2) ||w_i||^2 and the given exchanges.
// Tagged sm_declared when every valuation is (1, 1), near_sm otherwise.
// Gradients and the Jacobian are analytic; goods maps are attached as
// coupling functions so their mixed derivatives can be probed numerically.
GameDefinition MakeBilinearMarket(std::vector<std::size_t> dims,
                                  std::vector<double> concavity,
                                  std::vector<BilinearExchange> exchanges);

}  // namespace smgame

#endif  // SMGAME_NEAR_SM_H_
