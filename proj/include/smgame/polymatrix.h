#ifndef SMGAME_POLYMATRIX_H_
#define SMGAME_POLYMATRIX_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "smgame/game.h"

namespace smgame {

struct InteractionBlock {
  std::size_t first;
  std::size_t second;
  Matrix payoff;  // A_ij; the partner block is A_ji = -A_ij^T
};

struct PolymatrixGame {
  GameDefinition game;
  std::vector<InteractionBlock> blocks;
  double concavity;
};

// Unconstrained zero-sum polymatrix market: g_ij = w_i^T A_ij w_j for every
// pair i < j with entries i.i.d. uniform[-1, 1], and self terms
// f_i = -(c/2) ||w_i||^2. Deterministic in `seed`.
PolymatrixGame RandomPolymatrixSm(std::size_t num_players,
                                  std::vector<std::size_t> dims,
                                  double concavity, std::uint64_t seed);

}  // namespace smgame

#endif  // SMGAME_POLYMATRIX_H_
