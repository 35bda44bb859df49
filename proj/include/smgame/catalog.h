#ifndef SMGAME_CATALOG_H_
#define SMGAME_CATALOG_H_

#include <string>
#include <string_view>
#include <vector>

#include "smgame/game.h"

namespace smgame {

inline constexpr double kDefaultEpsilon = 0.1;

struct CatalogEntry {
  std::string key;
  std::string profits;
  bool uses_epsilon;
  StructureTag tag;
};

// Two-player, one-dimensional examples:
//   potential           pi1 = w1 w2 - e/2 w1^2,    pi2 = w1 w2 - e/2 w2^2
//   half_game           pi1 = w1 w2 - e/2 w1^2,    pi2 = -e/2 w2^2
//   minimal_sm          pi1 = w1 w2 - e/2 w1^2,    pi2 = -w1 w2 - e/2 w2^2
//   legibility_failure  same profits as potential
//   swirls              pi1 = -|w1|^3/6 + w1^2/2 - w1 w2,
//                       pi2 = -|w2|^3/6 + w2^2/2 + w1 w2
//   hamiltonian_pair    pi1 = w1 w2,               pi2 = -w1 w2
const std::vector<CatalogEntry>& GameCatalog();

// Throws ArgumentError for an unknown key or a non-positive epsilon on a
// game that uses it.
GameDefinition BuiltinGame(std::string_view key,
                           double epsilon = kDefaultEpsilon);

}  // namespace smgame

#endif  // SMGAME_CATALOG_H_
