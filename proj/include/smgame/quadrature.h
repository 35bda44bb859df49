#ifndef SMGAME_QUADRATURE_H_
#define SMGAME_QUADRATURE_H_

#include <cstddef>
#include <functional>

#include "smgame/game.h"

namespace smgame {

using VectorField = std::function<Vector(JointView w)>;

// A d-player game with one coordinate per player whose simultaneous gradient
// is `field`. Carries no profit oracle.
GameDefinition GameFromVectorField(VectorField field, std::size_t dim,
                                   std::string name = "vector_field");

// Profit of a one-dimensional player recovered from the field:
//   pi_i(w) = integral_0^{w_i} xi_i(w_1, .., x, .., w_d) dx
// by composite Simpson with `steps` panels (rounded up to even).
// Throws UnsupportedQuery when d_i > 1.
double ProfitFromVectorField(const VectorField& field,
                             const ParameterPartition& partition,
                             std::size_t player, JointView w,
                             std::size_t steps);

}  // namespace smgame

#endif  // SMGAME_QUADRATURE_H_
