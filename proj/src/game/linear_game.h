#ifndef SMGAME_SRC_GAME_LINEAR_GAME_H_
#define SMGAME_SRC_GAME_LINEAR_GAME_H_

#include <memory>

#include "smgame/game.h"
#include "smgame/kernels.h"

namespace smgame::internal {

// Gradient oracles and Jacobian for a game whose joint field is xi(w) = L w.
inline void AttachLinearField(GameSpec& spec, Matrix field) {
  auto shared = std::make_shared<const Matrix>(std::move(field));
  const ParameterPartition& p = spec.partition;
  spec.gradients.clear();
  for (std::size_t i = 0; i < p.num_players(); ++i) {
    const std::size_t offset = p.offset(i);
    const std::size_t rows = p.dim(i);
    spec.gradients.push_back([shared, offset, rows](JointView w) {
      Vector g(rows);
      kernels::Active().gemv(shared->data() + offset * shared->cols(), rows,
                             shared->cols(), w.data(), g.data());
      return g;
    });
  }
  spec.jacobian = [shared](JointView) { return *shared; };
}

// w_i^T m w_j
inline double Bilinear(const Matrix& m, std::span<const double> wi,
                       std::span<const double> wj) {
  double total = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    total += wi[r] * kernels::Dot(m.Row(r), wj);
  }
  return total;
}

inline SelfTermFn QuadraticSelfTerm(double concavity) {
  return [concavity](std::span<const double> wi) {
    return -0.5 * concavity * kernels::Dot(wi, wi);
  };
}

}  // namespace smgame::internal

#endif  // SMGAME_SRC_GAME_LINEAR_GAME_H_
