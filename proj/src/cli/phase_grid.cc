#include "smgame/phase_grid.h"

#include <algorithm>
#include <cmath>

#include "smgame/calculus.h"
#include "smgame/errors.h"
#include "smgame/kernels.h"

namespace smgame {

std::vector<PhaseGridNode> ComputePhaseGrid(const GameDefinition& game,
                                            const LearningRates& rates,
                                            double lo, double hi,
                                            std::size_t resolution,
                                            double sign_tol) {
  if (game.dim() != 2) {
    throw UnsupportedQuery("phase grids need a planar game (d = 2)");
  }
  if (resolution < 2) throw ArgumentError("grid resolution must be >= 2");
  if (!(hi > lo)) throw ArgumentError("grid needs lo < hi");

  std::vector<PhaseGridNode> nodes;
  nodes.reserve(resolution * resolution);
  const double span = hi - lo;
  const double last = static_cast<double>(resolution - 1);
  for (std::size_t a = 0; a < resolution; ++a) {
    for (std::size_t b = 0; b < resolution; ++b) {
      const Vector w{lo + span * static_cast<double>(a) / last,
                     lo + span * static_cast<double>(b) / last};
      const Vector xi = EvalSimultaneousGradient(game, w);
      const Vector xi_eta = EvalWeightedGradient(game, w, rates);
      const JacobianReport jac = ComputeJacobian(game, w);
      PhaseGridNode node;
      node.w0 = w[0];
      node.w1 = w[1];
      node.xi0 = xi_eta[0];
      node.xi1 = xi_eta[1];
      node.f_eta = 0.5 * kernels::Dot(xi, xi_eta);
      node.sentiment = kernels::QuadraticForm(jac.jacobian, xi_eta);
      const double tol =
          sign_tol * std::max(1.0, kernels::Dot(xi_eta, xi_eta));
      node.sentiment_sign =
          node.sentiment > tol ? 1 : (node.sentiment < -tol ? -1 : 0);
      nodes.push_back(node);
    }
  }
  return nodes;
}

}  // namespace smgame
