#include "smgame/quadrature.h"

#include <cmath>
#include <memory>

#include "smgame/errors.h"

namespace smgame {

GameDefinition GameFromVectorField(VectorField field, std::size_t dim,
                                   std::string name) {
  if (!field) throw ArgumentError("vector field is empty");
  GameSpec spec;
  spec.name = std::move(name);
  spec.partition = ParameterPartition::Scalars(dim);
  auto shared = std::make_shared<const VectorField>(std::move(field));
  for (std::size_t i = 0; i < dim; ++i) {
    spec.gradients.push_back([shared, i](JointView w) {
      const Vector xi = (*shared)(w);
      return Vector{xi.at(i)};
    });
  }
  return GameDefinition(std::move(spec));
}

double ProfitFromVectorField(const VectorField& field,
                             const ParameterPartition& partition,
                             std::size_t player, JointView w,
                             std::size_t steps) {
  if (w.size() != partition.total_dim()) {
    throw ArgumentError("joint parameter has the wrong length");
  }
  if (player >= partition.num_players()) {
    throw ArgumentError("player out of range");
  }
  if (partition.dim(player) != 1) {
    throw UnsupportedQuery(
        "profit reconstruction needs a one-dimensional player");
  }
  if (steps < 2) throw ArgumentError("quadrature needs at least 2 steps");
  if (steps % 2 == 1) ++steps;

  const std::size_t c = partition.offset(player);
  const double upper = w[c];
  const double h = upper / static_cast<double>(steps);
  Vector probe(w.begin(), w.end());
  const auto integrand = [&](double x) {
    probe[c] = x;
    const Vector xi = field(probe);
    if (xi.size() != w.size()) {
      throw ArgumentError("vector field returned the wrong length");
    }
    if (!std::isfinite(xi[c])) {
      throw NumericError("non-finite field value during quadrature", player,
                         c);
    }
    return xi[c];
  };

  double sum = integrand(0.0) + integrand(upper);
  for (std::size_t k = 1; k < steps; ++k) {
    const double weight = (k % 2 == 1) ? 4.0 : 2.0;
    sum += weight * integrand(h * static_cast<double>(k));
  }
  return sum * h / 3.0;
}

}  // namespace smgame
