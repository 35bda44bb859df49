#include "smgame/polymatrix.h"

#include <cmath>
#include <memory>
#include <random>

#include "linear_game.h"
#include "smgame/errors.h"

namespace smgame {

PolymatrixGame RandomPolymatrixSm(std::size_t num_players,
                                  std::vector<std::size_t> dims,
                                  double concavity, std::uint64_t seed) {
  if (num_players < 2) throw ArgumentError("polymatrix game needs n >= 2");
  if (dims.size() != num_players) {
    throw ArgumentError("polymatrix dims must list one entry per player");
  }
  if (!(concavity > 0.0) || !std::isfinite(concavity)) {
    throw ArgumentError("polymatrix concavity must be positive");
  }

  GameSpec spec;
  spec.name = "polymatrix";
  spec.tag = StructureTag::kSmDeclared;
  spec.partition = ParameterPartition(std::move(dims));
  const ParameterPartition& p = spec.partition;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);

  Matrix field(p.total_dim(), p.total_dim());
  for (std::size_t c = 0; c < p.total_dim(); ++c) field(c, c) = -concavity;

  std::vector<InteractionBlock> blocks;
  for (std::size_t i = 0; i < num_players; ++i) {
    spec.self_terms.push_back(internal::QuadraticSelfTerm(concavity));
    for (std::size_t j = i + 1; j < num_players; ++j) {
      Matrix a(p.dim(i), p.dim(j));
      for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = entry(rng);
      }
      for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
          field(p.offset(i) + r, p.offset(j) + c) = a(r, c);
          field(p.offset(j) + c, p.offset(i) + r) = -a(r, c);
        }
      }
      auto shared = std::make_shared<const Matrix>(a);
      CouplingSpec coupling;
      coupling.first = i;
      coupling.second = j;
      coupling.value = [shared](std::span<const double> wi,
                                std::span<const double> wj) {
        return internal::Bilinear(*shared, wi, wj);
      };
      spec.couplings.push_back(std::move(coupling));
      blocks.push_back({i, j, std::move(a)});
    }
  }
  internal::AttachLinearField(spec, std::move(field));
  return PolymatrixGame{GameDefinition(std::move(spec)), std::move(blocks),
                        concavity};
}

}  // namespace smgame
