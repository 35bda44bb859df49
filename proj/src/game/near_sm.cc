#include "smgame/near_sm.h"

#include <cmath>
#include <memory>

#include "linear_game.h"
#include "smgame/errors.h"

namespace smgame {

GameDefinition MakeBilinearMarket(std::vector<std::size_t> dims,
                                  std::vector<double> concavity,
                                  std::vector<BilinearExchange> exchanges) {
  GameSpec spec;
  spec.name = "bilinear_market";
  spec.partition = ParameterPartition(std::move(dims));
  const ParameterPartition& p = spec.partition;
  const std::size_t n = p.num_players();
  if (concavity.size() != n) {
    throw ArgumentError("need one concavity per player");
  }

  bool unit_valuations = true;
  Matrix field(p.total_dim(), p.total_dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < p.dim(i); ++k) {
      field(p.offset(i) + k, p.offset(i) + k) = -concavity[i];
    }
    spec.self_terms.push_back(internal::QuadraticSelfTerm(concavity[i]));
  }

  for (BilinearExchange& ex : exchanges) {
    if (!(ex.first < ex.second && ex.second < n)) {
      throw ArgumentError("exchange players must satisfy i < j < n");
    }
    const std::size_t di = p.dim(ex.first);
    const std::size_t dj = p.dim(ex.second);
    if (ex.money.rows() == 0 && ex.money.cols() == 0) ex.money = Matrix(di, dj);
    if (ex.goods.rows() == 0 && ex.goods.cols() == 0) ex.goods = Matrix(di, dj);
    if (ex.money.rows() != di || ex.money.cols() != dj ||
        ex.goods.rows() != di || ex.goods.cols() != dj) {
      throw ArgumentError("exchange matrices must be d_i x d_j");
    }
    unit_valuations = unit_valuations && ex.valuation.IsUnit();

    const double a_ij = ex.valuation.first;
    const double a_ji = ex.valuation.second;
    for (std::size_t r = 0; r < di; ++r) {
      for (std::size_t c = 0; c < dj; ++c) {
        const double m = ex.money(r, c);
        const double g = ex.goods(r, c);
        field(p.offset(ex.first) + r, p.offset(ex.second) + c) += m + a_ij * g;
        field(p.offset(ex.second) + c, p.offset(ex.first) + r) -= m + a_ji * g;
      }
    }

    auto money = std::make_shared<const Matrix>(ex.money);
    auto goods = std::make_shared<const Matrix>(ex.goods);
    CouplingSpec coupling;
    coupling.first = ex.first;
    coupling.second = ex.second;
    coupling.value = [money](std::span<const double> wi,
                             std::span<const double> wj) {
      return internal::Bilinear(*money, wi, wj);
    };
    coupling.goods = [goods](std::span<const double> wi,
                             std::span<const double> wj) {
      return internal::Bilinear(*goods, wi, wj);
    };
    coupling.valuation = ex.valuation;
    spec.couplings.push_back(std::move(coupling));
  }

  spec.tag = unit_valuations ? StructureTag::kSmDeclared : StructureTag::kNearSm;
  internal::AttachLinearField(spec, std::move(field));
  return GameDefinition(std::move(spec));
}

}  // namespace smgame
