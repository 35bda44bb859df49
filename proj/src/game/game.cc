#include "smgame/game.h"

#include <cmath>
#include <string>

#include "smgame/errors.h"

namespace smgame {

std::string_view ToString(StructureTag tag) {
  switch (tag) {
    case StructureTag::kGeneral:
      return "general";
    case StructureTag::kSmDeclared:
      return "sm_declared";
    case StructureTag::kNearSm:
      return "near_sm";
  }
  return "general";
}

GameDefinition::GameDefinition(GameSpec spec) : spec_(std::move(spec)) {
  const std::size_t n = spec_.partition.num_players();
  if (n == 0) throw ArgumentError("game has no players");
  if (spec_.gradients.size() != n) {
    throw ArgumentError("game needs one gradient oracle per player");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!spec_.gradients[i]) {
      throw ArgumentError("missing gradient oracle for player " +
                          std::to_string(i));
    }
  }
  if (!spec_.profits.empty() && spec_.profits.size() != n) {
    throw ArgumentError("profit oracles must cover every player");
  }
  if (!spec_.self_terms.empty() && spec_.self_terms.size() != n) {
    throw ArgumentError("self terms must cover every player");
  }
  for (const CouplingSpec& c : spec_.couplings) {
    if (!(c.first < c.second && c.second < n)) {
      throw ArgumentError("coupling players must satisfy i < j < n");
    }
    if (!c.value && !c.goods) {
      throw ArgumentError("coupling has neither a value nor a goods map");
    }
    if (spec_.tag == StructureTag::kSmDeclared && !c.valuation.IsUnit()) {
      throw ArgumentError(
          "sm_declared game has a coupling with valuations other than (1, 1)");
    }
  }
}

bool GameDefinition::has_goods() const {
  for (const CouplingSpec& c : spec_.couplings) {
    if (c.goods) return true;
  }
  return false;
}

void GameDefinition::CheckPoint(JointView w) const {
  if (w.size() != dim()) {
    throw ArgumentError("joint parameter has length " +
                        std::to_string(w.size()) + ", game expects " +
                        std::to_string(dim()));
  }
}

Vector GameDefinition::PlayerGradient(std::size_t player, JointView w) const {
  CheckPoint(w);
  if (player >= num_players()) throw ArgumentError("player out of range");
  Vector g = spec_.gradients[player](w);
  if (g.size() != spec_.partition.dim(player)) {
    throw ArgumentError("gradient oracle for player " + std::to_string(player) +
                        " returned length " + std::to_string(g.size()));
  }
  for (double x : g) {
    if (!std::isfinite(x)) {
      throw NumericError(
          "non-finite gradient from player " + std::to_string(player), player,
          std::nullopt);
    }
  }
  return g;
}

double GameDefinition::Profit(std::size_t player, JointView w) const {
  CheckPoint(w);
  if (player >= num_players()) throw ArgumentError("player out of range");
  if (has_profit_oracles()) return spec_.profits[player](w);
  if (has_market_parts()) return AssembledProfit(player, w);
  throw UnsupportedQuery("game '" + name() + "' has no profit representation");
}

double GameDefinition::SelfTerm(std::size_t player, JointView w) const {
  CheckPoint(w);
  if (!has_market_parts()) {
    throw UnsupportedQuery("game '" + name() + "' has no self terms");
  }
  return spec_.self_terms.at(player)(spec_.partition.Slice(w, player));
}

double GameDefinition::AssembledProfit(std::size_t player, JointView w) const {
  const ParameterPartition& p = spec_.partition;
  double total = spec_.self_terms[player](p.Slice(w, player));
  for (const CouplingSpec& c : spec_.couplings) {
    if (c.first != player && c.second != player) continue;
    const auto wi = p.Slice(w, c.first);
    const auto wj = p.Slice(w, c.second);
    const double sign = c.first == player ? 1.0 : -1.0;
    const double alpha =
        c.first == player ? c.valuation.first : c.valuation.second;
    if (c.value) total += sign * c.value(wi, wj);
    if (c.goods) total += sign * alpha * c.goods(wi, wj);
  }
  return total;
}

std::optional<Matrix> GameDefinition::AnalyticJacobian(JointView w) const {
  CheckPoint(w);
  if (!spec_.jacobian) return std::nullopt;
  Matrix j = spec_.jacobian(w);
  if (j.rows() != dim() || j.cols() != dim()) {
    throw ArgumentError("analytic Jacobian has the wrong shape");
  }
  return j;
}

LearningRates::LearningRates(std::vector<double> eta) : eta_(std::move(eta)) {
  for (std::size_t i = 0; i < eta_.size(); ++i) {
    if (!(eta_[i] > 0.0) || !std::isfinite(eta_[i])) {
      throw ArgumentError("learning rate " + std::to_string(i) +
                          " must be positive and finite");
    }
  }
}

LearningRates LearningRates::Uniform(std::size_t num_players) {
  return LearningRates(std::vector<double>(num_players, 1.0));
}

Vector EvalSimultaneousGradient(const GameDefinition& game, JointView w) {
  Vector xi(game.dim());
  const ParameterPartition& p = game.partition();
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const Vector g = game.PlayerGradient(i, w);
    std::copy(g.begin(), g.end(), xi.begin() + p.offset(i));
  }
  return xi;
}

Vector EvalWeightedGradient(const GameDefinition& game, JointView w,
                            const LearningRates& rates) {
  if (rates.size() != game.num_players()) {
    throw ArgumentError("expected " + std::to_string(game.num_players()) +
                        " learning rates, got " + std::to_string(rates.size()));
  }
  Vector xi = EvalSimultaneousGradient(game, w);
  const ParameterPartition& p = game.partition();
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    for (double& x : p.Slice(std::span<double>(xi), i)) x *= rates[i];
  }
  return xi;
}

double EvalProfit(const GameDefinition& game, std::size_t player, JointView w) {
  return game.Profit(player, w);
}

double GradientConsistencyError(const GameDefinition& game,
                                std::span<const Vector> points, double step) {
  if (!(step > 0.0)) throw ArgumentError("finite-difference step must be > 0");
  const ParameterPartition& p = game.partition();
  double worst = 0.0;
  for (const Vector& w : points) {
    Vector probe = w;
    for (std::size_t i = 0; i < game.num_players(); ++i) {
      const Vector g = game.PlayerGradient(i, w);
      for (std::size_t k = 0; k < p.dim(i); ++k) {
        const std::size_t c = p.offset(i) + k;
        probe[c] = w[c] + step;
        const double up = game.Profit(i, probe);
        probe[c] = w[c] - step;
        const double down = game.Profit(i, probe);
        probe[c] = w[c];
        const double fd = (up - down) / (2.0 * step);
        worst = std::max(worst,
                         std::fabs(fd - g[k]) / std::max(1.0, std::fabs(g[k])));
      }
    }
  }
  return worst;
}

}  // namespace smgame
