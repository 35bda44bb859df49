#ifndef SMGAME_GAME_H_
#define SMGAME_GAME_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smgame/linalg.h"
#include "smgame/partition.h"

namespace smgame {

using JointView = std::span<const double>;

// pi_i(w)
using ProfitFn = std::function<double(JointView w)>;
// xi_i(w) = d pi_i / d w_i, length d_i
using GradientFn = std::function<Vector(JointView w)>;
// Full d x d Jacobian of the joint field, when known in closed form.
using JacobianFn = std::function<Matrix(JointView w)>;
// f_i(w_i)
using SelfTermFn = std::function<double(std::span<const double> w_i)>;
// g_ij(w_i, w_j) or omega_ij(w_i, w_j)
using PairFn = std::function<double(std::span<const double> w_i,
                                    std::span<const double> w_j)>;

enum class StructureTag { kGeneral, kSmDeclared, kNearSm };

std::string_view ToString(StructureTag tag);

// (alpha_ij, alpha_ji): how much each side of an exchange values the goods.
struct ValuationPair {
  double first = 1.0;
  double second = 1.0;

  bool IsUnit() const { return first == 1.0 && second == 1.0; }
  bool operator==(const ValuationPair&) const = default;
};

// Interaction between players first < second. Only g_ij is stored; the
// partner's term is g_ji(w_j, w_i) = -g_ij(w_i, w_j), so the monetary part is
// zero-sum by construction. `goods` is the optional exchanged quantity
// omega_ij (again omega_ji = -omega_ij), weighted by the valuation pair.
struct CouplingSpec {
  std::size_t first = 0;
  std::size_t second = 1;
  PairFn value;
  PairFn goods;
  ValuationPair valuation;
};

// Aggregate handed to GameDefinition's constructor. Gradients are required;
// everything else is optional.
struct GameSpec {
  std::string name;
  ParameterPartition partition;
  StructureTag tag = StructureTag::kGeneral;
  std::vector<GradientFn> gradients;
  std::vector<ProfitFn> profits;
  std::vector<SelfTermFn> self_terms;
  std::vector<CouplingSpec> couplings;
  JacobianFn jacobian;
};

// An n-player smooth game. Immutable after construction; every oracle must be
// a pure function, so a GameDefinition can be shared across threads.
class GameDefinition {
 public:
  explicit GameDefinition(GameSpec spec);

  const std::string& name() const { return spec_.name; }
  const ParameterPartition& partition() const { return spec_.partition; }
  std::size_t num_players() const { return spec_.partition.num_players(); }
  std::size_t dim() const { return spec_.partition.total_dim(); }
  StructureTag tag() const { return spec_.tag; }
  const std::vector<CouplingSpec>& couplings() const { return spec_.couplings; }

  bool has_profit_oracles() const { return !spec_.profits.empty(); }
  bool has_market_parts() const { return !spec_.self_terms.empty(); }
  bool has_analytic_jacobian() const { return static_cast<bool>(spec_.jacobian); }
  bool has_goods() const;

  // xi_i(w). Throws ArgumentError on a wrong-length w or oracle output and
  // NumericError (carrying the player) on non-finite output.
  Vector PlayerGradient(std::size_t player, JointView w) const;

  // pi_i(w) from the profit oracle, or assembled from self terms and
  // couplings. Throws UnsupportedQuery for gradient-only games.
  double Profit(std::size_t player, JointView w) const;

  // f_i(w_i); requires market parts.
  double SelfTerm(std::size_t player, JointView w) const;

  std::optional<Matrix> AnalyticJacobian(JointView w) const;

 private:
  void CheckPoint(JointView w) const;
  double AssembledProfit(std::size_t player, JointView w) const;

  GameSpec spec_;
};

// Per-player positive learning rates eta.
class LearningRates {
 public:
  explicit LearningRates(std::vector<double> eta);
  static LearningRates Uniform(std::size_t num_players);

  std::size_t size() const { return eta_.size(); }
  double operator[](std::size_t i) const { return eta_[i]; }
  const std::vector<double>& values() const { return eta_; }

  bool operator==(const LearningRates&) const = default;

 private:
  std::vector<double> eta_;
};

// xi(w): the players' gradients concatenated in player order.
Vector EvalSimultaneousGradient(const GameDefinition& game, JointView w);

// xi_eta(w): player i's slice scaled by eta_i.
Vector EvalWeightedGradient(const GameDefinition& game, JointView w,
                            const LearningRates& rates);

double EvalProfit(const GameDefinition& game, std::size_t player, JointView w);

// Largest relative gap |fd - xi| / max(1, |xi|) between central differences of
// pi_i in w_i and the gradient oracle, over all players, coordinates and
// points. Requires a profit representation.
double GradientConsistencyError(const GameDefinition& game,
                                std::span<const Vector> points,
                                double step = 1e-4);

}  // namespace smgame

#endif  // SMGAME_GAME_H_
