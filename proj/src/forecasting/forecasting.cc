#include "smgame/forecasting.h"

#include <cmath>
#include <numeric>

#include "smgame/errors.h"
#include "smgame/kernels.h"

namespace smgame {
namespace {

void CheckRates(const GameDefinition& game, const LearningRates& rates) {
  if (rates.size() != game.num_players()) {
    throw ArgumentError("learning rates do not match the player count");
  }
}

// x_i^T S_ii x_i for player i.
double BlockQuadratic(const JacobianReport& report, std::size_t i,
                      std::span<const double> x) {
  const ParameterPartition& p = report.partition;
  const Matrix block = report.SymmetricBlock(i, i);
  return kernels::QuadraticForm(block, p.Slice(x, i));
}

}  // namespace

DirectionalForecast ComputeDirectionalForecast(const GameDefinition& game,
                                               JointView w, JointView v,
                                               double fd_step) {
  if (v.size() != game.dim()) {
    throw ArgumentError("direction has the wrong length");
  }
  const ParameterPartition& p = game.partition();
  const Vector xi = EvalSimultaneousGradient(game, w);
  const JacobianReport report = ComputeJacobian(game, w, fd_step);

  DirectionalForecast out;
  out.direction.assign(v.begin(), v.end());
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    out.per_player_value.push_back(
        kernels::Dot(p.Slice(v, i), p.Slice(JointView(xi), i)));
    out.per_player_sentiment.push_back(BlockQuadratic(report, i, v));
  }
  out.aggregate_value = std::accumulate(out.per_player_value.begin(),
                                        out.per_player_value.end(), 0.0);
  out.aggregate_sentiment = kernels::QuadraticForm(report.jacobian, v);
  return out;
}

double ForecastLedger::SumPerPlayerSentiment() const {
  return std::accumulate(per_player_sentiment.begin(),
                         per_player_sentiment.end(), 0.0);
}

double WeightedForecast(const GameDefinition& game, JointView w,
                        const LearningRates& rates) {
  const Vector xi = EvalSimultaneousGradient(game, w);
  const Vector xi_eta = EvalWeightedGradient(game, w, rates);
  return 0.5 * kernels::Dot(xi, xi_eta);
}

ForecastLedger ComputeForecastLedger(const GameDefinition& game, JointView w,
                                     const LearningRates& rates,
                                     double fd_step) {
  return ComputeForecastLedger(game, w, rates,
                               ComputeJacobian(game, w, fd_step), fd_step);
}

ForecastLedger ComputeForecastLedger(const GameDefinition& game, JointView w,
                                     const LearningRates& rates,
                                     const JacobianReport& jacobian,
                                     double fd_step) {
  CheckRates(game, rates);
  const ParameterPartition& p = game.partition();
  const Vector xi = EvalSimultaneousGradient(game, w);
  Vector xi_eta = xi;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    for (double& x : p.Slice(std::span<double>(xi_eta), i)) x *= rates[i];
  }
  const Vector j_xi_eta = kernels::Gemv(jacobian.jacobian, xi_eta);

  ForecastLedger ledger;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const auto xi_i = p.Slice(JointView(xi), i);
    const double eta = rates[i];
    ledger.per_player_forecast.push_back(0.5 * kernels::Dot(xi_i, xi_i));
    ledger.per_player_sentiment.push_back(eta * eta *
                                          BlockQuadratic(jacobian, i, xi));
    ledger.per_player_flow_rate.push_back(
        eta * kernels::Dot(xi_i, p.Slice(JointView(j_xi_eta), i)));
  }
  ledger.weighted_forecast = 0.5 * kernels::Dot(xi, xi_eta);
  ledger.aggregate_sentiment = kernels::Dot(xi_eta, j_xi_eta);
  ledger.additivity_residual =
      std::fabs(ledger.aggregate_sentiment - ledger.SumPerPlayerSentiment());

  Vector probe(w.begin(), w.end());
  kernels::Active().scaled_add(w.data(), fd_step, xi_eta.data(), probe.data(),
                               probe.size());
  const double ahead = WeightedForecast(game, probe, rates);
  kernels::Active().scaled_add(w.data(), -fd_step, xi_eta.data(), probe.data(),
                               probe.size());
  const double behind = WeightedForecast(game, probe, rates);
  ledger.flow_fd_sentiment = (ahead - behind) / (2.0 * fd_step);
  ledger.flow_check_discrepancy =
      std::fabs(ledger.flow_fd_sentiment - ledger.aggregate_sentiment);
  return ledger;
}

double SentimentSplit::Residual() const {
  return std::fabs(total - block_sum - correction_sum);
}

Matrix MixedSecondDerivative(const PairFn& f, std::span<const double> a,
                             std::span<const double> b, double fd_step) {
  if (!(fd_step > 0.0)) throw ArgumentError("finite-difference step must be > 0");
  Vector pa(a.begin(), a.end());
  Vector pb(b.begin(), b.end());
  Matrix h(a.size(), b.size());
  const double scale = 1.0 / (4.0 * fd_step * fd_step);
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < b.size(); ++c) {
      double sum = 0.0;
      for (const double sa : {1.0, -1.0}) {
        for (const double sb : {1.0, -1.0}) {
          pa[r] = a[r] + sa * fd_step;
          pb[c] = b[c] + sb * fd_step;
          sum += sa * sb * f(pa, pb);
        }
      }
      pa[r] = a[r];
      pb[c] = b[c];
      h(r, c) = sum * scale;
    }
  }
  return h;
}

SentimentSplit NearSmSentimentSplit(const GameDefinition& game, JointView w,
                                    const LearningRates& rates,
                                    double fd_step) {
  if (!game.has_goods()) {
    throw UnsupportedQuery("game '" + game.name() +
                           "' has no goods exchange to split sentiment over");
  }
  CheckRates(game, rates);
  const ParameterPartition& p = game.partition();
  const JacobianReport report = ComputeJacobian(game, w, fd_step);
  const Vector xi = EvalSimultaneousGradient(game, w);
  const Vector xi_eta = EvalWeightedGradient(game, w, rates);

  SentimentSplit split;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    split.block_sum += rates[i] * rates[i] * BlockQuadratic(report, i, xi);
  }
  for (const CouplingSpec& c : game.couplings()) {
    if (!c.goods) continue;
    const Matrix mixed = MixedSecondDerivative(c.goods, p.Slice(w, c.first),
                                               p.Slice(w, c.second), fd_step);
    const Vector h_xi_j = kernels::Gemv(mixed, p.Slice(JointView(xi), c.second));
    const double coupling_term =
        kernels::Dot(p.Slice(JointView(xi), c.first), h_xi_j);
    split.correction_sum += rates[c.first] * rates[c.second] *
                            (c.valuation.first - c.valuation.second) *
                            coupling_term;
  }
  split.total = kernels::QuadraticForm(report.jacobian, xi_eta);
  return split;
}

}  // namespace smgame
