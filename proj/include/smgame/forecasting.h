#ifndef SMGAME_FORECASTING_H_
#define SMGAME_FORECASTING_H_

#include <cstddef>

#include "smgame/calculus.h"
#include "smgame/game.h"

// Two conventions live side by side here:
//  * Directional quantities use the first-order profit forecast v_i^T xi_i
//    and its derivative along v_i, v_i^T S_ii v_i.
//  * Flow quantities use f_i = 1/2 ||xi_i||^2 under dw/dt = xi_eta. The
//    per-player sentiment carries eta_i^2 (the rate at which player i's
//    weighted kinetic term changes when only player i moves), so that in a
//    smooth market the aggregate sentiment is exactly their sum.
namespace smgame {

struct DirectionalForecast {
  Vector direction;
  Vector per_player_value;      // v_i^T xi_i
  double aggregate_value = 0.0;  // v^T xi
  Vector per_player_sentiment;  // v_i^T S_ii v_i
  double aggregate_sentiment = 0.0;  // v^T J v
};

DirectionalForecast ComputeDirectionalForecast(const GameDefinition& game,
                                               JointView w, JointView v,
                                               double fd_step = kDefaultFdStep);

struct ForecastLedger {
  Vector per_player_forecast;  // f_i = 1/2 ||xi_i||^2
  double weighted_forecast = 0.0;  // f_eta = 1/2 sum_i eta_i ||xi_i||^2
  Vector per_player_sentiment;  // eta_i^2 xi_i^T S_ii xi_i
  // eta_i xi_i^T (J xi_eta)_i: player i's forecast change when everyone
  // moves. Sums to aggregate_sentiment in any game.
  Vector per_player_flow_rate;
  double aggregate_sentiment = 0.0;  // xi_eta^T J^T xi_eta
  // |aggregate_sentiment - sum per_player_sentiment|; vanishes in smooth
  // markets, measures the failure of legibility otherwise.
  double additivity_residual = 0.0;
  // Central difference of f_eta along xi_eta, and its gap to
  // aggregate_sentiment.
  double flow_fd_sentiment = 0.0;
  double flow_check_discrepancy = 0.0;

  double SumPerPlayerSentiment() const;
};

// f_eta(w) = sum_i eta_i f_i = 1/2 xi^T xi_eta, the function whose gradient is
// J^T xi_eta. It equals 1/2 ||xi_eta||^2 only for unit rates; that form is not
// monotone along the weighted flow in general.
double WeightedForecast(const GameDefinition& game, JointView w,
                        const LearningRates& rates);

ForecastLedger ComputeForecastLedger(const GameDefinition& game, JointView w,
                                     const LearningRates& rates,
                                     double fd_step = kDefaultFdStep);

// Same, reusing an already computed Jacobian at w.
ForecastLedger ComputeForecastLedger(const GameDefinition& game, JointView w,
                                     const LearningRates& rates,
                                     const JacobianReport& jacobian,
                                     double fd_step = kDefaultFdStep);

struct SentimentSplit {
  double block_sum = 0.0;
  double correction_sum = 0.0;
  double total = 0.0;

  double Residual() const;
};

// Aggregate sentiment of a market with goods exchange, split into the
// per-player block terms and the valuation-mismatch corrections
//   eta_i eta_j (alpha_ij - alpha_ji) xi_i^T (d^2 omega_ij / dw_i dw_j) xi_j,
// one term per exchanging pair. Throws UnsupportedQuery when no coupling
// carries a goods map.
SentimentSplit NearSmSentimentSplit(const GameDefinition& game, JointView w,
                                    const LearningRates& rates,
                                    double fd_step = kDefaultFdStep);

// d^2 f / (d a d b) for f(a, b), a in R^{d_i}, b in R^{d_j}, by central
// differences.
Matrix MixedSecondDerivative(const PairFn& f, std::span<const double> a,
                             std::span<const double> b,
                             double fd_step = kDefaultFdStep);

}  // namespace smgame

#endif  // SMGAME_FORECASTING_H_
