#include <gtest/gtest.h>

#include <cmath>

#include "oracles.h"
#include "smgame/catalog.h"
#include "smgame/errors.h"
#include "smgame/forecasting.h"
#include "smgame/near_sm.h"
#include "smgame/polymatrix.h"

namespace smgame {
namespace {

using testing::UniformPoints;

std::vector<GameDefinition> SmGames() {
  return {BuiltinGame("minimal_sm"), BuiltinGame("swirls"),
          BuiltinGame("hamiltonian_pair"),
          RandomPolymatrixSm(3, {2, 1, 3}, 0.6, 4).game,
          RandomPolymatrixSm(5, {1, 1, 2, 4, 1}, 1.3, 5).game};
}

// d/dt f_eta(w(t)) along dw/dt = xi_eta with f_eta = 1/2 sum_i eta_i ||xi_i||^2,
// by finite differences in the test.
double FlowDerivativeOracle(const GameDefinition& g, const Vector& w,
                            const LearningRates& rates) {
  const Vector v = EvalWeightedGradient(g, w, rates);
  return testing::DirectionalDerivative(
      [&](const Vector& x) {
        const Vector xi = EvalSimultaneousGradient(g, x);
        double s = 0.0;
        for (std::size_t k = 0; k < xi.size(); ++k) {
          s += rates[g.partition().OwnerOf(k)] * xi[k] * xi[k];
        }
        return 0.5 * s;
      },
      w, v, 1e-4);
}

TEST(DirectionalForecast, ZeroSumPairExample) {
  const GameDefinition g = BuiltinGame("hamiltonian_pair");
  for (const Vector& w : UniformPoints(2, 10, -3, 3, 2)) {
    const Vector v = {w[1], -w[0]};
    const DirectionalForecast f = ComputeDirectionalForecast(g, w, v);
    EXPECT_NEAR(f.per_player_value[0] + f.per_player_value[1],
                w[0] * w[0] + w[1] * w[1], 1e-12);
    EXPECT_NEAR(f.aggregate_value, f.per_player_value[0] + f.per_player_value[1], 1e-15);
  }
}

TEST(DirectionalForecast, ZeroDirection) {
  const DirectionalForecast f =
      ComputeDirectionalForecast(BuiltinGame("swirls"), Vector{1, 2}, Vector{0, 0});
  EXPECT_EQ(f.aggregate_value, 0.0);
  EXPECT_EQ(f.aggregate_sentiment, 0.0);
  for (double x : f.per_player_value) EXPECT_EQ(x, 0.0);
  for (double x : f.per_player_sentiment) EXPECT_EQ(x, 0.0);
}

TEST(DirectionalForecast, MinimalSmAlongGradient) {
  const GameDefinition g = BuiltinGame("minimal_sm", 0.1);
  const Vector w = {1, 1};
  const DirectionalForecast f =
      ComputeDirectionalForecast(g, w, EvalSimultaneousGradient(g, w));
  EXPECT_NEAR(f.aggregate_sentiment, -0.202, 1e-12);
  EXPECT_NEAR(f.per_player_sentiment[0] + f.per_player_sentiment[1], -0.202, 1e-12);
}

TEST(ForecastLedger, LegibilityFailureAtOneOne) {
  const double eps = 0.1;
  const GameDefinition g = BuiltinGame("legibility_failure", eps);
  const LearningRates unit = LearningRates::Uniform(2);
  const Vector w = {1, 1};
  const ForecastLedger l = ComputeForecastLedger(g, w, unit);
  // xi = (1 - eps)(1, 1) and J = [[-eps, 1], [1, -eps]], so
  // xi^T J xi = 2 (1 - eps)^3 while each S_ii term is -eps (1 - eps)^2.
  const double aggregate = 2.0 * std::pow(1.0 - eps, 3);
  EXPECT_NEAR(l.aggregate_sentiment, aggregate, 1e-12);
  EXPECT_NEAR(FlowDerivativeOracle(g, w, unit), aggregate, 1e-9);
  EXPECT_NEAR(l.SumPerPlayerSentiment(), -2.0 * eps * (1.0 - eps) * (1.0 - eps), 1e-12);
  EXPECT_GT(l.aggregate_sentiment, 0.0);
  EXPECT_LT(l.SumPerPlayerSentiment(), 0.0);
  EXPECT_NEAR(l.additivity_residual, aggregate + 0.162, 1e-12);
  EXPECT_LT(l.flow_check_discrepancy, 1e-6);
}

TEST(ForecastLedger, HamiltonianConservesForecast) {
  const GameDefinition g = BuiltinGame("hamiltonian_pair");
  for (const Vector& w : UniformPoints(2, 20, -3, 3, 6)) {
    EXPECT_NEAR(ComputeForecastLedger(g, w, LearningRates::Uniform(2)).aggregate_sentiment,
                0.0, 1e-14);
  }
}

TEST(ForecastLedger, FixedPointIsAllZero) {
  for (const CatalogEntry& e : GameCatalog()) {
    const ForecastLedger l =
        ComputeForecastLedger(BuiltinGame(e.key), Vector{0, 0}, LearningRates({2, 0.3}));
    EXPECT_EQ(l.weighted_forecast, 0.0);
    EXPECT_EQ(l.aggregate_sentiment, 0.0);
    for (double x : l.per_player_forecast) EXPECT_EQ(x, 0.0);
    for (double x : l.per_player_sentiment) EXPECT_EQ(x, 0.0);
  }
}

TEST(ForecastLedger, FieldsFollowTheirDefinitions) {
  const GameDefinition g = RandomPolymatrixSm(3, {2, 1, 2}, 0.9, 77).game;
  const LearningRates rates({0.4, 1.7, 1.1});
  for (const Vector& w : UniformPoints(g.dim(), 10, -2, 2, 78)) {
    const ForecastLedger l = ComputeForecastLedger(g, w, rates);
    const Vector xi = EvalSimultaneousGradient(g, w);
    const JacobianReport jac = ComputeJacobian(g, w);
    double weighted = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t o = g.partition().offset(i);
      const std::size_t di = g.partition().dim(i);
      double fi = 0.0;
      double si = 0.0;
      for (std::size_t a = 0; a < di; ++a) {
        fi += 0.5 * xi[o + a] * xi[o + a];
        for (std::size_t b = 0; b < di; ++b) {
          si += xi[o + a] * jac.symmetric(o + a, o + b) * xi[o + b];
        }
      }
      weighted += rates[i] * fi;
      EXPECT_NEAR(l.per_player_forecast[i], fi, 1e-13);
      EXPECT_NEAR(l.per_player_sentiment[i], rates[i] * rates[i] * si, 1e-12);
    }
    EXPECT_NEAR(l.weighted_forecast, weighted, 1e-13);
    double flow_sum = 0.0;
    for (double x : l.per_player_flow_rate) flow_sum += x;
    EXPECT_NEAR(flow_sum, l.aggregate_sentiment, 1e-12);
  }
}

TEST(ForecastLedger, SentimentIsAdditiveInSmGames) {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> eta(0.1, 2.0);
  for (const GameDefinition& g : SmGames()) {
    for (const Vector& w : UniformPoints(g.dim(), 50, -2, 2, 55)) {
      std::vector<double> r(g.num_players());
      for (double& x : r) x = eta(rng);
      const LearningRates rates(r);
      const ForecastLedger l = ComputeForecastLedger(g, w, rates);
      EXPECT_LE(l.additivity_residual, 1e-9) << g.name();
      EXPECT_NEAR(l.aggregate_sentiment, FlowDerivativeOracle(g, w, rates), 1e-4)
          << g.name();
      EXPECT_LE(l.flow_check_discrepancy, 1e-4) << g.name();
    }
  }
}

TEST(ForecastLedger, PotentialGameIsNotLegible) {
  const ForecastLedger l = ComputeForecastLedger(BuiltinGame("potential"), Vector{1, 1},
                                                 LearningRates::Uniform(2));
  EXPECT_GT(l.aggregate_sentiment, 0.0);
  EXPECT_LT(l.SumPerPlayerSentiment(), 0.0);
}

TEST(ForecastLedger, WeightedForecastPositiveAwayFromFixedPoints) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> eta(0.01, 3.0);
  for (const GameDefinition& g : SmGames()) {
    for (const Vector& w : UniformPoints(g.dim(), 20, -2, 2, 56)) {
      std::vector<double> r(g.num_players());
      for (double& x : r) x = eta(rng);
      const double f = WeightedForecast(g, w, LearningRates(r));
      const double xi_norm = testing::Norm(EvalSimultaneousGradient(g, w));
      if (xi_norm > 0.0) {
        EXPECT_GT(f, 0.0);
      }
      EXPECT_GE(f, 0.0);
    }
  }
}

GameDefinition ScalarExchange(double alpha12, double alpha21) {
  BilinearExchange ex;
  ex.money = Matrix::FromRows({{0.3}});
  ex.goods = Matrix::FromRows({{1.0}});
  ex.valuation = {alpha12, alpha21};
  return MakeBilinearMarket({1, 1}, {0.2, 0.4}, {ex});
}

TEST(NearSmSplit, ScalarBilinearCorrectionIsXiProduct) {
  const GameDefinition g = ScalarExchange(2.0, 1.0);
  for (const Vector& w : UniformPoints(2, 20, -2, 2, 91)) {
    const SentimentSplit s = NearSmSentimentSplit(g, w, LearningRates::Uniform(2));
    const Vector xi = EvalSimultaneousGradient(g, w);
    EXPECT_NEAR(s.correction_sum, xi[0] * xi[1], 1e-7);
    EXPECT_NEAR(s.block_sum, -0.2 * xi[0] * xi[0] - 0.4 * xi[1] * xi[1], 1e-12);
    EXPECT_LE(std::abs(s.Residual()), 1e-6);
  }
}

TEST(NearSmSplit, EqualValuationsHaveNoCorrection) {
  const GameDefinition g = ScalarExchange(1.5, 1.5);
  for (const Vector& w : UniformPoints(2, 20, -2, 2, 92)) {
    const SentimentSplit s = NearSmSentimentSplit(g, w, LearningRates({0.5, 1.5}));
    EXPECT_EQ(s.correction_sum, 0.0);
    EXPECT_NEAR(s.total, s.block_sum, 1e-12);
  }
}

TEST(NearSmSplit, FixedPointIsAllZero) {
  const SentimentSplit s =
      NearSmSentimentSplit(ScalarExchange(2.0, 1.0), Vector{0, 0}, LearningRates::Uniform(2));
  EXPECT_EQ(s.block_sum, 0.0);
  EXPECT_EQ(s.correction_sum, 0.0);
  EXPECT_EQ(s.total, 0.0);
}

TEST(NearSmSplit, MultiDimensionalExchangesBalance) {
  BilinearExchange a;
  a.first = 0;
  a.second = 1;
  a.money = Matrix::FromRows({{0.2, -0.5}, {1.0, 0.1}});
  a.goods = Matrix::FromRows({{0.7, 0.3}, {-0.4, 1.2}});
  a.valuation = {2.0, 0.5};
  BilinearExchange b;
  b.first = 1;
  b.second = 2;
  b.money = Matrix::FromRows({{0.4}, {-0.6}});
  b.goods = Matrix::FromRows({{1.1}, {0.2}});
  b.valuation = {0.8, 1.6};
  const GameDefinition g = MakeBilinearMarket({2, 2, 1}, {0.3, 0.5, 0.2}, {a, b});
  for (const Vector& w : UniformPoints(5, 20, -2, 2, 93)) {
    const SentimentSplit s = NearSmSentimentSplit(g, w, LearningRates({0.5, 1.2, 0.9}));
    EXPECT_LE(std::abs(s.Residual()), 1e-6);
  }
}

TEST(NearSmSplit, RequiresGoods) {
  EXPECT_THROW(NearSmSentimentSplit(BuiltinGame("minimal_sm"), Vector{1, 1},
                                    LearningRates::Uniform(2)),
               UnsupportedQuery);
}

TEST(MixedSecondDerivative, BilinearForm) {
  const Matrix m = Matrix::FromRows({{1, 2, 3}, {-1, 0.5, 4}});
  const PairFn f = [&](std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 3; ++c) s += a[r] * m(r, c) * b[c];
    }
    return s;
  };
  const Vector a = {0.3, -0.7};
  const Vector b = {1.0, 2.0, -1.0};
  EXPECT_LE(MaxAbsDifference(MixedSecondDerivative(f, a, b), m), 1e-7);
}

}  // namespace
}  // namespace smgame
