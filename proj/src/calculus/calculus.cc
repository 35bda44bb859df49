#include "smgame/calculus.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "smgame/errors.h"
#include "smgame/forecasting.h"
#include "smgame/kernels.h"

namespace smgame {

Matrix JacobianReport::SymmetricBlock(std::size_t i, std::size_t j) const {
  return symmetric.Block(partition.offset(i), partition.offset(j),
                         partition.dim(i), partition.dim(j));
}

Matrix FiniteDifferenceJacobian(const GameDefinition& game, JointView w,
                                double fd_step) {
  if (!(fd_step > 0.0)) throw ArgumentError("finite-difference step must be > 0");
  const std::size_t d = game.dim();
  if (w.size() != d) throw ArgumentError("joint parameter has the wrong length");
  Matrix j(d, d);
  Vector probe(w.begin(), w.end());
  for (std::size_t c = 0; c < d; ++c) {
    Vector up, down;
    try {
      probe[c] = w[c] + fd_step;
      up = EvalSimultaneousGradient(game, probe);
      probe[c] = w[c] - fd_step;
      down = EvalSimultaneousGradient(game, probe);
    } catch (const NumericError& e) {
      throw NumericError(std::string(e.what()) + " while probing coordinate " +
                             std::to_string(c),
                         e.player(), c);
    }
    probe[c] = w[c];
    for (std::size_t r = 0; r < d; ++r) {
      j(r, c) = (up[r] - down[r]) / (2.0 * fd_step);
    }
  }
  return j;
}

void HelmholtzSplit(const Matrix& j, Matrix& symmetric, Matrix& antisymmetric) {
  const std::size_t d = j.rows();
  symmetric = Matrix(d, d);
  antisymmetric = Matrix(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      symmetric(r, c) = 0.5 * (j(r, c) + j(c, r));
      antisymmetric(r, c) = 0.5 * (j(r, c) - j(c, r));
    }
  }
}

JacobianReport ComputeJacobian(const GameDefinition& game, JointView w,
                               double fd_step, JacobianMode mode) {
  JacobianReport report;
  report.partition = game.partition();
  report.eval_point.assign(w.begin(), w.end());
  std::optional<Matrix> analytic;
  if (mode == JacobianMode::kAuto) analytic = game.AnalyticJacobian(w);
  if (analytic) {
    report.jacobian = std::move(*analytic);
    report.fd_step = 0.0;
  } else {
    report.jacobian = FiniteDifferenceJacobian(game, w, fd_step);
    report.fd_step = fd_step;
  }
  HelmholtzSplit(report.jacobian, report.symmetric, report.antisymmetric);
  return report;
}

double MaxOffBlockAbs(const Matrix& s, const ParameterPartition& partition) {
  double worst = 0.0;
  for (std::size_t r = 0; r < s.rows(); ++r) {
    const std::size_t owner = partition.OwnerOf(r);
    for (std::size_t c = 0; c < s.cols(); ++c) {
      if (partition.OwnerOf(c) == owner) continue;
      worst = std::max(worst, std::fabs(s(r, c)));
    }
  }
  return worst;
}

StructureVerdict VerifySmStructure(const GameDefinition& game,
                                   std::span<const Vector> points,
                                   double tolerance, double fd_step) {
  if (points.empty()) throw ArgumentError("structure check needs a sample point");
  StructureVerdict verdict;
  verdict.tolerance = tolerance;
  for (const Vector& w : points) {
    const JacobianReport report = ComputeJacobian(game, w, fd_step);
    verdict.max_offblock_s_norm =
        std::max(verdict.max_offblock_s_norm,
                 MaxOffBlockAbs(report.symmetric, game.partition()));
    ++verdict.sampled_points;
  }
  verdict.is_sm = verdict.max_offblock_s_norm <= tolerance;
  return verdict;
}

std::vector<Vector> SampleUniformPoints(std::size_t dim, std::size_t count,
                                        double lo, double hi,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<Vector> points(count, Vector(dim));
  for (Vector& w : points) {
    for (double& x : w) x = u(rng);
  }
  return points;
}

double CheckGradientOfWeightedForecast(const GameDefinition& game, JointView w,
                                       const LearningRates& rates,
                                       double fd_step) {
  const JacobianReport report = ComputeJacobian(game, w, fd_step);
  const Vector xi_eta = EvalWeightedGradient(game, w, rates);
  const Vector analytic = kernels::Gemv(report.jacobian.Transposed(), xi_eta);

  Vector probe(w.begin(), w.end());
  double worst = 0.0;
  for (std::size_t c = 0; c < game.dim(); ++c) {
    probe[c] = w[c] + fd_step;
    const double up = WeightedForecast(game, probe, rates);
    probe[c] = w[c] - fd_step;
    const double down = WeightedForecast(game, probe, rates);
    probe[c] = w[c];
    worst = std::max(worst,
                     std::fabs((up - down) / (2.0 * fd_step) - analytic[c]));
  }
  return worst;
}

}  // namespace smgame
