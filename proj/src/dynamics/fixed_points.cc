#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "smgame/calculus.h"
#include "smgame/dynamics.h"

namespace smgame {
namespace {

Eigen::MatrixXd ToEigen(const Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

Vector SymmetricEigenvalues(const Matrix& s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      ToEigen(s), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& values = solver.eigenvalues();
  return Vector(values.data(), values.data() + values.size());
}

bool AllBelow(const Vector& eig, double bound) {
  return std::all_of(eig.begin(), eig.end(), [&](double x) { return x < bound; });
}

bool AllAbove(const Vector& eig, double bound) {
  return std::all_of(eig.begin(), eig.end(), [&](double x) { return x > bound; });
}

}  // namespace

std::string_view ToString(Classification c) {
  switch (c) {
    case Classification::kStableLocalNash:
      return "stable_local_nash";
    case Classification::kUnstable:
      return "unstable";
    case Classification::kSaddleOrIndefinite:
      return "saddle_or_indefinite";
    case Classification::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

bool FixedPointReport::FullNegativeDefinite() const {
  return AllBelow(s_eigenvalues, -absolute_tolerance);
}

bool FixedPointReport::FullPositiveDefinite() const {
  return AllAbove(s_eigenvalues, absolute_tolerance);
}

bool FixedPointReport::BlocksNegativeDefinite() const {
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const BlockSpectrum& b) { return b.negative_definite; });
}

bool FixedPointReport::BlocksPositiveDefinite() const {
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const BlockSpectrum& b) { return b.positive_definite; });
}

bool FixedPointReport::BlockTestAgrees() const {
  return FullNegativeDefinite() == BlocksNegativeDefinite() &&
         FullPositiveDefinite() == BlocksPositiveDefinite();
}

FixedPointReport ClassifyFixedPoint(const GameDefinition& game, JointView w_star,
                                    double eig_tol, double residual_bound,
                                    double fd_step) {
  const Vector xi = EvalSimultaneousGradient(game, w_star);
  FixedPointReport report;
  report.location.assign(w_star.begin(), w_star.end());
  report.residual = InfNorm(xi);
  if (report.residual > residual_bound) {
    throw ArgumentError("not a fixed point: ||xi||_inf = " +
                        std::to_string(report.residual));
  }

  const JacobianReport jac = ComputeJacobian(game, w_star, fd_step);
  report.s_eigenvalues = SymmetricEigenvalues(jac.symmetric);
  report.tolerance = eig_tol;
  report.absolute_tolerance = eig_tol * jac.symmetric.MaxAbs();
  const double tau = report.absolute_tolerance;

  const Vector& eig = report.s_eigenvalues;
  const bool near_zero = std::any_of(eig.begin(), eig.end(),
                                     [&](double x) { return std::fabs(x) <= tau; });
  if (eig.back() < -tau) {
    report.classification = Classification::kStableLocalNash;
  } else if (eig.front() > tau) {
    report.classification = Classification::kUnstable;
  } else if (near_zero) {
    report.classification = Classification::kInconclusive;
  } else {
    report.classification = Classification::kSaddleOrIndefinite;
  }

  for (std::size_t i = 0; i < game.num_players(); ++i) {
    BlockSpectrum block;
    block.eigenvalues = SymmetricEigenvalues(jac.SymmetricBlock(i, i));
    block.negative_definite = AllBelow(block.eigenvalues, -tau);
    block.positive_definite = AllAbove(block.eigenvalues, tau);
    report.blocks.push_back(std::move(block));
  }
  return report;
}

FixedPointSearch FindFixedPoints(const GameDefinition& game,
                                 std::span<const Vector> seeds,
                                 const NewtonOptions& options) {
  if (seeds.empty()) throw ArgumentError("fixed-point search needs a seed");
  FixedPointSearch search;
  const std::size_t d = game.dim();

  for (const Vector& seed : seeds) {
    SeedOutcome outcome;
    outcome.seed = seed;
    Vector w = seed;
    try {
      Vector xi = EvalSimultaneousGradient(game, w);
      double residual = InfNorm(xi);
      while (residual > options.tol) {
        if (outcome.iterations == options.max_iter) {
          outcome.failure = "iteration limit reached";
          break;
        }
        ++outcome.iterations;
        const Eigen::FullPivLU<Eigen::MatrixXd> lu(
            ToEigen(FiniteDifferenceJacobian(game, w, options.fd_step)));
        if (!lu.isInvertible()) {
          outcome.failure = "singular Jacobian";
          break;
        }
        const Eigen::VectorXd step =
            lu.solve(Eigen::Map<const Eigen::VectorXd>(xi.data(), d));

        double scale = 1.0;
        bool improved = false;
        Vector trial(d);
        Vector trial_xi;
        for (std::size_t h = 0; h <= options.max_halvings; ++h) {
          for (std::size_t c = 0; c < d; ++c) trial[c] = w[c] - scale * step(c);
          trial_xi = EvalSimultaneousGradient(game, trial);
          if (InfNorm(trial_xi) < residual) {
            improved = true;
            break;
          }
          scale *= 0.5;
        }
        if (!improved) {
          outcome.failure = "damped step failed to reduce ||xi||";
          break;
        }
        w = std::move(trial);
        xi = std::move(trial_xi);
        residual = InfNorm(xi);
      }
      outcome.converged = residual <= options.tol;
    } catch (const NumericError& e) {
      outcome.failure = e.what();
    }
    if (outcome.converged) outcome.root = w;
    search.seeds.push_back(std::move(outcome));
  }

  for (const SeedOutcome& outcome : search.seeds) {
    if (!outcome.converged) continue;
    const bool duplicate = std::any_of(
        search.roots.begin(), search.roots.end(), [&](const FixedPointReport& r) {
          Vector diff(d);
          for (std::size_t c = 0; c < d; ++c) {
            diff[c] = r.location[c] - outcome.root[c];
          }
          return Norm2(diff) < 10.0 * options.tol;
        });
    if (duplicate) continue;
    search.roots.push_back(ClassifyFixedPoint(
        game, outcome.root, options.eig_tol,
        std::max(options.tol, kDefaultResidualBound), options.fd_step));
  }
  return search;
}

}  // namespace smgame
