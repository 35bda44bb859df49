#ifndef SMGAME_CALCULUS_H_
#define SMGAME_CALCULUS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "smgame/game.h"
#include "smgame/linalg.h"

namespace smgame {

inline constexpr double kDefaultFdStep = 1e-4;

enum class JacobianMode {
  kAuto,              // analytic oracle when the game has one
  kFiniteDifference,  // always probe xi
};

// J = S + A with S symmetric and A antisymmetric.
struct JacobianReport {
  Matrix jacobian;
  Matrix symmetric;
  Matrix antisymmetric;
  ParameterPartition partition;
  Vector eval_point;
  double fd_step = 0.0;  // 0 when the analytic oracle was used

  // Block (i, j) of S, i.e. S_ij.
  Matrix SymmetricBlock(std::size_t i, std::size_t j) const;
};

// Column c of J is (xi(w + h e_c) - xi(w - h e_c)) / 2h.
Matrix FiniteDifferenceJacobian(const GameDefinition& game, JointView w,
                                double fd_step = kDefaultFdStep);

JacobianReport ComputeJacobian(const GameDefinition& game, JointView w,
                               double fd_step = kDefaultFdStep,
                               JacobianMode mode = JacobianMode::kAuto);

// Splits J into its symmetric and antisymmetric parts.
void HelmholtzSplit(const Matrix& j, Matrix& symmetric, Matrix& antisymmetric);

// Largest |S(r, c)| with r and c owned by different players.
double MaxOffBlockAbs(const Matrix& s, const ParameterPartition& partition);

struct StructureVerdict {
  bool is_sm = true;
  double max_offblock_s_norm = 0.0;
  double tolerance = 0.0;
  std::size_t sampled_points = 0;
};

StructureVerdict VerifySmStructure(const GameDefinition& game,
                                   std::span<const Vector> points,
                                   double tolerance = 1e-8,
                                   double fd_step = kDefaultFdStep);

// `count` i.i.d. uniform points in [lo, hi]^dim.
std::vector<Vector> SampleUniformPoints(std::size_t dim, std::size_t count,
                                        double lo, double hi,
                                        std::uint64_t seed);

// || finite-difference grad f_eta(w) - J(w)^T xi_eta(w) ||_inf
double CheckGradientOfWeightedForecast(const GameDefinition& game, JointView w,
                                       const LearningRates& rates,
                                       double fd_step = kDefaultFdStep);

}  // namespace smgame

#endif  // SMGAME_CALCULUS_H_
