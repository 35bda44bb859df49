#ifndef SMGAME_DYNAMICS_H_
#define SMGAME_DYNAMICS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smgame/errors.h"
#include "smgame/forecasting.h"
#include "smgame/game.h"

namespace smgame {

enum class Method { kRk4, kEuler, kDiscrete };

std::string_view ToString(Method method);

struct IntegratorMeta {
  Method method = Method::kRk4;
  double dt = 0.0;  // base step for discrete runs
  std::size_t steps = 0;
  double noise_std = 0.0;
  std::uint64_t seed = 0;
  std::size_t sample_stride = 1;
};

// Samples of w(t) taken every sample_stride steps, always including t = 0
// and the last step taken.
struct Trajectory {
  std::vector<double> times;
  std::vector<Vector> states;
  std::vector<ForecastLedger> ledgers;  // empty when ledgers were not recorded
  IntegratorMeta meta;

  const Vector& final_state() const { return states.back(); }
  double final_time() const { return times.back(); }
};

// Raised when the state leaves the divergence radius or turns non-finite.
// The trajectory up to the last finite state is kept for post-mortem.
class DivergenceError : public NumericError {
 public:
  DivergenceError(const std::string& what, Trajectory partial,
                  Vector last_finite_state, std::size_t step)
      : NumericError(what, std::nullopt, std::nullopt),
        partial_(std::move(partial)),
        last_state_(std::move(last_finite_state)),
        step_(step) {}

  const Trajectory& partial() const { return partial_; }
  const Vector& last_finite_state() const { return last_state_; }
  std::size_t step() const { return step_; }

 private:
  Trajectory partial_;
  Vector last_state_;
  std::size_t step_;
};

struct ContinuousOptions {
  Method method = Method::kRk4;  // kRk4 or kEuler
  double dt = 0.01;
  std::size_t steps = 1000;
  std::size_t sample_stride = 1;
  bool record_ledgers = true;
  double divergence_radius = 1e6;
  double fd_step = kDefaultFdStep;
};

// Fixed-step integration of dw/dt = xi_eta(w).
Trajectory IntegrateContinuous(const GameDefinition& game, JointView w0,
                               const LearningRates& rates,
                               const ContinuousOptions& options);

struct DiscreteOptions {
  double base_step = 0.05;
  std::size_t steps = 20000;
  double noise_std = 0.01;
  std::uint64_t seed = 0;
  std::size_t sample_stride = 1;
  bool record_ledgers = true;
  double divergence_radius = 1e6;
  double fd_step = kDefaultFdStep;
};

// w <- w + base_step (xi_eta(w) + noise), noise ~ N(0, noise_std^2) i.i.d.
// per coordinate from a generator seeded with `seed` and owned by the run.
Trajectory IntegrateDiscrete(const GameDefinition& game, JointView w0,
                             const LearningRates& rates,
                             const DiscreteOptions& options);

enum class Classification {
  kStableLocalNash,
  kUnstable,
  kSaddleOrIndefinite,
  kInconclusive,
};

std::string_view ToString(Classification c);

struct BlockSpectrum {
  Vector eigenvalues;
  bool negative_definite = false;
  bool positive_definite = false;
};

struct FixedPointReport {
  Vector location;
  double residual = 0.0;  // ||xi(w*)||_inf
  Vector s_eigenvalues;   // ascending
  Classification classification = Classification::kInconclusive;
  double tolerance = 0.0;           // relative eigenvalue threshold
  double absolute_tolerance = 0.0;  // tolerance * ||S||_max
  std::vector<BlockSpectrum> blocks;  // spectra of S_ii

  bool FullNegativeDefinite() const;
  bool FullPositiveDefinite() const;
  bool BlocksNegativeDefinite() const;
  bool BlocksPositiveDefinite() const;
  // Whether the per-player block verdicts reproduce the full-matrix ones.
  bool BlockTestAgrees() const;
};

inline constexpr double kDefaultEigTol = 1e-7;
inline constexpr double kDefaultResidualBound = 1e-8;

// Classifies w* from the spectrum of S(w*) with threshold
// tau = eig_tol * ||S||_max:
//   max eig < -tau  -> stable_local_nash
//   min eig >  tau  -> unstable
//   any |eig| <= tau -> inconclusive
//   otherwise       -> saddle_or_indefinite
// Throws ArgumentError when ||xi(w*)||_inf exceeds residual_bound.
FixedPointReport ClassifyFixedPoint(const GameDefinition& game, JointView w_star,
                                    double eig_tol = kDefaultEigTol,
                                    double residual_bound = kDefaultResidualBound,
                                    double fd_step = kDefaultFdStep);

struct NewtonOptions {
  double tol = 1e-10;
  std::size_t max_iter = 100;
  std::size_t max_halvings = 20;
  double fd_step = kDefaultFdStep;
  double eig_tol = kDefaultEigTol;
};

struct SeedOutcome {
  Vector seed;
  bool converged = false;
  std::size_t iterations = 0;
  Vector root;
  std::string failure;  // empty when converged
};

struct FixedPointSearch {
  std::vector<FixedPointReport> roots;  // deduplicated
  std::vector<SeedOutcome> seeds;
};

// Damped Newton on xi with the finite-difference Jacobian, one run per seed.
// A seed that hits a singular Jacobian or stalls is reported and skipped.
FixedPointSearch FindFixedPoints(const GameDefinition& game,
                                 std::span<const Vector> seeds,
                                 const NewtonOptions& options = {});

struct BoundednessVerdict {
  bool negative_sentiment_on_shell = false;
  double worst_value = 0.0;
  double radius = 0.0;
  std::size_t samples = 0;
};

// Samples w with ||w_i|| = radius for every player (uniform directions) and
// checks that every per-player sentiment eta_i^2 xi_i^T S_ii xi_i is negative.
// Evidence on one shell only; not a boundedness certificate.
BoundednessVerdict BoundednessProbe(const GameDefinition& game, double radius,
                                    std::size_t shell_samples,
                                    const LearningRates& rates,
                                    std::uint64_t seed = 0,
                                    double fd_step = kDefaultFdStep);

}  // namespace smgame

#endif  // SMGAME_DYNAMICS_H_
