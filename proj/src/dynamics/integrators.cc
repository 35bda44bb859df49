#include <cmath>
#include <random>
#include <string>

#include "smgame/dynamics.h"
#include "smgame/kernels.h"

namespace smgame {
namespace {

class Recorder {
 public:
  Recorder(const GameDefinition& game, const LearningRates& rates,
           IntegratorMeta meta, bool record_ledgers, double fd_step)
      : game_(game),
        rates_(rates),
        record_ledgers_(record_ledgers),
        fd_step_(fd_step) {
    trajectory_.meta = meta;
  }

  void Sample(std::size_t step, const Vector& w) {
    trajectory_.times.push_back(static_cast<double>(step) * trajectory_.meta.dt);
    trajectory_.states.push_back(w);
    if (record_ledgers_) {
      trajectory_.ledgers.push_back(
          ComputeForecastLedger(game_, w, rates_, fd_step_));
    }
    last_sampled_ = step;
  }

  bool IsSampleStep(std::size_t step) const {
    return step % trajectory_.meta.sample_stride == 0 ||
           step == trajectory_.meta.steps;
  }

  [[noreturn]] void Diverge(const std::string& why, std::size_t step,
                            const Vector& last_finite, std::size_t last_step) {
    if (last_sampled_ != last_step) {
      trajectory_.times.push_back(static_cast<double>(last_step) *
                                  trajectory_.meta.dt);
      trajectory_.states.push_back(last_finite);
      if (record_ledgers_) {
        try {
          trajectory_.ledgers.push_back(
              ComputeForecastLedger(game_, last_finite, rates_, fd_step_));
        } catch (const Error&) {
          trajectory_.ledgers.push_back(ForecastLedger{});
        }
      }
    }
    throw DivergenceError(why + " at step " + std::to_string(step),
                          std::move(trajectory_), last_finite, step);
  }

  Trajectory Take() { return std::move(trajectory_); }

 private:
  const GameDefinition& game_;
  const LearningRates& rates_;
  bool record_ledgers_;
  double fd_step_;
  std::size_t last_sampled_ = 0;
  Trajectory trajectory_;
};

bool Escaped(const Vector& w, double radius) {
  for (double x : w) {
    if (!std::isfinite(x)) return true;
  }
  return Norm2(w) > radius;
}

void CheckCommon(const GameDefinition& game, JointView w0,
                 const LearningRates& rates, std::size_t stride) {
  if (w0.size() != game.dim()) {
    throw ArgumentError("initial state has the wrong length");
  }
  if (rates.size() != game.num_players()) {
    throw ArgumentError("learning rates do not match the player count");
  }
  if (stride == 0) throw ArgumentError("sample stride must be >= 1");
}

// Template for the step loop shared by all three schemes. `advance` maps the
// current state to the next one and may throw NumericError.
template <typename Advance>
Trajectory Run(const GameDefinition& game, JointView w0,
               const LearningRates& rates, const IntegratorMeta& meta,
               bool record_ledgers, double fd_step, double radius,
               Advance&& advance) {
  Recorder recorder(game, rates, meta, record_ledgers, fd_step);
  Vector w(w0.begin(), w0.end());
  Vector next(w.size());
  recorder.Sample(0, w);
  for (std::size_t step = 1; step <= meta.steps; ++step) {
    try {
      advance(w, next);
    } catch (const NumericError& e) {
      recorder.Diverge(e.what(), step, w, step - 1);
    }
    if (Escaped(next, radius)) {
      recorder.Diverge("state left the divergence radius", step, w, step - 1);
    }
    w.swap(next);
    if (recorder.IsSampleStep(step)) recorder.Sample(step, w);
  }
  return recorder.Take();
}

}  // namespace

std::string_view ToString(Method method) {
  switch (method) {
    case Method::kRk4:
      return "rk4";
    case Method::kEuler:
      return "euler";
    case Method::kDiscrete:
      return "discrete";
  }
  return "rk4";
}

Trajectory IntegrateContinuous(const GameDefinition& game, JointView w0,
                               const LearningRates& rates,
                               const ContinuousOptions& options) {
  CheckCommon(game, w0, rates, options.sample_stride);
  if (!(options.dt > 0.0)) throw ArgumentError("dt must be > 0");
  if (options.steps < 1) throw ArgumentError("steps must be >= 1");
  if (options.method == Method::kDiscrete) {
    throw ArgumentError("use IntegrateDiscrete for discrete-time runs");
  }

  IntegratorMeta meta;
  meta.method = options.method;
  meta.dt = options.dt;
  meta.steps = options.steps;
  meta.sample_stride = options.sample_stride;

  const kernels::KernelTable& k = kernels::Active();
  const std::size_t d = game.dim();
  const double dt = options.dt;

  if (options.method == Method::kEuler) {
    return Run(game, w0, rates, meta, options.record_ledgers, options.fd_step,
               options.divergence_radius, [&](const Vector& w, Vector& next) {
                 const Vector k1 = EvalWeightedGradient(game, w, rates);
                 k.scaled_add(w.data(), dt, k1.data(), next.data(), d);
               });
  }

  Vector stage(d);
  return Run(game, w0, rates, meta, options.record_ledgers, options.fd_step,
             options.divergence_radius, [&](const Vector& w, Vector& next) {
               const Vector k1 = EvalWeightedGradient(game, w, rates);
               k.scaled_add(w.data(), 0.5 * dt, k1.data(), stage.data(), d);
               const Vector k2 = EvalWeightedGradient(game, stage, rates);
               k.scaled_add(w.data(), 0.5 * dt, k2.data(), stage.data(), d);
               const Vector k3 = EvalWeightedGradient(game, stage, rates);
               k.scaled_add(w.data(), dt, k3.data(), stage.data(), d);
               const Vector k4 = EvalWeightedGradient(game, stage, rates);
               k.rk4_combine(w.data(), dt, k1.data(), k2.data(), k3.data(),
                             k4.data(), next.data(), d);
             });
}

Trajectory IntegrateDiscrete(const GameDefinition& game, JointView w0,
                             const LearningRates& rates,
                             const DiscreteOptions& options) {
  CheckCommon(game, w0, rates, options.sample_stride);
  if (!(options.base_step > 0.0)) throw ArgumentError("base step must be > 0");
  if (!(options.noise_std >= 0.0)) throw ArgumentError("noise_std must be >= 0");
  if (options.steps < 1) throw ArgumentError("steps must be >= 1");

  IntegratorMeta meta;
  meta.method = Method::kDiscrete;
  meta.dt = options.base_step;
  meta.steps = options.steps;
  meta.noise_std = options.noise_std;
  meta.seed = options.seed;
  meta.sample_stride = options.sample_stride;

  const kernels::KernelTable& k = kernels::Active();
  const std::size_t d = game.dim();
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> noise(0.0, 1.0);

  return Run(game, w0, rates, meta, options.record_ledgers, options.fd_step,
             options.divergence_radius, [&](const Vector& w, Vector& next) {
               Vector g = EvalWeightedGradient(game, w, rates);
               if (options.noise_std > 0.0) {
                 for (double& x : g) x += options.noise_std * noise(rng);
               }
               k.scaled_add(w.data(), options.base_step, g.data(), next.data(),
                            d);
             });
}

}  // namespace smgame
