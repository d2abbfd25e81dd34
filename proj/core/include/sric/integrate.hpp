#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sric/errors.hpp"

namespace sric {

using StateVector = std::vector<double>;
using RhsFunction = std::function<StateVector(double, const StateVector&)>;

/// First-order ODE system over a flat real state vector.
struct OdeProblem {
  int dimension = 0;
  RhsFunction rhs;
  double t0 = 0.0;
  double t1 = 0.0;
  StateVector initial;
};

enum class StepMethod { Rk4Fixed, Rkf45Adaptive };

struct StepperConfig {
  StepMethod method = StepMethod::Rk4Fixed;
  // rk4-fixed
  double h = 1e-3;
  // rkf45-adaptive
  double h0 = 1e-3;
  double atol = 1e-10;
  double rtol = 1e-8;
  double hmin = 1e-12;
  double hmax = 0.1;
  // only every record_every-th accepted step is sampled (ends always kept)
  int record_every = 1;

  void validate() const;
  std::string method_name() const;
};

struct TrajectorySample {
  double t;
  StateVector state;
};

/// Time-ordered samples of one integration run. `t` is strictly increasing,
/// the first sample sits at t0 and the last at t1.
struct Trajectory {
  std::vector<TrajectorySample> samples;
  StepperConfig stepper;
  std::string equation;              // label, e.g. "riccati-super"
  std::vector<std::string> columns;  // state column names for CSV output

  std::size_t size() const { return samples.size(); }
  const TrajectorySample& front() const { return samples.front(); }
  const TrajectorySample& back() const { return samples.back(); }

  /// Grid spacing of a uniform trajectory; throws ValidationError when the
  /// spacing varies by more than a relative 1e-9.
  double uniform_spacing() const;
};

/// One classical 4th-order Runge-Kutta step from (t, state) with width h.
StateVector rk4_step(const OdeProblem& problem, double t, const StateVector& state, double h);

/// State magnitude above which a run is declared singular (Riccati flows
/// reach poles in finite time; we locate them instead of stepping through).
inline constexpr double kDivergenceThreshold = 1e12;

/// Integrate `problem` over [t0, t1].
///
/// rk4-fixed takes ceil((t1-t0)/h) steps, shortening the final step to land
/// exactly on t1. rkf45-adaptive uses standard embedded 4(5) error control
/// with per-component scale atol + rtol*|state|; a step whose error ratio
/// exceeds 1 is rejected and retried. Throws StiffnessError when the
/// required step falls below hmin, SingularityError when the sup-norm of the
/// state exceeds kDivergenceThreshold or turns non-finite, and propagates
/// DomainError from the rhs with the failing time attached.
Trajectory integrate(const OdeProblem& problem, const StepperConfig& config);

}  // namespace sric
