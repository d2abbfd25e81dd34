#include "sric/integrate.hpp"

#include <algorithm>
#include <cmath>

namespace sric {

void StepperConfig::validate() const {
  if (method == StepMethod::Rk4Fixed) {
    if (!(h > 0.0)) throw ValidationError("rk4-fixed requires h > 0");
  } else {
    if (!(h0 > 0.0)) throw ValidationError("rkf45-adaptive requires h0 > 0");
    if (!(atol > 0.0) || !(rtol > 0.0)) throw ValidationError("tolerances must be > 0");
    if (!(hmin > 0.0) || hmin > hmax) throw ValidationError("need 0 < hmin <= hmax");
  }
  if (record_every < 1) throw ValidationError("record_every must be >= 1");
}

std::string StepperConfig::method_name() const {
  return method == StepMethod::Rk4Fixed ? "rk4-fixed" : "rkf45-adaptive";
}

double Trajectory::uniform_spacing() const {
  if (samples.size() < 2) throw ValidationError("trajectory has fewer than 2 samples");
  const double h = (samples.back().t - samples.front().t) / (samples.size() - 1);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const double dt = samples[i + 1].t - samples[i].t;
    if (std::abs(dt - h) > 1e-9 * std::max(1.0, std::abs(h))) {
      throw ValidationError("trajectory grid is not uniform");
    }
  }
  return h;
}

namespace {

StateVector call_rhs(const OdeProblem& p, double t, const StateVector& y) {
  try {
    StateVector dy = p.rhs(t, y);
    if (static_cast<int>(dy.size()) != p.dimension) {
      throw ValidationError("rhs returned a vector of wrong dimension");
    }
    return dy;
  } catch (DomainError& e) {
    throw DomainError(std::string(e.what()) + " during rhs evaluation", t);
  }
}

StateVector axpy(const StateVector& y, double s, const StateVector& d) {
  StateVector out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + s * d[i];
  return out;
}

void check_state(const StateVector& y, double t) {
  for (double v : y) {
    if (!std::isfinite(v) || std::abs(v) > kDivergenceThreshold) {
      throw SingularityError("state diverged (movable singularity)", t);
    }
  }
}

struct Recorder {
  Trajectory* traj;
  int every;
  long step_index = 0;

  void start(double t, const StateVector& y) { traj->samples.push_back({t, y}); }
  void accept(double t, const StateVector& y, bool final_step) {
    ++step_index;
    if (final_step || step_index % every == 0) {
      traj->samples.push_back({t, y});
    }
  }
};

Trajectory integrate_rk4(const OdeProblem& p, const StepperConfig& cfg) {
  Trajectory traj;
  traj.stepper = cfg;
  Recorder rec{&traj, cfg.record_every};

  const double span = p.t1 - p.t0;
  const long n_steps = static_cast<long>(std::ceil(span / cfg.h));
  StateVector y = p.initial;
  double t = p.t0;
  rec.start(t, y);
  for (long i = 0; i < n_steps; ++i) {
    const bool last = (i == n_steps - 1);
    const double t_next = last ? p.t1 : p.t0 + (i + 1) * cfg.h;
    y = rk4_step(p, t, y, t_next - t);
    t = t_next;
    check_state(y, t);
    rec.accept(t, y, last);
  }
  return traj;
}

// Fehlberg 4(5) tableau.
constexpr double kC[6] = {0.0, 1.0 / 4, 3.0 / 8, 12.0 / 13, 1.0, 1.0 / 2};
constexpr double kA[6][5] = {
    {},
    {1.0 / 4},
    {3.0 / 32, 9.0 / 32},
    {1932.0 / 2197, -7200.0 / 2197, 7296.0 / 2197},
    {439.0 / 216, -8.0, 3680.0 / 513, -845.0 / 4104},
    {-8.0 / 27, 2.0, -3544.0 / 2565, 1859.0 / 4104, -11.0 / 40}};
constexpr double kB4[6] = {25.0 / 216, 0.0, 1408.0 / 2565, 2197.0 / 4104, -1.0 / 5, 0.0};
constexpr double kB5[6] = {16.0 / 135, 0.0, 6656.0 / 12825, 28561.0 / 56430, -9.0 / 50, 2.0 / 55};

Trajectory integrate_rkf45(const OdeProblem& p, const StepperConfig& cfg) {
  Trajectory traj;
  traj.stepper = cfg;
  Recorder rec{&traj, cfg.record_every};

  const int n = p.dimension;
  StateVector y = p.initial;
  double t = p.t0;
  double h = std::min(cfg.h0, cfg.hmax);
  rec.start(t, y);

  while (t < p.t1) {
    bool final_step = false;
    if (t + h >= p.t1) {
      h = p.t1 - t;
      final_step = true;
    }

    StateVector k[6];
    k[0] = call_rhs(p, t, y);
    for (int s = 1; s < 6; ++s) {
      StateVector ys = y;
      for (int j = 0; j < s; ++j) {
        if (kA[s][j] == 0.0) continue;
        for (int i = 0; i < n; ++i) ys[i] += h * kA[s][j] * k[j][i];
      }
      k[s] = call_rhs(p, t + kC[s] * h, ys);
    }

    StateVector y4(n), y5(n);
    for (int i = 0; i < n; ++i) {
      double s4 = 0.0, s5 = 0.0;
      for (int s = 0; s < 6; ++s) {
        s4 += kB4[s] * k[s][i];
        s5 += kB5[s] * k[s][i];
      }
      y4[i] = y[i] + h * s4;
      y5[i] = y[i] + h * s5;
    }

    double ratio = 0.0;
    for (int i = 0; i < n; ++i) {
      const double scale = cfg.atol + cfg.rtol * std::max(std::abs(y[i]), std::abs(y4[i]));
      ratio = std::max(ratio, std::abs(y5[i] - y4[i]) / scale);
    }

    if (ratio <= 1.0 || h <= cfg.hmin) {
      if (ratio > 1.0) {
        throw StiffnessError("step size underflow below hmin", t);
      }
      t = final_step ? p.t1 : t + h;
      y = std::move(y4);
      check_state(y, t);
      rec.accept(t, y, final_step);
    }

    const double factor = ratio > 0.0 ? 0.9 * std::pow(ratio, -0.2) : 5.0;
    h = std::clamp(h * std::clamp(factor, 0.2, 5.0), cfg.hmin, cfg.hmax);
  }
  return traj;
}

}  // namespace

StateVector rk4_step(const OdeProblem& problem, double t, const StateVector& state, double h) {
  if (!(h > 0.0)) throw ValidationError("rk4_step requires h > 0");
  const StateVector k1 = call_rhs(problem, t, state);
  const StateVector k2 = call_rhs(problem, t + h / 2, axpy(state, h / 2, k1));
  const StateVector k3 = call_rhs(problem, t + h / 2, axpy(state, h / 2, k2));
  const StateVector k4 = call_rhs(problem, t + h, axpy(state, h, k3));
  StateVector out(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    out[i] = state[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

Trajectory integrate(const OdeProblem& problem, const StepperConfig& config) {
  config.validate();
  if (!(problem.t1 > problem.t0)) throw ValidationError("need t1 > t0");
  if (static_cast<int>(problem.initial.size()) != problem.dimension) {
    throw ValidationError("initial state has wrong dimension");
  }
  return config.method == StepMethod::Rk4Fixed ? integrate_rk4(problem, config)
                                               : integrate_rkf45(problem, config);
}

}  // namespace sric
