#include "sric/riccati.hpp"

#include <algorithm>
#include <cmath>

namespace sric {

namespace {

constexpr int K = 4;

std::vector<std::string> raw_element_columns(const std::string& prefix) {
  std::vector<std::string> cols;
  for (BladeIndex b = 0; b < (BladeIndex{1} << K); ++b) {
    cols.push_back(prefix + "re_b" + std::to_string(b));
    cols.push_back(prefix + "im_b" + std::to_string(b));
  }
  return cols;
}

std::vector<std::string> linear_columns() {
  auto cols = component_columns("n_");
  for (const auto& c : component_columns("ndot_")) cols.push_back(c);
  return cols;
}

std::vector<std::string> pair_columns() {
  auto cols = component_columns("b_");
  for (const auto& c : component_columns("d_")) cols.push_back(c);
  return cols;
}

// Evaluates B on (and halfway between) the nodes of a uniform grid, with a
// 4-point Lagrange stencil at the midpoints so the lookup matches the
// integrator's order.
class GridElementLookup {
public:
  GridElementLookup(double t0, double h, std::vector<GrassmannElement> values)
      : t0_(t0), h_(h), values_(std::move(values)) {
    if (values_.size() < 4) {
      throw ValidationError("grid lookup needs at least 4 samples");
    }
  }

  GrassmannElement at(double t) const {
    const double u = (t - t0_) / h_;
    const long twice = std::lround(2.0 * u);
    if (std::abs(2.0 * u - twice) > 1e-6) {
      throw ValidationError("lookup time is off the shared half-grid");
    }
    const long n = static_cast<long>(values_.size());
    if (twice % 2 == 0) {
      const long i = std::clamp(twice / 2, 0L, n - 1);
      return values_[i];
    }
    const long i = (twice - 1) / 2;  // midpoint of [i, i+1]
    const long j = std::clamp(i - 1, 0L, n - 4);
    const double x = u - static_cast<double>(j);
    const double w0 = (x - 1) * (x - 2) * (x - 3) / -6.0;
    const double w1 = x * (x - 2) * (x - 3) / 2.0;
    const double w2 = x * (x - 1) * (x - 3) / -2.0;
    const double w3 = x * (x - 1) * (x - 2) / 6.0;
    return w0 * values_[j] + w1 * values_[j + 1] + w2 * values_[j + 2] + w3 * values_[j + 3];
  }

private:
  double t0_;
  double h_;
  std::vector<GrassmannElement> values_;
};

std::vector<GrassmannElement> elements_of(const Trajectory& traj) {
  std::vector<GrassmannElement> out;
  out.reserve(traj.size());
  for (const auto& s : traj.samples) {
    if (s.state.size() == kComponentDim) {
      out.push_back(from_components(unflatten_components(s.state)));
    } else if (s.state.size() == 2u << K) {
      out.push_back(unflatten_element(K, s.state));
    } else {
      throw ValidationError("trajectory does not hold a single superfield state");
    }
  }
  return out;
}

std::pair<GrassmannElement, GrassmannElement> linear_pair_at(const TrajectorySample& s) {
  if (s.state.size() == 2 * kComponentDim) {
    return {from_components(unflatten_components(s.state, 0)),
            from_components(unflatten_components(s.state, kComponentDim))};
  }
  if (s.state.size() == 4u << K) {
    return {unflatten_element(K, s.state, 0), unflatten_element(K, s.state, 2u << K)};
  }
  throw ValidationError("trajectory does not hold an (N, Ndot) pair state");
}

// 4th-order central first derivative on a uniform grid.
template <typename Value>
Value fd_derivative(const std::vector<Value>& f, std::size_t i, double h) {
  return (1.0 / (12.0 * h)) *
         (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
}

void fold_per_blade(std::map<BladeIndex, double>& acc, const GrassmannElement& defect) {
  for (const auto& [blade, c] : defect.coeffs()) {
    double& slot = acc[blade];
    slot = std::max(slot, std::abs(c));
  }
}

ResidualReport finish_report(std::map<BladeIndex, double> per_blade, double h, double tol) {
  // Ansatz blades always reported, even when identically zero.
  for (BladeIndex b : {kBladeBody, kBladeAux, kBladeFermion, kBladeFermionBar, kBladeTop}) {
    per_blade.try_emplace(b, 0.0);
  }
  ResidualReport report;
  report.per_blade = std::move(per_blade);
  for (const auto& [blade, r] : report.per_blade) {
    report.max_residual = std::max(report.max_residual, r);
  }
  report.grid_h = h;
  report.h4_floor = std::pow(h, 4);
  report.tolerance = tol;
  report.pass = report.max_residual <= tol;
  return report;
}

}  // namespace

GrassmannElement super_riccati_rhs(double t, const GrassmannElement& Y,
                                   const CoefficientTriple& coeffs) {
  const double a = coeffs.a.eval(t);
  const double b = coeffs.b.eval(t);
  const double c = coeffs.c.eval(t);
  return a * gmul(Y, Y) + b * Y + GrassmannElement::scalar(Y.generators(), c);
}

SuperfieldComponents component_rhs(double t, const SuperfieldComponents& s,
                                   const CoefficientTriple& coeffs) {
  const double a = coeffs.a.eval(t);
  const double b = coeffs.b.eval(t);
  const double c = coeffs.c.eval(t);
  SuperfieldComponents out;
  out.y = a * (s.y * s.y) + b * s.y + c;
  out.l = a * (2.0 * (s.y * s.l)) + b * s.l;
  out.g0 = a * (2.0 * (s.y * s.g0)) + b * s.g0;
  out.g1 = a * (2.0 * (s.y * s.g1) + 2.0 * std::norm(s.l)) + b * s.g1;
  return out;
}

std::pair<SuperfieldComponents, SuperfieldComponents> b0_rhs(
    double t, const SuperfieldComponents& b_part, const SuperfieldComponents& d_part,
    const CoefficientTriple& coeffs) {
  if (coeffs.b.eval(t) != 0.0) {
    throw ValidationError("the paired system requires b(t) identically zero");
  }
  const double a = coeffs.a.eval(t);
  const double c = coeffs.c.eval(t);

  SuperfieldComponents db;
  db.y = a * (b_part.y * b_part.y) + c;
  db.l = 2.0 * a * (b_part.y * b_part.l);
  db.g0 = 2.0 * a * (b_part.y * b_part.g0);
  db.g1 = 2.0 * a * (b_part.y * b_part.g1 + std::norm(b_part.l));

  // Reciprocal block: D' = -2 a B D - a, expanded over the blade basis; the
  // fermion bilinears land in the g1 slot.
  SuperfieldComponents dd;
  dd.y = -2.0 * a * (b_part.y * d_part.y) - a;
  dd.l = -2.0 * a * (b_part.y * d_part.l + d_part.y * b_part.l);
  dd.g0 = -2.0 * a * (b_part.y * d_part.g0 + b_part.g0 * d_part.y);
  dd.g1 = -2.0 * a * (b_part.y * d_part.g1 + b_part.g1 * d_part.y +
                      2.0 * (std::conj(b_part.l) * d_part.l).real());
  return {db, dd};
}

GrassmannElement bernoulli_rhs(double t, const GrassmannElement& D, const GrassmannElement& B,
                               const CoefficientTriple& coeffs) {
  const double a = coeffs.a.eval(t);
  const double b = coeffs.b.eval(t);
  return -(2.0 * a * gmul(B, D) + b * D) - GrassmannElement::scalar(D.generators(), a);
}

std::pair<GrassmannElement, GrassmannElement> second_order_rhs(
    double t, const GrassmannElement& N, const GrassmannElement& Ndot,
    const CoefficientTriple& coeffs, const CoefficientExpr& a_dot) {
  const double a = coeffs.a.eval(t);
  if (a == 0.0) throw DomainError("singular coefficient: a(t) = 0", t);
  const double mu = a_dot.eval(t) / a + coeffs.b.eval(t);
  const double ac = a * coeffs.c.eval(t);
  return {Ndot, mu * Ndot - ac * N};
}

Trajectory solve_superfield(const CoefficientTriple& coeffs, const SuperfieldComponents& y0,
                            double t0, double t1, const StepperConfig& cfg) {
  coeffs.validate_on(t0, t1);
  OdeProblem problem;
  problem.dimension = 2 << K;
  problem.t0 = t0;
  problem.t1 = t1;
  problem.initial = flatten_element(from_components(y0));
  problem.rhs = [&coeffs](double t, const StateVector& s) {
    return flatten_element(super_riccati_rhs(t, unflatten_element(K, s), coeffs));
  };
  Trajectory traj = integrate(problem, cfg);
  traj.equation = "riccati-super";
  traj.columns = raw_element_columns("");
  return traj;
}

Trajectory solve_components(const CoefficientTriple& coeffs, const SuperfieldComponents& y0,
                            double t0, double t1, const StepperConfig& cfg) {
  coeffs.validate_on(t0, t1);
  OdeProblem problem;
  problem.dimension = kComponentDim;
  problem.t0 = t0;
  problem.t1 = t1;
  problem.initial = flatten_components(y0);
  problem.rhs = [&coeffs](double t, const StateVector& s) {
    return flatten_components(component_rhs(t, unflatten_components(s), coeffs));
  };
  Trajectory traj = integrate(problem, cfg);
  traj.equation = "riccati-components";
  traj.columns = component_columns();
  return traj;
}

Trajectory solve_b0_pair(const CoefficientTriple& coeffs, const SuperfieldComponents& b0,
                         const SuperfieldComponents& d0, double t0, double t1,
                         const StepperConfig& cfg) {
  coeffs.validate_on(t0, t1);
  if (!coeffs.b_is_zero_on(t0, t1)) {
    throw ValidationError("the paired system requires b(t) identically zero");
  }
  OdeProblem problem;
  problem.dimension = 2 * kComponentDim;
  problem.t0 = t0;
  problem.t1 = t1;
  problem.initial = flatten_components(b0);
  for (double v : flatten_components(d0)) problem.initial.push_back(v);
  problem.rhs = [&coeffs](double t, const StateVector& s) {
    auto [db, dd] = b0_rhs(t, unflatten_components(s, 0), unflatten_components(s, kComponentDim),
                           coeffs);
    StateVector out = flatten_components(db);
    for (double v : flatten_components(dd)) out.push_back(v);
    return out;
  };
  Trajectory traj = integrate(problem, cfg);
  traj.equation = "b0-pair";
  traj.columns = pair_columns();
  return traj;
}

Trajectory solve_second_order(const CoefficientTriple& coeffs, const SuperfieldComponents& n0,
                              const SuperfieldComponents& ndot0, double t0, double t1,
                              const StepperConfig& cfg) {
  coeffs.validate_on(t0, t1);
  const CoefficientExpr a_dot = coeffs.a.derivative();
  const int element_dim = 2 << K;
  OdeProblem problem;
  problem.dimension = 2 * element_dim;
  problem.t0 = t0;
  problem.t1 = t1;
  problem.initial = flatten_element(from_components(n0));
  for (double v : flatten_element(from_components(ndot0))) problem.initial.push_back(v);
  problem.rhs = [&coeffs, &a_dot, element_dim](double t, const StateVector& s) {
    auto [dn, dndot] = second_order_rhs(t, unflatten_element(K, s, 0),
                                        unflatten_element(K, s, element_dim), coeffs, a_dot);
    StateVector out = flatten_element(dn);
    for (double v : flatten_element(dndot)) out.push_back(v);
    return out;
  };
  Trajectory traj = integrate(problem, cfg);
  traj.equation = "linear-super";
  traj.columns = raw_element_columns("n_");
  for (const auto& c : raw_element_columns("ndot_")) traj.columns.push_back(c);
  return traj;
}

Trajectory component_view(const Trajectory& traj) {
  if (traj.samples.empty()) throw ValidationError("empty trajectory");
  const std::size_t dim = traj.samples.front().state.size();
  if (dim == kComponentDim || dim == 2 * kComponentDim) return traj;

  Trajectory out;
  out.stepper = traj.stepper;
  out.equation = traj.equation;
  if (dim == 2u << K) {
    out.columns = component_columns();
    for (const auto& s : traj.samples) {
      out.samples.push_back(
          {s.t, flatten_components(to_components(unflatten_element(K, s.state)))});
    }
    return out;
  }
  if (dim == 4u << K) {
    out.columns = linear_columns();
    for (const auto& s : traj.samples) {
      auto [n, ndot] = linear_pair_at(s);
      StateVector row = flatten_components(to_components(n));
      for (double v : flatten_components(to_components(ndot))) row.push_back(v);
      out.samples.push_back({s.t, std::move(row)});
    }
    return out;
  }
  throw ValidationError("trajectory state size has no component view");
}

ResidualReport riccati_residual(const Trajectory& y_traj, const CoefficientTriple& coeffs,
                                double tol) {
  if (y_traj.size() < 5) throw ValidationError("residual check needs at least 5 samples");
  const double h = y_traj.uniform_spacing();
  const std::vector<GrassmannElement> y = elements_of(y_traj);

  std::map<BladeIndex, double> per_blade;
  for (std::size_t i = 2; i + 2 < y.size(); ++i) {
    const double t = y_traj.samples[i].t;
    const GrassmannElement dy_fd = fd_derivative(y, i, h);
    fold_per_blade(per_blade, dy_fd - super_riccati_rhs(t, y[i], coeffs));
  }
  return finish_report(std::move(per_blade), h, tol);
}

ResidualReport linear_residual(const Trajectory& n_traj, const CoefficientTriple& coeffs,
                               double tol) {
  if (n_traj.size() < 5) throw ValidationError("residual check needs at least 5 samples");
  const double h = n_traj.uniform_spacing();
  const CoefficientExpr a_dot = coeffs.a.derivative();

  std::vector<GrassmannElement> n, ndot;
  n.reserve(n_traj.size());
  ndot.reserve(n_traj.size());
  for (const auto& s : n_traj.samples) {
    auto [ni, di] = linear_pair_at(s);
    n.push_back(std::move(ni));
    ndot.push_back(std::move(di));
  }

  std::map<BladeIndex, double> per_blade;
  for (std::size_t i = 2; i + 2 < n.size(); ++i) {
    const double t = n_traj.samples[i].t;
    fold_per_blade(per_blade, fd_derivative(n, i, h) - ndot[i]);
    const auto [dn, dndot] = second_order_rhs(t, n[i], ndot[i], coeffs, a_dot);
    fold_per_blade(per_blade, fd_derivative(ndot, i, h) - dndot);
  }
  return finish_report(std::move(per_blade), h, tol);
}

Trajectory general_solution(const Trajectory& b_traj, const SuperfieldComponents& d0,
                            const CoefficientTriple& coeffs, double pole_tol) {
  const ResidualReport b_check = riccati_residual(b_traj, coeffs);
  if (!b_check.pass) {
    throw ValidationError("particular-solution trajectory fails its residual check");
  }
  const double h = b_traj.uniform_spacing();
  const double t0 = b_traj.front().t;
  const double t1 = b_traj.back().t;
  const GridElementLookup b_lookup(t0, h, elements_of(b_traj));

  OdeProblem problem;
  problem.dimension = 2 << K;
  problem.t0 = t0;
  problem.t1 = t1;
  problem.initial = flatten_element(from_components(d0));
  problem.rhs = [&](double t, const StateVector& s) {
    return flatten_element(bernoulli_rhs(t, unflatten_element(K, s), b_lookup.at(t), coeffs));
  };
  StepperConfig cfg;
  cfg.method = StepMethod::Rk4Fixed;
  cfg.h = h;
  cfg.record_every = 1;
  Trajectory d_traj = integrate(problem, cfg);
  if (d_traj.size() != b_traj.size()) {
    throw ValidationError("reciprocal trajectory does not share the particular grid");
  }

  Trajectory out;
  out.stepper = b_traj.stepper;
  out.equation = "riccati-super";
  out.columns = component_columns();
  const std::vector<GrassmannElement> b_el = elements_of(b_traj);
  for (std::size_t i = 0; i < d_traj.size(); ++i) {
    const GrassmannElement d = unflatten_element(K, d_traj.samples[i].state);
    const Complex body = d.coeff(0);
    if (std::abs(body) < pole_tol) {
      throw SingularityError("pole of the general solution: body of D vanished",
                             d_traj.samples[i].t);
    }
    const GrassmannElement y = b_el[i] + ginverse(d);
    out.samples.push_back({d_traj.samples[i].t, flatten_components(to_components(y))});
  }
  return out;
}

Trajectory from_linear(const Trajectory& n_traj, const CoefficientTriple& coeffs) {
  Trajectory out;
  out.stepper = n_traj.stepper;
  out.equation = "riccati-super";
  out.columns = component_columns();
  for (const auto& s : n_traj.samples) {
    const auto [n, ndot] = linear_pair_at(s);
    if (std::abs(n.coeff(0)) < 1e-12) {
      throw SingularityError("node: body of N vanished, Y has a pole", s.t);
    }
    const double a = coeffs.a.eval(s.t);
    if (a == 0.0) throw DomainError("singular coefficient: a(t) = 0", s.t);
    const GrassmannElement y = (-1.0 / a) * gmul(ginverse(n), ndot);
    out.samples.push_back({s.t, flatten_components(to_components(y))});
  }
  return out;
}

Trajectory to_linear(const Trajectory& y_traj, const CoefficientTriple& coeffs) {
  if (y_traj.size() < 3) throw ValidationError("inverse map needs at least 3 samples");
  const double h = y_traj.uniform_spacing();
  const std::size_t n = y_traj.size();

  // Integrand F = a(t) Y(t), componentwise on the flat layout.
  std::vector<StateVector> f(n);
  std::vector<GrassmannElement> y_el = elements_of(y_traj);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = coeffs.a.eval(y_traj.samples[i].t);
    f[i] = flatten_components(to_components(y_el[i]));
    for (double& v : f[i]) v *= a;
  }

  // Cumulative 4th-order Simpson: even nodes close a Simpson pair, interior
  // odd nodes integrate the local parabola over its first half, and an odd
  // final node (even sample count) falls back to one trapezoid panel.
  std::vector<StateVector> cum(n, StateVector(kComponentDim, 0.0));
  for (std::size_t k = 1; k < n; ++k) {
    StateVector& out = cum[k];
    if (k % 2 == 0) {
      for (int j = 0; j < kComponentDim; ++j) {
        out[j] = cum[k - 2][j] + h / 3.0 * (f[k - 2][j] + 4.0 * f[k - 1][j] + f[k][j]);
      }
    } else if (k + 1 < n) {
      for (int j = 0; j < kComponentDim; ++j) {
        out[j] = cum[k - 1][j] + h / 12.0 * (5.0 * f[k - 1][j] + 8.0 * f[k][j] - f[k + 1][j]);
      }
    } else {
      for (int j = 0; j < kComponentDim; ++j) {
        out[j] = cum[k - 1][j] + h / 2.0 * (f[k - 1][j] + f[k][j]);
      }
    }
  }

  Trajectory out;
  out.stepper = y_traj.stepper;
  out.equation = "linear-super";
  out.columns = linear_columns();
  for (std::size_t i = 0; i < n; ++i) {
    const double t = y_traj.samples[i].t;
    const double a = coeffs.a.eval(t);
    const GrassmannElement integral = from_components(unflatten_components(cum[i]));
    const GrassmannElement n_el = gexp(-integral);
    const GrassmannElement ndot_el = (-a) * gmul(y_el[i], n_el);
    StateVector row = flatten_components(to_components(n_el));
    for (double v : flatten_components(to_components(ndot_el))) row.push_back(v);
    out.samples.push_back({t, std::move(row)});
  }
  return out;
}

double max_reality_defect(const Trajectory& traj) {
  double worst = 0.0;
  for (const auto& s : traj.samples) {
    const std::size_t dim = s.state.size();
    if (dim == 4u << K) {
      auto [n, ndot] = linear_pair_at(s);
      worst = std::max({worst, reality_defect(n), reality_defect(ndot)});
    } else if (dim == 2u << K) {
      worst = std::max(worst, reality_defect(unflatten_element(K, s.state)));
    } else if (dim == kComponentDim) {
      worst = std::max(worst, reality_defect(from_components(unflatten_components(s.state))));
    } else if (dim == 2 * kComponentDim) {
      worst = std::max(worst,
                       reality_defect(from_components(unflatten_components(s.state, 0))));
      worst = std::max(worst, reality_defect(from_components(
                                  unflatten_components(s.state, kComponentDim))));
    } else {
      throw ValidationError("trajectory state size has no reality check");
    }
  }
  return worst;
}

}  // namespace sric
