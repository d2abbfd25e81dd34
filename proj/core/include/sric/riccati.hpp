#pragma once

#include <map>
#include <utility>

#include "sric/coeffs.hpp"
#include "sric/flatten.hpp"
#include "sric/grassmann.hpp"
#include "sric/integrate.hpp"
#include "sric/superfield.hpp"

namespace sric {

// The superspace Riccati equation
//     dY/dt = a(t) Y^2 + b(t) Y + c(t)
// for a superfield value Y, its component system, the Cole-Hopf-type
// linearization Y = -(1/a) N^{-1} dN/dt against the second-order equation
//     d2N/dt2 - (a'/a + b) dN/dt + a c N = 0,
// and the general solution Y = B + D^{-1} with
//     dD/dt = -(2 a B + b) D - a.

/// Right side a*Y^2 + b*Y + c of the superfield equation.
GrassmannElement super_riccati_rhs(double t, const GrassmannElement& Y,
                                   const CoefficientTriple& coeffs);

/// Component form of the same flow, derived by expanding the superfield
/// square (not transcribed):
///   y'  = a y^2 + b y + c
///   l'  = (2 a y + b) l
///   g0' = (2 a y + b) g0
///   g1' = (2 a y + b) g1 + 2 a |l|^2
SuperfieldComponents component_rhs(double t, const SuperfieldComponents& c,
                                   const CoefficientTriple& coeffs);

/// Paired component system for the b = 0 special case: the particular
/// solution block follows the Riccati flow, the reciprocal block follows
///   D' = -2 a B D - a
/// expanded into components. Throws ValidationError when b(t) != 0.
std::pair<SuperfieldComponents, SuperfieldComponents> b0_rhs(
    double t, const SuperfieldComponents& b_part, const SuperfieldComponents& d_part,
    const CoefficientTriple& coeffs);

/// Right side -(2 a B + b) D - a of the reciprocal-superfield equation.
GrassmannElement bernoulli_rhs(double t, const GrassmannElement& D,
                               const GrassmannElement& B, const CoefficientTriple& coeffs);

/// First-order form of the second-order linear superfield equation:
/// returns (Ndot, (a'/a + b) Ndot - a c N). `a_dot` is the exact derivative
/// of coeffs.a (see CoefficientExpr::derivative). Throws DomainError when
/// a(t) = 0.
std::pair<GrassmannElement, GrassmannElement> second_order_rhs(
    double t, const GrassmannElement& N, const GrassmannElement& Ndot,
    const CoefficientTriple& coeffs, const CoefficientExpr& a_dot);

// ---------------------------------------------------------------------------
// Integration drivers. All trajectories are uniform-grid unless an adaptive
// stepper is requested.
// ---------------------------------------------------------------------------

/// Integrate the superfield equation directly in the algebra: the state is
/// the full flattened coefficient vector (2 * 2^K reals). Label
/// "riccati-super".
Trajectory solve_superfield(const CoefficientTriple& coeffs, const SuperfieldComponents& y0,
                            double t0, double t1, const StepperConfig& cfg);

/// Integrate the 5-component system. Label "riccati-components".
Trajectory solve_components(const CoefficientTriple& coeffs, const SuperfieldComponents& y0,
                            double t0, double t1, const StepperConfig& cfg);

/// Integrate the paired b = 0 system (10 components, particular block then
/// reciprocal block). Label "b0-pair".
Trajectory solve_b0_pair(const CoefficientTriple& coeffs, const SuperfieldComponents& b0,
                         const SuperfieldComponents& d0, double t0, double t1,
                         const StepperConfig& cfg);

/// Integrate the second-order linear superfield equation from (N0, Ndot0).
/// State is the flattened (N, Ndot) element pair. Label "linear-super".
Trajectory solve_second_order(const CoefficientTriple& coeffs, const SuperfieldComponents& n0,
                              const SuperfieldComponents& ndot0, double t0, double t1,
                              const StepperConfig& cfg);

/// Convert a raw trajectory (element or element-pair state) to component
/// layout; component-layout inputs pass through. Throws ShapeError if a
/// sample left the superfield subspace.
Trajectory component_view(const Trajectory& traj);

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// Per-blade maximum defect of a trajectory against a target equation,
/// measured with a 4th-order central finite difference on the interior of a
/// uniform grid. `h4_floor` records the h^4 scale below which the finite
/// difference itself cannot resolve a residual.
struct ResidualReport {
  std::map<BladeIndex, double> per_blade;
  double max_residual = 0.0;
  double grid_h = 0.0;
  double h4_floor = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Residual of a component-layout trajectory against the superfield Riccati
/// equation. Needs a uniform grid with >= 5 points.
ResidualReport riccati_residual(const Trajectory& y_traj, const CoefficientTriple& coeffs,
                                double tol = 1e-6);

/// Residual of a linear-run trajectory (raw pair or 10-column component
/// layout) against the second-order superfield equation, checking both
/// d/dt N = Ndot and d/dt Ndot = (a'/a + b) Ndot - a c N.
ResidualReport linear_residual(const Trajectory& n_traj, const CoefficientTriple& coeffs,
                               double tol = 1e-6);

/// General solution from a particular one: integrates the reciprocal
/// equation D' = -(2 a B + b) D - a along the grid of `b_traj` (component
/// layout, residual-checked on entry) and returns Y = B + D^{-1} in
/// component layout. Throws SingularityError when the body of D comes
/// within `pole_tol` of zero: zeros of D are genuine poles of Y.
Trajectory general_solution(const Trajectory& b_traj, const SuperfieldComponents& d0,
                            const CoefficientTriple& coeffs, double pole_tol = 1e-8);

/// Pointwise map of a linear-run trajectory to Y = -(1/a) N^{-1} Ndot in
/// component layout. Throws SingularityError when the body of N vanishes
/// (nodes of N are poles of Y).
Trajectory from_linear(const Trajectory& n_traj, const CoefficientTriple& coeffs);

/// Inverse map: N(t) = gexp(-integral of a Y dt) with N(t0) = 1, cumulative
/// 4th-order Simpson quadrature on the trajectory grid; Ndot = -a Y N.
/// Output is a 10-column linear-run trajectory on the same grid.
Trajectory to_linear(const Trajectory& y_traj, const CoefficientTriple& coeffs);

/// Reality defect max over all samples (element-state trajectories only).
double max_reality_defect(const Trajectory& traj);

}  // namespace sric
