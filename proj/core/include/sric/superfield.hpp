#pragma once

#include <complex>

#include "sric/grassmann.hpp"

namespace sric {

/// Component fields of a superfield
///   Y = y + i*eta*conj(l)*betabar + i*etabar*l*beta
///       + eta^etabar*(g0 + g1*betabar^beta).
///
/// `y`, `g0`, `g1` are real; the fermionic field is stored once as the
/// complex coefficient `l` of beta, its conjugate partner is always derived.
/// The auxiliary field splits into a scalar part `g0` and a fermion-bilinear
/// part `g1` (the betabar^beta coefficient), which carries the 2a*conj(l)*l
/// source of the component flow.
struct SuperfieldComponents {
  double y = 0.0;
  Complex l = 0.0;
  double g0 = 0.0;
  double g1 = 0.0;

  bool operator==(const SuperfieldComponents&) const = default;
};

/// Blades spanning the superfield subspace (K=4 canonical basis).
inline constexpr BladeIndex kBladeBody = 0u;        // 1
inline constexpr BladeIndex kBladeAux = 3u;         // eta^etabar
inline constexpr BladeIndex kBladeFermion = 6u;     // etabar^beta
inline constexpr BladeIndex kBladeFermionBar = 9u;  // eta^betabar
inline constexpr BladeIndex kBladeTop = 15u;        // eta^etabar^beta^betabar

/// Build the K=4 element of the superfield ansatz from its components.
GrassmannElement from_components(const SuperfieldComponents& c);

/// Extract components from an element of the superfield subspace.
///
/// Throws ShapeError if the element has support outside the five blades
/// {1, eta^betabar, etabar^beta, eta^etabar, top}, or if it violates the
/// reality slice (imaginary body/aux parts, or a betabar-coefficient that is
/// not the conjugate partner of the beta one) by more than `tol` relative to
/// the element's magnitude. Such a failure means a flow left the ansatz
/// manifold, which the implemented equations never do.
SuperfieldComponents to_components(const GrassmannElement& e, double tol = 1e-9);

/// True iff max_norm(e - gdagger(e)) <= tol.
bool check_reality(const GrassmannElement& e, double tol);

/// max_norm(e - gdagger(e)), the quantity check_reality thresholds.
double reality_defect(const GrassmannElement& e);

}  // namespace sric
