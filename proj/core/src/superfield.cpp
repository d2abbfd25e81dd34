#include "sric/superfield.hpp"

#include <algorithm>
#include <cmath>

namespace sric {

namespace {
constexpr int kAnsatzK = 4;
constexpr Complex kI = Complex(0.0, 1.0);

bool in_subspace(BladeIndex blade) {
  return blade == kBladeBody || blade == kBladeAux || blade == kBladeFermion ||
         blade == kBladeFermionBar || blade == kBladeTop;
}
}  // namespace

GrassmannElement from_components(const SuperfieldComponents& c) {
  // eta^etabar*(g1*betabar^beta) = -g1 * (eta^etabar^beta^betabar).
  return GrassmannElement::from_coeffs(
      kAnsatzK, {{kBladeBody, Complex(c.y)},
                 {kBladeFermionBar, kI * std::conj(c.l)},
                 {kBladeFermion, kI * c.l},
                 {kBladeAux, Complex(c.g0)},
                 {kBladeTop, Complex(-c.g1)}});
}

SuperfieldComponents to_components(const GrassmannElement& e, double tol) {
  if (e.generators() != kAnsatzK) {
    throw DimensionError("superfield components are defined for K=4 elements");
  }
  for (const auto& [blade, coeff] : e.coeffs()) {
    if (!in_subspace(blade)) {
      throw ShapeError("element has support outside the superfield subspace (blade " +
                       blade_name(blade, kAnsatzK) + ")");
    }
  }
  const Complex c0 = e.coeff(kBladeBody);
  const Complex cf = e.coeff(kBladeFermion);
  const Complex cfb = e.coeff(kBladeFermionBar);
  const Complex ca = e.coeff(kBladeAux);
  const Complex ct = e.coeff(kBladeTop);

  const double scale = std::max(1.0, e.max_norm());
  const double slack = tol * scale;
  if (std::abs(c0.imag()) > slack || std::abs(ca.imag()) > slack ||
      std::abs(ct.imag()) > slack) {
    throw ShapeError("element has an imaginary body/aux component beyond tolerance");
  }
  // Blade coefficients are i*l and i*conj(l): the pair must satisfy
  // cfb == -conj(cf).
  if (std::abs(cfb + std::conj(cf)) > slack) {
    throw ShapeError("fermion coefficients are not a conjugate pair");
  }

  SuperfieldComponents out;
  out.y = c0.real();
  out.l = -kI * cf;
  out.g0 = ca.real();
  out.g1 = -ct.real();
  return out;
}

double reality_defect(const GrassmannElement& e) {
  return (e - gdagger(e)).max_norm();
}

bool check_reality(const GrassmannElement& e, double tol) {
  return reality_defect(e) <= tol;
}

}  // namespace sric
