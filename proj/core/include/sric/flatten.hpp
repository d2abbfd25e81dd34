#pragma once

#include <string>
#include <vector>

#include "sric/grassmann.hpp"
#include "sric/integrate.hpp"
#include "sric/superfield.hpp"

namespace sric {

// Adapters between structured states and the integrator's flat real vectors.
// Layouts are fixed so that CSV columns stay stable:
//   components:      [y, Re l, Im l, g0, g1]
//   full element:    [Re c_0, Im c_0, ..., Re c_{2^K-1}, Im c_{2^K-1}]
//   paired systems:  first block then second block.

inline constexpr int kComponentDim = 5;

inline StateVector flatten_components(const SuperfieldComponents& c) {
  return {c.y, c.l.real(), c.l.imag(), c.g0, c.g1};
}

inline SuperfieldComponents unflatten_components(const double* s) {
  return {s[0], Complex(s[1], s[2]), s[3], s[4]};
}

inline SuperfieldComponents unflatten_components(const StateVector& s, std::size_t offset = 0) {
  return unflatten_components(s.data() + offset);
}

inline StateVector flatten_element(const GrassmannElement& e) {
  StateVector out(2 * e.blade_count(), 0.0);
  for (const auto& [blade, c] : e.coeffs()) {
    out[2 * blade] = c.real();
    out[2 * blade + 1] = c.imag();
  }
  return out;
}

inline GrassmannElement unflatten_element(int K, const double* s) {
  std::vector<std::pair<BladeIndex, Complex>> coeffs;
  const BladeIndex n = BladeIndex{1} << K;
  for (BladeIndex b = 0; b < n; ++b) {
    const Complex c(s[2 * b], s[2 * b + 1]);
    if (c != Complex(0.0)) coeffs.emplace_back(b, c);
  }
  return GrassmannElement::from_coeffs(K, coeffs);
}

inline GrassmannElement unflatten_element(int K, const StateVector& s, std::size_t offset = 0) {
  return unflatten_element(K, s.data() + offset);
}

inline std::vector<std::string> component_columns(const std::string& prefix = "") {
  return {prefix + "y", prefix + "re_l", prefix + "im_l", prefix + "g0", prefix + "g1"};
}

}  // namespace sric
