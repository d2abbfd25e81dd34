#pragma once

#include <map>

#include "sric/grassmann.hpp"
#include "sric/oracle/poly.hpp"

namespace sric::oracle {

/// Grassmann element with polynomial coefficients, multiplied by the naive
/// generator-list route (concatenate, bubble-sort, count swaps, zero on
/// repeats). Shares no sign logic with the fast bitmask implementation on
/// purpose: this is the adjudicating side of the pair.
class SymElement {
public:
  explicit SymElement(int K) : k_(K) {}

  static SymElement blade(int K, BladeIndex b, Poly coeff);
  static SymElement scalar(int K, Poly coeff) { return blade(K, 0, std::move(coeff)); }
  static SymElement one(int K) { return scalar(K, Poly::one()); }

  int generators() const { return k_; }
  Poly coeff(BladeIndex b) const;
  const std::map<BladeIndex, Poly>& coeffs() const { return coeffs_; }

  friend SymElement operator+(const SymElement& a, const SymElement& b);
  friend SymElement operator-(const SymElement& a, const SymElement& b);
  friend SymElement operator*(const SymElement& a, const SymElement& b);
  SymElement operator-() const;
  friend SymElement operator*(const Poly& s, const SymElement& a);
  friend bool operator==(const SymElement& a, const SymElement& b) = default;

  /// Inverse by the nilpotent series (1/body) * sum_k (-soul/body)^k.
  /// The body must be a single-term polynomial (e.g. the variable n) so the
  /// division stays exact in the Laurent ring.
  SymElement inverse_series() const;

private:
  void prune();
  int k_;
  std::map<BladeIndex, Poly> coeffs_;
};

/// Sign of the product of two canonical blades computed by the naive
/// transposition count; 0 when the blades share a generator.
int brute_blade_sign(BladeIndex a, BladeIndex b, int K);

/// Reference product for GrassmannElement values, built on brute_blade_sign;
/// bit-for-bit comparable against gmul.
GrassmannElement brute_mul(const GrassmannElement& a, const GrassmannElement& b);

}  // namespace sric::oracle
