#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "sric/oracle/rational.hpp"

namespace sric::oracle {

/// Monomial as variable -> exponent; exponents may be negative (the inverse
/// constructions produce 1/n powers), zero exponents are never stored.
using Monomial = std::map<std::string, int>;

/// Multivariate Laurent polynomial over Gaussian rationals. Deliberately
/// minimal: the derivations are at most quadratic, so there is no need for
/// anything smarter than a term map.
class Poly {
public:
  Poly() = default;

  static Poly constant(GaussianRational c);
  static Poly variable(const std::string& name, int exponent = 1);
  static Poly i() { return constant(GaussianRational::i()); }
  static Poly one() { return constant(Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

  /// True when a single term; used to gate exact division.
  bool is_monomial() const { return terms_.size() == 1; }
  /// 1/this for a single-term polynomial (Laurent inverse).
  Poly monomial_inverse() const;

  bool is_real() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::complex<double> eval(const std::map<std::string, std::complex<double>>& values) const;

  /// Canonical rendering, e.g. "2*a*l*y + b*l" or "-2*n^-3*p*pbar".
  std::string to_string() const;

private:
  void prune();
  std::map<Monomial, GaussianRational> terms_;
};

inline Poly operator*(const GaussianRational& s, const Poly& p) {
  return Poly::constant(s) * p;
}

}  // namespace sric::oracle
