#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sric/errors.hpp"

namespace sric {

using Complex = std::complex<double>;

/// Basis blade of the algebra, encoded as a bitmask: bit i set means
/// generator i is a factor. Generators inside a blade are always kept in
/// canonical (ascending index) order; all signs are relative to that order.
using BladeIndex = std::uint32_t;

/// Generator indices for the shipped K=4 algebra. `eta`/`eta_bar` are the
/// superspace pair, `beta`/`beta_bar` the auxiliary pair that carries the
/// fermionic component fields.
enum Generator : int { kEta = 0, kEtaBar = 1, kBeta = 2, kBetaBar = 3 };

inline int grade(BladeIndex blade) { return __builtin_popcount(blade); }

/// Sign picked up when merging canonical blades `a` and `b` into one
/// canonical blade: (-1)^(number of generator transpositions). Zero overlap
/// is the caller's responsibility to check.
int merge_sign(BladeIndex a, BladeIndex b);

/// Value in the finite Grassmann algebra with K anticommuting generators
/// over complex double coefficients. Stored sparsely on the blade basis;
/// exactly-zero coefficients are pruned (no epsilon pruning), so the zero
/// element has an empty coefficient map.
///
/// Elements are immutable after construction; every operation returns a new
/// value. Safe to share across threads.
class GrassmannElement {
public:
  static constexpr int kMinGenerators = 2;
  static constexpr int kMaxGenerators = 8;

  /// The zero element of the K-generator algebra.
  explicit GrassmannElement(int K);

  /// Element with a single blade coefficient.
  GrassmannElement(int K, BladeIndex blade, Complex coeff);

  static GrassmannElement zero(int K) { return GrassmannElement(K); }
  static GrassmannElement scalar(int K, Complex value) { return {K, 0u, value}; }
  static GrassmannElement one(int K) { return scalar(K, 1.0); }
  /// The single generator `index` as an element.
  static GrassmannElement generator(int K, int index);
  /// Element from a (blade, coefficient) list; repeated blades accumulate.
  static GrassmannElement from_coeffs(
      int K, const std::vector<std::pair<BladeIndex, Complex>>& coeffs);

  int generators() const { return k_; }
  BladeIndex blade_count() const { return BladeIndex{1} << k_; }

  /// Coefficient of `blade` (zero when absent).
  Complex coeff(BladeIndex blade) const;
  const std::map<BladeIndex, Complex>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// max over blades of |coefficient|
  double max_norm() const;

  /// True when every stored blade has the given grade parity (0 even, 1 odd).
  /// The zero element is both.
  bool has_parity(int parity) const;

  GrassmannElement operator-() const;
  GrassmannElement conjugate_coeffs() const;

  bool operator==(const GrassmannElement& other) const = default;

  std::string to_string() const;

private:
  friend GrassmannElement gmul(const GrassmannElement&, const GrassmannElement&);
  friend GrassmannElement operator+(const GrassmannElement&, const GrassmannElement&);
  friend GrassmannElement operator-(const GrassmannElement&, const GrassmannElement&);
  friend GrassmannElement operator*(Complex, const GrassmannElement&);
  friend GrassmannElement gdagger(const GrassmannElement&);
  friend GrassmannElement grade_project(const GrassmannElement&, int);

  void prune();

  int k_;
  std::map<BladeIndex, Complex> coeffs_;
};

/// Bilinear product. blade*blade = signed merged blade, zero on any shared
/// generator. Throws DimensionError on mismatched K.
GrassmannElement gmul(const GrassmannElement& a, const GrassmannElement& b);

/// Antilinear involution: conjugates coefficients, swaps each generator with
/// its partner (eta <-> eta_bar, beta <-> beta_bar), and reverses the factor
/// order inside each blade, producing the corresponding transposition sign.
GrassmannElement gdagger(const GrassmannElement& a);

/// Split into (coefficient of the empty blade, nilpotent remainder).
std::pair<Complex, GrassmannElement> body_soul(const GrassmannElement& a);

/// Multiplicative inverse via the terminating series
///   (1/N) * sum_k (-soul/N)^k,   N = body(a) != 0.
/// Throws NonInvertibleError on zero body.
GrassmannElement ginverse(const GrassmannElement& a);

/// Exponential of an even-graded element:
///   exp(body) * sum_k soul^k / k!   (the sum terminates by nilpotency).
/// Throws GradingError if a carries odd-grade blades.
GrassmannElement gexp(const GrassmannElement& a);

/// Keep only blades of grade k (0 <= k <= K).
GrassmannElement grade_project(const GrassmannElement& a, int k);

GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b);
GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b);
inline GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  return gmul(a, b);
}
GrassmannElement operator*(Complex s, const GrassmannElement& a);
inline GrassmannElement operator*(const GrassmannElement& a, Complex s) { return s * a; }
inline GrassmannElement operator*(double s, const GrassmannElement& a) {
  return Complex(s, 0.0) * a;
}
inline GrassmannElement operator*(const GrassmannElement& a, double s) {
  return Complex(s, 0.0) * a;
}

/// True when max_norm(a - b) <= tol.
bool approx_equal(const GrassmannElement& a, const GrassmannElement& b, double tol);

/// Render the blade as generator names, e.g. "eta^etabar", "1" for the
/// empty blade. K <= 4 uses the named generators, larger K uses g0..g7.
std::string blade_name(BladeIndex blade, int K);

/// JSON object {"K": int, "coeffs": [{"blade": int, "re": f, "im": f}, ...]}
/// with blades sorted ascending. Stable float formatting (shortest %.17g).
std::string element_to_json(const GrassmannElement& a);

}  // namespace sric
