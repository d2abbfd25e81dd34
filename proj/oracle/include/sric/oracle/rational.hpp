#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sric::oracle {

/// Exact fraction of 64-bit integers, always normalized (gcd 1, positive
/// denominator). The symbolic derivations only ever produce tiny values, so
/// no overflow guarding beyond the zero-denominator check.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }
  bool is_negative() const { return num < 0; }

  friend Rational operator+(Rational a, Rational b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Rational operator-(Rational a, Rational b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend Rational operator/(Rational a, Rational b) { return {a.num * b.den, a.den * b.num}; }
  Rational operator-() const { return {-num, den}; }
  friend bool operator==(const Rational& a, const Rational& b) = default;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Gaussian rational re + im*i; the component derivations multiply through
/// factors of i before everything real-izes again.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(r) {}  // NOLINT: implicit by design
  GaussianRational(Rational r, Rational i) : re(r), im(i) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  GaussianRational inverse() const {
    const Rational n = re * re + im * im;
    if (n.is_zero()) throw std::domain_error("inverse of zero");
    return {re / n, -im / n};
  }

  std::string to_string() const {
    if (im.is_zero()) return re.to_string();
    if (re.is_zero()) return im.to_string() + "*i";
    return "(" + re.to_string() + (im.is_negative() ? "" : "+") + im.to_string() + "*i)";
  }
};

}  // namespace sric::oracle
