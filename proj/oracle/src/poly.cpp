#include "sric/oracle/poly.hpp"

#include <cmath>

namespace sric::oracle {

Poly Poly::constant(GaussianRational c) {
  Poly p;
  if (!c.is_zero()) p.terms_[Monomial{}] = c;
  return p;
}

Poly Poly::variable(const std::string& name, int exponent) {
  Poly p;
  if (exponent == 0) return one();
  p.terms_[Monomial{{name, exponent}}] = GaussianRational(Rational(1));
  return p;
}

void Poly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

bool Poly::is_real() const {
  for (const auto& [m, c] : terms_) {
    if (!c.is_real()) return false;
  }
  return true;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b.terms_) {
    auto it = out.terms_.find(m);
    if (it == out.terms_.end()) {
      out.terms_[m] = c;
    } else {
      it->second = it->second + c;
    }
  }
  out.prune();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (const auto& [var, exp] : mb) {
        const int merged = (m.count(var) ? m[var] : 0) + exp;
        if (merged == 0) {
          m.erase(var);
        } else {
          m[var] = merged;
        }
      }
      auto it = out.terms_.find(m);
      if (it == out.terms_.end()) {
        out.terms_[m] = ca * cb;
      } else {
        it->second = it->second + ca * cb;
      }
    }
  }
  out.prune();
  return out;
}

Poly Poly::monomial_inverse() const {
  if (!is_monomial()) {
    throw std::domain_error("only single-term polynomials can be inverted exactly");
  }
  const auto& [m, c] = *terms_.begin();
  Poly out;
  Monomial inv;
  for (const auto& [var, exp] : m) inv[var] = -exp;
  out.terms_[inv] = c.inverse();
  return out;
}

std::complex<double> Poly::eval(
    const std::map<std::string, std::complex<double>>& values) const {
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> term(c.re.to_double(), c.im.to_double());
    for (const auto& [var, exp] : m) {
      auto it = values.find(var);
      if (it == values.end()) throw std::domain_error("unbound variable '" + var + "'");
      term *= std::pow(it->second, exp);
    }
    sum += term;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    // Real coefficients render with a leading sign; complex ones verbatim.
    GaussianRational coeff = c;
    if (first) {
      if (c.is_real() && c.re.is_negative()) {
        out += "-";
        coeff = -c;
      }
    } else {
      if (c.is_real() && c.re.is_negative()) {
        out += " - ";
        coeff = -c;
      } else {
        out += " + ";
      }
    }
    first = false;

    std::string body;
    for (const auto& [var, exp] : m) {
      if (!body.empty()) body += "*";
      body += var;
      if (exp != 1) body += "^" + std::to_string(exp);
    }
    const bool unit = coeff == GaussianRational(Rational(1));
    if (body.empty()) {
      out += coeff.to_string();
    } else if (unit) {
      out += body;
    } else {
      out += coeff.to_string() + "*" + body;
    }
  }
  return out;
}

}  // namespace sric::oracle
