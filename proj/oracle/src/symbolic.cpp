#include "sric/oracle/symbolic.hpp"

#include <vector>

namespace sric::oracle {

namespace {

std::vector<int> generator_list(BladeIndex blade, int K) {
  std::vector<int> out;
  for (int i = 0; i < K; ++i) {
    if (blade & (BladeIndex{1} << i)) out.push_back(i);
  }
  return out;
}

}  // namespace

int brute_blade_sign(BladeIndex a, BladeIndex b, int K) {
  std::vector<int> merged = generator_list(a, K);
  for (int g : generator_list(b, K)) merged.push_back(g);

  // Bubble sort, counting swaps; a repeated generator kills the product.
  int swaps = 0;
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    for (std::size_t j = 0; j + 1 < merged.size() - i; ++j) {
      if (merged[j] == merged[j + 1]) return 0;
      if (merged[j] > merged[j + 1]) {
        std::swap(merged[j], merged[j + 1]);
        ++swaps;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < merged.size(); ++j) {
    if (merged[j] == merged[j + 1]) return 0;
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

GrassmannElement brute_mul(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.generators() != b.generators()) {
    throw DimensionError("elements from different algebras");
  }
  const int K = a.generators();
  std::vector<std::pair<BladeIndex, Complex>> out;
  for (const auto& [ba, ca] : a.coeffs()) {
    for (const auto& [bb, cb] : b.coeffs()) {
      const int sign = brute_blade_sign(ba, bb, K);
      if (sign == 0) continue;
      out.emplace_back(ba | bb, static_cast<double>(sign) * ca * cb);
    }
  }
  return GrassmannElement::from_coeffs(K, out);
}

SymElement SymElement::blade(int K, BladeIndex b, Poly coeff) {
  SymElement e(K);
  if (!coeff.is_zero()) e.coeffs_[b] = std::move(coeff);
  return e;
}

Poly SymElement::coeff(BladeIndex b) const {
  auto it = coeffs_.find(b);
  return it == coeffs_.end() ? Poly{} : it->second;
}

void SymElement::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second.is_zero()) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

SymElement operator+(const SymElement& a, const SymElement& b) {
  SymElement out = a;
  for (const auto& [blade, c] : b.coeffs_) {
    out.coeffs_[blade] = out.coeff(blade) + c;
  }
  out.prune();
  return out;
}

SymElement operator-(const SymElement& a, const SymElement& b) { return a + (-b); }

SymElement SymElement::operator-() const {
  SymElement out = *this;
  for (auto& [blade, c] : out.coeffs_) c = -c;
  return out;
}

SymElement operator*(const Poly& s, const SymElement& a) {
  SymElement out(a.generators());
  for (const auto& [blade, c] : a.coeffs_) {
    out.coeffs_[blade] = s * c;
  }
  out.prune();
  return out;
}

SymElement operator*(const SymElement& a, const SymElement& b) {
  if (a.k_ != b.k_) throw DimensionError("elements from different algebras");
  SymElement out(a.k_);
  for (const auto& [ba, ca] : a.coeffs_) {
    for (const auto& [bb, cb] : b.coeffs_) {
      const int sign = brute_blade_sign(ba, bb, a.k_);
      if (sign == 0) continue;
      Poly term = ca * cb;
      if (sign < 0) term = -term;
      out.coeffs_[ba | bb] = out.coeff(ba | bb) + term;
    }
  }
  out.prune();
  return out;
}

SymElement SymElement::inverse_series() const {
  const Poly body = coeff(0);
  if (body.is_zero()) throw NonInvertibleError("symbolic element has zero body");
  const Poly inv_body = body.monomial_inverse();

  SymElement soul = *this - SymElement::scalar(k_, body);
  SymElement ratio = (-inv_body) * soul;  // -soul/body
  SymElement sum = SymElement::one(k_);
  SymElement power = SymElement::one(k_);
  for (int k = 1; k <= k_; ++k) {
    power = power * ratio;
    if (power.coeffs().empty()) break;
    sum = sum + power;
  }
  return inv_body * sum;
}

}  // namespace sric::oracle
