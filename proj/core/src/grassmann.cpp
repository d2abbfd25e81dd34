#include "sric/grassmann.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sric {

namespace {

void check_generator_count(int K) {
  if (K < GrassmannElement::kMinGenerators || K > GrassmannElement::kMaxGenerators) {
    throw DimensionError("generator count must lie in [2, 8], got " + std::to_string(K));
  }
}

void check_same_algebra(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.generators() != b.generators()) {
    throw DimensionError("elements from different algebras: K=" +
                         std::to_string(a.generators()) + " vs K=" +
                         std::to_string(b.generators()));
  }
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

int merge_sign(BladeIndex a, BladeIndex b) {
  // Each generator of b must hop over every higher-indexed generator of a.
  int swaps = 0;
  BladeIndex above = a >> 1;
  while (above != 0) {
    swaps += __builtin_popcount(above & b);
    above >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

GrassmannElement::GrassmannElement(int K) : k_(K) { check_generator_count(K); }

GrassmannElement::GrassmannElement(int K, BladeIndex blade, Complex coeff) : k_(K) {
  check_generator_count(K);
  if (blade >= blade_count()) {
    throw DimensionError("blade " + std::to_string(blade) + " out of range for K=" +
                         std::to_string(K));
  }
  coeffs_[blade] = coeff;
  prune();
}

GrassmannElement GrassmannElement::generator(int K, int index) {
  if (index < 0 || index >= K) {
    throw DimensionError("generator index " + std::to_string(index) +
                         " out of range for K=" + std::to_string(K));
  }
  return {K, BladeIndex{1} << index, 1.0};
}

GrassmannElement GrassmannElement::from_coeffs(
    int K, const std::vector<std::pair<BladeIndex, Complex>>& coeffs) {
  GrassmannElement out(K);
  for (const auto& [blade, c] : coeffs) {
    if (blade >= out.blade_count()) {
      throw DimensionError("blade " + std::to_string(blade) + " out of range for K=" +
                           std::to_string(K));
    }
    out.coeffs_[blade] += c;
  }
  out.prune();
  return out;
}

Complex GrassmannElement::coeff(BladeIndex blade) const {
  auto it = coeffs_.find(blade);
  return it == coeffs_.end() ? Complex(0.0) : it->second;
}

double GrassmannElement::max_norm() const {
  double m = 0.0;
  for (const auto& [blade, c] : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool GrassmannElement::has_parity(int parity) const {
  for (const auto& [blade, c] : coeffs_) {
    if ((grade(blade) & 1) != parity) return false;
  }
  return true;
}

GrassmannElement GrassmannElement::operator-() const { return Complex(-1.0) * *this; }

GrassmannElement GrassmannElement::conjugate_coeffs() const {
  GrassmannElement out(k_);
  for (const auto& [blade, c] : coeffs_) out.coeffs_[blade] = std::conj(c);
  out.prune();
  return out;
}

void GrassmannElement::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == Complex(0.0)) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

GrassmannElement gmul(const GrassmannElement& a, const GrassmannElement& b) {
  check_same_algebra(a, b);
  GrassmannElement out(a.generators());
  for (const auto& [ba, ca] : a.coeffs_) {
    for (const auto& [bb, cb] : b.coeffs_) {
      if ((ba & bb) != 0) continue;  // repeated generator: nilpotent
      const double sign = merge_sign(ba, bb);
      out.coeffs_[ba | bb] += sign * ca * cb;
    }
  }
  out.prune();
  return out;
}

GrassmannElement gdagger(const GrassmannElement& a) {
  const int K = a.generators();
  GrassmannElement out(K);
  for (const auto& [blade, c] : a.coeffs_) {
    // Factors in reverse order, each generator replaced by its partner.
    std::vector<int> indices;
    for (int i = K - 1; i >= 0; --i) {
      if (blade & (BladeIndex{1} << i)) indices.push_back(i ^ 1);
    }
    // Bubble-sort back into canonical order, counting transpositions.
    int swaps = 0;
    for (std::size_t i = 0; i + 1 < indices.size(); ++i) {
      for (std::size_t j = 0; j + 1 < indices.size() - i; ++j) {
        if (indices[j] > indices[j + 1]) {
          std::swap(indices[j], indices[j + 1]);
          ++swaps;
        }
      }
    }
    BladeIndex image = 0;
    for (int idx : indices) image |= BladeIndex{1} << idx;
    const double sign = (swaps & 1) ? -1.0 : 1.0;
    out.coeffs_[image] += sign * std::conj(c);
  }
  out.prune();
  return out;
}

std::pair<Complex, GrassmannElement> body_soul(const GrassmannElement& a) {
  Complex body = a.coeff(0);
  GrassmannElement soul = a - GrassmannElement::scalar(a.generators(), body);
  return {body, soul};
}

GrassmannElement ginverse(const GrassmannElement& a) {
  const auto [body, soul] = body_soul(a);
  if (body == Complex(0.0)) {
    throw NonInvertibleError("element has zero body, no inverse exists");
  }
  const int K = a.generators();
  const GrassmannElement ratio = (Complex(-1.0) / body) * soul;  // -soul/N
  GrassmannElement sum = GrassmannElement::one(K);
  GrassmannElement power = GrassmannElement::one(K);
  for (int k = 1; k <= K; ++k) {
    power = gmul(power, ratio);
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return (Complex(1.0) / body) * sum;
}

GrassmannElement gexp(const GrassmannElement& a) {
  if (!a.has_parity(0)) {
    throw GradingError("gexp requires an even-graded element");
  }
  const auto [body, soul] = body_soul(a);
  const int K = a.generators();
  GrassmannElement sum = GrassmannElement::one(K);
  GrassmannElement power = GrassmannElement::one(K);
  double factorial = 1.0;
  for (int k = 1; k <= K; ++k) {
    power = gmul(power, soul);
    if (power.is_zero()) break;
    factorial *= k;
    sum = sum + (Complex(1.0 / factorial)) * power;
  }
  return std::exp(body) * sum;
}

GrassmannElement grade_project(const GrassmannElement& a, int k) {
  if (k < 0 || k > a.generators()) {
    throw DimensionError("grade " + std::to_string(k) + " out of range");
  }
  GrassmannElement out(a.generators());
  for (const auto& [blade, c] : a.coeffs_) {
    if (grade(blade) == k) out.coeffs_[blade] = c;
  }
  return out;
}

GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
  check_same_algebra(a, b);
  GrassmannElement out = a;
  for (const auto& [blade, c] : b.coeffs_) out.coeffs_[blade] += c;
  out.prune();
  return out;
}

GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) {
  check_same_algebra(a, b);
  GrassmannElement out = a;
  for (const auto& [blade, c] : b.coeffs_) out.coeffs_[blade] -= c;
  out.prune();
  return out;
}

GrassmannElement operator*(Complex s, const GrassmannElement& a) {
  GrassmannElement out(a.generators());
  for (const auto& [blade, c] : a.coeffs_) out.coeffs_[blade] = s * c;
  out.prune();
  return out;
}

bool approx_equal(const GrassmannElement& a, const GrassmannElement& b, double tol) {
  return (a - b).max_norm() <= tol;
}

std::string blade_name(BladeIndex blade, int K) {
  static const char* named[4] = {"eta", "etabar", "beta", "betabar"};
  if (blade == 0) return "1";
  std::string out;
  for (int i = 0; i < K; ++i) {
    if (!(blade & (BladeIndex{1} << i))) continue;
    if (!out.empty()) out += "^";
    out += (K <= 4) ? named[i] : ("g" + std::to_string(i));
  }
  return out;
}

std::string GrassmannElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [blade, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << format_double(c.real()) << (c.imag() < 0 ? "-" : "+")
       << format_double(std::abs(c.imag())) << "i)";
    if (blade != 0) os << "*" << blade_name(blade, k_);
  }
  return os.str();
}

std::string element_to_json(const GrassmannElement& a) {
  std::string out = "{\"K\": " + std::to_string(a.generators()) + ", \"coeffs\": [";
  bool first = true;
  for (const auto& [blade, c] : a.coeffs()) {
    if (!first) out += ", ";
    first = false;
    out += "{\"blade\": " + std::to_string(blade) + ", \"re\": " + format_double(c.real()) +
           ", \"im\": " + format_double(c.imag()) + "}";
  }
  out += "]}";
  return out;
}

}  // namespace sric
