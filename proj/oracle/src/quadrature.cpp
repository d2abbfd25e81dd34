#include "sric/oracle/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "sric/errors.hpp"

namespace sric::oracle {

namespace {

double finite(double v, double t) {
  if (!std::isfinite(v)) throw DomainError("non-finite integrand value", t);
  return v;
}

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = finite(f(lm), lm);
  const double frm = finite(f(rm), rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adapt(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

double quadrature_reference(const std::function<double(double)>& f, double t0, double t1, int n,
                            double tol) {
  if (n < 2) throw std::invalid_argument("quadrature needs n >= 2 base panels");
  const double h = (t1 - t0) / n;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = t0 + i * h;
    const double b = (i == n - 1) ? t1 : t0 + (i + 1) * h;
    const double m = 0.5 * (a + b);
    const double fa = finite(f(a), a);
    const double fm = finite(f(m), m);
    const double fb = finite(f(b), b);
    total += adapt(f, a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol / n, 48);
  }
  return total;
}

}  // namespace sric::oracle
