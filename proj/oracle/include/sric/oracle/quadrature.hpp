#pragma once

#include <functional>

namespace sric::oracle {

/// Adaptive Simpson quadrature of f over [t0, t1] to absolute tolerance
/// `tol` (default 1e-12), starting from n >= 2 base panels. Used as the
/// independent reference for every integral the library computes by other
/// means. Throws DomainError via sric on a non-finite integrand value.
double quadrature_reference(const std::function<double(double)>& f, double t0, double t1,
                            int n, double tol = 1e-12);

}  // namespace sric::oracle
