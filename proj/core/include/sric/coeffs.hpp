#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sric/errors.hpp"

namespace sric {

/// Parsed coefficient expression over: real literals, the variable t,
/// unary minus, binary + - * / ^ and the functions
/// sin cos exp tanh sqrt log. Trees are immutable and shared.
class CoefficientExpr {
public:
  /// IEEE double evaluation at time t. Non-finite results and function
  /// domain violations throw DomainError.
  double eval(double t) const;

  /// Exact derivative d/dt as a new expression tree.
  CoefficientExpr derivative() const;

  /// Parenthesized source form; parse(print(e)) evaluates identically to e.
  std::string to_string() const;

  struct Node;
  explicit CoefficientExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  const Node& root() const { return *root_; }

private:
  std::shared_ptr<const Node> root_;
};

/// Parse `src` with the precedence
///   ^ (right-assoc)  >  unary -  >  * /  >  + -
/// so "-t^2" is -(t^2). Unknown identifiers and malformed syntax throw
/// ParseError carrying the byte offset.
CoefficientExpr parse_expr(const std::string& src);

inline double eval_expr(const CoefficientExpr& e, double t) { return e.eval(t); }

/// The a(t), b(t), c(t) of dy/dt = a y^2 + b y + c.
struct CoefficientTriple {
  CoefficientExpr a;
  CoefficientExpr b;
  CoefficientExpr c;

  /// Checks a(t) != 0 at `samples` evenly spaced points of [t0, t1]
  /// (1/a appears in the linearization); throws ValidationError on failure.
  void validate_on(double t0, double t1, int samples = 64) const;

  /// True when b evaluates to zero at `samples` points of [t0, t1].
  bool b_is_zero_on(double t0, double t1, int samples = 64) const;
};

/// Named coefficient sets shipped with the CLI:
///   "const"    a=-1, b=0, c=1   (body solution tanh from y0=0)
///   "logistic" a=-1, b=1, c=0
///   "harmonic" a=1,  b=0, c=1   (body solution tan from y0=0)
CoefficientTriple preset_coeffs(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace sric
