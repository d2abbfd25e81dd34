#include "sric/coeffs.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>

namespace sric {

enum class NodeKind { Literal, Time, Neg, Add, Sub, Mul, Div, Pow, Func };
enum class FuncKind { Sin, Cos, Exp, Tanh, Sqrt, Log };

struct CoefficientExpr::Node {
  NodeKind kind;
  double value = 0.0;  // Literal
  FuncKind func = FuncKind::Sin;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const CoefficientExpr::Node>;
using Node = CoefficientExpr::Node;

NodePtr make_literal(double v) {
  return std::make_shared<Node>(Node{NodeKind::Literal, v, FuncKind::Sin, nullptr, nullptr});
}
NodePtr make_time() {
  return std::make_shared<Node>(Node{NodeKind::Time, 0.0, FuncKind::Sin, nullptr, nullptr});
}
NodePtr make_unary(NodeKind k, NodePtr a) {
  return std::make_shared<Node>(Node{k, 0.0, FuncKind::Sin, std::move(a), nullptr});
}
NodePtr make_binary(NodeKind k, NodePtr a, NodePtr b) {
  return std::make_shared<Node>(Node{k, 0.0, FuncKind::Sin, std::move(a), std::move(b)});
}
NodePtr make_func(FuncKind f, NodePtr a) {
  return std::make_shared<Node>(Node{NodeKind::Func, 0.0, f, std::move(a), nullptr});
}

const std::map<std::string, FuncKind>& function_table() {
  static const std::map<std::string, FuncKind> table = {
      {"sin", FuncKind::Sin}, {"cos", FuncKind::Cos},   {"exp", FuncKind::Exp},
      {"tanh", FuncKind::Tanh}, {"sqrt", FuncKind::Sqrt}, {"log", FuncKind::Log}};
  return table;
}

const char* function_name(FuncKind f) {
  switch (f) {
    case FuncKind::Sin: return "sin";
    case FuncKind::Cos: return "cos";
    case FuncKind::Exp: return "exp";
    case FuncKind::Tanh: return "tanh";
    case FuncKind::Sqrt: return "sqrt";
    case FuncKind::Log: return "log";
  }
  return "?";
}

class Parser {
public:
  explicit Parser(const std::string& src) : src_(src) {}

  NodePtr parse() {
    auto e = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  NodePtr parse_sum() {
    auto lhs = parse_product();
    for (;;) {
      if (eat('+')) {
        lhs = make_binary(NodeKind::Add, lhs, parse_product());
      } else if (eat('-')) {
        lhs = make_binary(NodeKind::Sub, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_product() {
    auto lhs = parse_factor();
    for (;;) {
      if (eat('*')) {
        lhs = make_binary(NodeKind::Mul, lhs, parse_factor());
      } else if (eat('/')) {
        lhs = make_binary(NodeKind::Div, lhs, parse_factor());
      } else {
        return lhs;
      }
    }
  }

  // factor := '-' factor | power; keeps unary minus below ^ so that
  // -t^2 == -(t^2) while 2^-3 still parses.
  NodePtr parse_factor() {
    if (eat('-')) return make_unary(NodeKind::Neg, parse_factor());
    return parse_power();
  }

  NodePtr parse_power() {
    auto base = parse_atom();
    if (eat('^')) {
      return make_binary(NodeKind::Pow, base, parse_factor());  // right-assoc
    }
    return base;
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) {
      throw ParseError("unexpected end of input", pos_);
    }
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = parse_sum();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return parse_number();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return parse_identifier();
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
      ++pos_;
    }
    // Exponent suffix: 1e-3, 2.5E+4
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_ + 1;
      if (mark < src_.size() && (src_[mark] == '+' || src_[mark] == '-')) ++mark;
      if (mark < src_.size() && std::isdigit(static_cast<unsigned char>(src_[mark]))) {
        pos_ = mark;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    try {
      std::size_t used = 0;
      const double v = std::stod(src_.substr(start, pos_ - start), &used);
      if (used != pos_ - start) throw std::invalid_argument("partial");
      return make_literal(v);
    } catch (const std::exception&) {
      throw ParseError("malformed number literal", start);
    }
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name = src_.substr(start, pos_ - start);
    if (name == "t") return make_time();
    auto it = function_table().find(name);
    if (it == function_table().end()) {
      throw ParseError("unknown identifier '" + name + "'", start);
    }
    if (!eat('(')) throw ParseError("expected '(' after function name", pos_);
    auto arg = parse_sum();
    if (!eat(')')) throw ParseError("expected ')'", pos_);
    return make_func(it->second, arg);
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

double require_finite(double v, const char* what, double t) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + " produced a non-finite value", t);
  }
  return v;
}

double eval_node(const Node& n, double t) {
  switch (n.kind) {
    case NodeKind::Literal: return n.value;
    case NodeKind::Time: return t;
    case NodeKind::Neg: return -eval_node(*n.lhs, t);
    case NodeKind::Add: return require_finite(eval_node(*n.lhs, t) + eval_node(*n.rhs, t), "+", t);
    case NodeKind::Sub: return require_finite(eval_node(*n.lhs, t) - eval_node(*n.rhs, t), "-", t);
    case NodeKind::Mul: return require_finite(eval_node(*n.lhs, t) * eval_node(*n.rhs, t), "*", t);
    case NodeKind::Div: {
      const double den = eval_node(*n.rhs, t);
      if (den == 0.0) throw DomainError("division by zero", t);
      return require_finite(eval_node(*n.lhs, t) / den, "/", t);
    }
    case NodeKind::Pow: {
      const double base = eval_node(*n.lhs, t);
      const double ex = eval_node(*n.rhs, t);
      if (base < 0.0 && ex != std::floor(ex)) {
        throw DomainError("negative base with non-integer exponent", t);
      }
      return require_finite(std::pow(base, ex), "^", t);
    }
    case NodeKind::Func: {
      const double arg = eval_node(*n.lhs, t);
      switch (n.func) {
        case FuncKind::Sin: return std::sin(arg);
        case FuncKind::Cos: return std::cos(arg);
        case FuncKind::Exp: return require_finite(std::exp(arg), "exp", t);
        case FuncKind::Tanh: return std::tanh(arg);
        case FuncKind::Sqrt:
          if (arg < 0.0) throw DomainError("sqrt of a negative value", t);
          return std::sqrt(arg);
        case FuncKind::Log:
          if (arg <= 0.0) throw DomainError("log of a non-positive value", t);
          return std::log(arg);
      }
      return 0.0;
    }
  }
  return 0.0;
}

bool depends_on_time(const Node& n) {
  switch (n.kind) {
    case NodeKind::Literal: return false;
    case NodeKind::Time: return true;
    case NodeKind::Neg:
    case NodeKind::Func: return depends_on_time(*n.lhs);
    default: return depends_on_time(*n.lhs) || depends_on_time(*n.rhs);
  }
}

NodePtr derive(const NodePtr& n);

NodePtr derive_pow(const NodePtr& n) {
  const NodePtr& u = n->lhs;
  const NodePtr& v = n->rhs;
  if (!depends_on_time(*v)) {
    // d(u^c) = c * u^(c-1) * u'
    auto cm1 = make_binary(NodeKind::Sub, v, make_literal(1.0));
    auto pw = make_binary(NodeKind::Pow, u, cm1);
    return make_binary(NodeKind::Mul, make_binary(NodeKind::Mul, v, pw), derive(u));
  }
  // General case u^v = exp(v log u): derivative u^v * (v' log u + v u'/u).
  auto logu = make_func(FuncKind::Log, u);
  auto term1 = make_binary(NodeKind::Mul, derive(v), logu);
  auto term2 = make_binary(NodeKind::Mul, v, make_binary(NodeKind::Div, derive(u), u));
  return make_binary(NodeKind::Mul, make_binary(NodeKind::Pow, u, v),
                     make_binary(NodeKind::Add, term1, term2));
}

NodePtr derive(const NodePtr& n) {
  switch (n->kind) {
    case NodeKind::Literal: return make_literal(0.0);
    case NodeKind::Time: return make_literal(1.0);
    case NodeKind::Neg: return make_unary(NodeKind::Neg, derive(n->lhs));
    case NodeKind::Add: return make_binary(NodeKind::Add, derive(n->lhs), derive(n->rhs));
    case NodeKind::Sub: return make_binary(NodeKind::Sub, derive(n->lhs), derive(n->rhs));
    case NodeKind::Mul:
      return make_binary(NodeKind::Add,
                         make_binary(NodeKind::Mul, derive(n->lhs), n->rhs),
                         make_binary(NodeKind::Mul, n->lhs, derive(n->rhs)));
    case NodeKind::Div: {
      // (u/v)' = u'/v - u v' / v^2
      auto first = make_binary(NodeKind::Div, derive(n->lhs), n->rhs);
      auto vsq = make_binary(NodeKind::Mul, n->rhs, n->rhs);
      auto second = make_binary(NodeKind::Div,
                                make_binary(NodeKind::Mul, n->lhs, derive(n->rhs)), vsq);
      return make_binary(NodeKind::Sub, first, second);
    }
    case NodeKind::Pow: return derive_pow(n);
    case NodeKind::Func: {
      NodePtr inner;
      switch (n->func) {
        case FuncKind::Sin: inner = make_func(FuncKind::Cos, n->lhs); break;
        case FuncKind::Cos:
          inner = make_unary(NodeKind::Neg, make_func(FuncKind::Sin, n->lhs));
          break;
        case FuncKind::Exp: inner = make_func(FuncKind::Exp, n->lhs); break;
        case FuncKind::Tanh: {
          // 1 - tanh^2
          auto th = make_func(FuncKind::Tanh, n->lhs);
          inner = make_binary(NodeKind::Sub, make_literal(1.0),
                              make_binary(NodeKind::Mul, th, th));
          break;
        }
        case FuncKind::Sqrt: {
          auto two_sqrt = make_binary(NodeKind::Mul, make_literal(2.0),
                                      make_func(FuncKind::Sqrt, n->lhs));
          inner = make_binary(NodeKind::Div, make_literal(1.0), two_sqrt);
          break;
        }
        case FuncKind::Log:
          inner = make_binary(NodeKind::Div, make_literal(1.0), n->lhs);
          break;
      }
      return make_binary(NodeKind::Mul, inner, derive(n->lhs));
    }
  }
  return make_literal(0.0);
}

void print_node(const Node& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::Literal: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", n.value);
      out += buf;
      return;
    }
    case NodeKind::Time: out += "t"; return;
    case NodeKind::Neg:
      out += "(-";
      print_node(*n.lhs, out);
      out += ")";
      return;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div:
    case NodeKind::Pow: {
      const char op = n.kind == NodeKind::Add   ? '+'
                      : n.kind == NodeKind::Sub ? '-'
                      : n.kind == NodeKind::Mul ? '*'
                      : n.kind == NodeKind::Div ? '/'
                                                : '^';
      out += "(";
      print_node(*n.lhs, out);
      out += op;
      print_node(*n.rhs, out);
      out += ")";
      return;
    }
    case NodeKind::Func:
      out += function_name(n.func);
      out += "(";
      print_node(*n.lhs, out);
      out += ")";
      return;
  }
}

}  // namespace

double CoefficientExpr::eval(double t) const {
  return require_finite(eval_node(*root_, t), "expression", t);
}

CoefficientExpr CoefficientExpr::derivative() const {
  return CoefficientExpr(derive(root_));
}

std::string CoefficientExpr::to_string() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

CoefficientExpr parse_expr(const std::string& src) {
  return CoefficientExpr(Parser(src).parse());
}

void CoefficientTriple::validate_on(double t0, double t1, int samples) const {
  for (int i = 0; i < samples; ++i) {
    const double t = t0 + (t1 - t0) * i / (samples - 1);
    if (a.eval(t) == 0.0) {
      throw ValidationError("coefficient a(t) vanishes at t = " + std::to_string(t));
    }
  }
}

bool CoefficientTriple::b_is_zero_on(double t0, double t1, int samples) const {
  for (int i = 0; i < samples; ++i) {
    const double t = t0 + (t1 - t0) * i / (samples - 1);
    if (b.eval(t) != 0.0) return false;
  }
  return true;
}

CoefficientTriple preset_coeffs(const std::string& name) {
  if (name == "const") {
    return {parse_expr("-1"), parse_expr("0"), parse_expr("1")};
  }
  if (name == "logistic") {
    return {parse_expr("-1"), parse_expr("1"), parse_expr("0")};
  }
  if (name == "harmonic") {
    return {parse_expr("1"), parse_expr("0"), parse_expr("1")};
  }
  throw ValidationError("unknown coefficient preset '" + name + "'");
}

std::vector<std::string> preset_names() { return {"const", "logistic", "harmonic"}; }

}  // namespace sric
