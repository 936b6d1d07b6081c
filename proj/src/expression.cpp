#include "hermite/expression.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hermite/errors.hpp"

namespace hermite {

// ------------------------------------------------------------ TaylorTensor

TaylorTensor::TaylorTensor(MultiIndex order) : order_(std::move(order)) {
  const std::size_t n = order_.size();
  stride_.assign(n, 1);
  std::size_t total = 1;
  for (std::size_t i = n; i-- > 0;) {
    stride_[i] = total;
    total *= static_cast<std::size_t>(order_[i]) + 1;
  }
  c_.assign(total, 0.0);
}

TaylorTensor TaylorTensor::constant(const MultiIndex& order, double c) {
  TaylorTensor t(order);
  t.c_[0] = c;
  return t;
}

TaylorTensor TaylorTensor::variable(const MultiIndex& order, std::size_t i, double x0) {
  TaylorTensor t(order);
  t.c_[0] = x0;
  if (i < order.size() && order[i] >= 1) t.c_[t.stride_[i]] = 1.0;
  return t;
}

std::size_t TaylorTensor::position(const MultiIndex& k) const {
  if (k.size() != order_.size()) throw DimensionError("derivative order has wrong length");
  std::size_t p = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] > order_[i]) throw DomainError("derivative order beyond the expansion");
    p += static_cast<std::size_t>(k[i]) * stride_[i];
  }
  return p;
}

double TaylorTensor::derivative(const MultiIndex& k) const {
  double v = coeff(k);
  for (int e : k) {
    for (int q = 2; q <= e; ++q) v *= q;
  }
  return v;
}

TaylorTensor& TaylorTensor::operator+=(const TaylorTensor& o) {
  for (std::size_t p = 0; p < c_.size(); ++p) c_[p] += o.c_[p];
  return *this;
}

TaylorTensor& TaylorTensor::operator-=(const TaylorTensor& o) {
  for (std::size_t p = 0; p < c_.size(); ++p) c_[p] -= o.c_[p];
  return *this;
}

TaylorTensor& TaylorTensor::operator*=(double s) {
  for (auto& c : c_) c *= s;
  return *this;
}

TaylorTensor TaylorTensor::operator-() const {
  TaylorTensor t = *this;
  t *= -1.0;
  return t;
}

TaylorTensor TaylorTensor::operator*(const TaylorTensor& o) const {
  TaylorTensor r(order_);
  const std::size_t n = order_.size();
  const std::size_t total = c_.size();
  // Decode positions once.
  std::vector<std::vector<int>> idx(total, std::vector<int>(n));
  for (std::size_t p = 0; p < total; ++p) {
    std::size_t rest = p;
    for (std::size_t i = 0; i < n; ++i) {
      idx[p][i] = static_cast<int>(rest / stride_[i]);
      rest %= stride_[i];
    }
  }
  for (std::size_t p = 0; p < total; ++p) {
    if (c_[p] == 0.0) continue;
    for (std::size_t q = 0; q < total; ++q) {
      if (o.c_[q] == 0.0) continue;
      std::size_t s = 0;
      bool fits = true;
      for (std::size_t i = 0; i < n && fits; ++i) {
        const int e = idx[p][i] + idx[q][i];
        fits = e <= order_[i];
        s += static_cast<std::size_t>(e) * stride_[i];
      }
      if (fits) r.c_[s] += c_[p] * o.c_[q];
    }
  }
  return r;
}

int TaylorTensor::max_total_degree() const { return order_.total_degree(); }

TaylorTensor TaylorTensor::compose(const std::vector<double>& derivs) const {
  // F(u0 + v) = sum_j F^{(j)}(u0)/j! v^j, v nilpotent of index D + 1.
  const int D = max_total_degree();
  TaylorTensor v = *this;
  v.c_[0] = 0.0;
  auto coef = [&](int j) {
    double f = j < static_cast<int>(derivs.size()) ? derivs[j] : 0.0;
    for (int q = 2; q <= j; ++q) f /= q;
    return f;
  };
  TaylorTensor acc = constant(order_, coef(D));
  for (int j = D - 1; j >= 0; --j) {
    acc = acc * v;
    acc.c_[0] += coef(j);
  }
  return acc;
}

// --------------------------------------------------------------- the tree

enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Exp, Sin, Cos, Log, Sqrt };

struct ExprNode {
  Op op;
  double value = 0.0;    // Const
  std::size_t var = 0;   // Var, 0-based
  std::shared_ptr<const ExprNode> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr make_const(double v) {
  auto n = std::make_shared<ExprNode>();
  n->op = Op::Const;
  n->value = v;
  return n;
}

NodePtr make_var(std::size_t i) {
  auto n = std::make_shared<ExprNode>();
  n->op = Op::Var;
  n->var = i;
  return n;
}

bool is_constant(const ExprNode& n) {
  if (n.op == Op::Var) return false;
  if (n.op == Op::Const) return true;
  return (!n.a || is_constant(*n.a)) && (!n.b || is_constant(*n.b));
}

double eval_node(const ExprNode& n, const std::vector<double>& x) {
  switch (n.op) {
    case Op::Const: return n.value;
    case Op::Var:
      if (n.var >= x.size()) throw DimensionError("expression uses x" + std::to_string(n.var + 1));
      return x[n.var];
    case Op::Add: return eval_node(*n.a, x) + eval_node(*n.b, x);
    case Op::Sub: return eval_node(*n.a, x) - eval_node(*n.b, x);
    case Op::Mul: return eval_node(*n.a, x) * eval_node(*n.b, x);
    case Op::Div: return eval_node(*n.a, x) / eval_node(*n.b, x);
    case Op::Neg: return -eval_node(*n.a, x);
    case Op::Pow: return std::pow(eval_node(*n.a, x), eval_node(*n.b, x));
    case Op::Exp: return std::exp(eval_node(*n.a, x));
    case Op::Sin: return std::sin(eval_node(*n.a, x));
    case Op::Cos: return std::cos(eval_node(*n.a, x));
    case Op::Log: return std::log(eval_node(*n.a, x));
    case Op::Sqrt: return std::sqrt(eval_node(*n.a, x));
  }
  return 0.0;
}

// F^{(j)}(u0) for u^p, j = 0..D
std::vector<double> power_derivs(double u0, double p, int D) {
  std::vector<double> d(D + 1);
  double fall = 1.0;
  for (int j = 0; j <= D; ++j) {
    d[j] = fall == 0.0 ? 0.0 : fall * std::pow(u0, p - j);
    fall *= p - j;
  }
  return d;
}

TaylorTensor taylor_node(const ExprNode& n, const std::vector<double>& x, const MultiIndex& order) {
  const int D = order.total_degree();
  auto unary = [&](auto&& derivs) {
    TaylorTensor u = taylor_node(*n.a, x, order);
    return u.compose(derivs(u.value()));
  };
  switch (n.op) {
    case Op::Const: return TaylorTensor::constant(order, n.value);
    case Op::Var:
      if (n.var >= x.size()) throw DimensionError("expression uses x" + std::to_string(n.var + 1));
      return TaylorTensor::variable(order, n.var, x[n.var]);
    case Op::Add: {
      auto r = taylor_node(*n.a, x, order);
      r += taylor_node(*n.b, x, order);
      return r;
    }
    case Op::Sub: {
      auto r = taylor_node(*n.a, x, order);
      r -= taylor_node(*n.b, x, order);
      return r;
    }
    case Op::Mul: return taylor_node(*n.a, x, order) * taylor_node(*n.b, x, order);
    case Op::Div: {
      auto den = taylor_node(*n.b, x, order);
      if (den.value() == 0.0) throw DomainError("division by zero in expression");
      return taylor_node(*n.a, x, order) * den.compose(power_derivs(den.value(), -1.0, D));
    }
    case Op::Neg: return -taylor_node(*n.a, x, order);
    case Op::Pow: {
      if (is_constant(*n.b)) {
        const double p = eval_node(*n.b, x);
        return unary([&](double u0) { return power_derivs(u0, p, D); });
      }
      // a^b = exp(b log a)
      auto loga = unary([&](double u0) {
        if (u0 <= 0.0) throw DomainError("non-positive base with variable exponent");
        std::vector<double> d(D + 1);
        d[0] = std::log(u0);
        double f = 1.0;
        for (int j = 1; j <= D; ++j) {
          d[j] = f / std::pow(u0, j);
          f *= -static_cast<double>(j);
        }
        return d;
      });
      auto e = taylor_node(*n.b, x, order) * loga;
      return e.compose(std::vector<double>(D + 1, std::exp(e.value())));
    }
    case Op::Exp: return unary([&](double u0) { return std::vector<double>(D + 1, std::exp(u0)); });
    case Op::Sin:
    case Op::Cos:
      return unary([&](double u0) {
        const double s = std::sin(u0), c = std::cos(u0);
        const double cyc[4] = {s, c, -s, -c};
        const int shift = n.op == Op::Sin ? 0 : 1;
        std::vector<double> d(D + 1);
        for (int j = 0; j <= D; ++j) d[j] = cyc[(j + shift) % 4];
        return d;
      });
    case Op::Log:
      return unary([&](double u0) {
        if (u0 <= 0.0) throw DomainError("logarithm of a non-positive value");
        std::vector<double> d(D + 1);
        d[0] = std::log(u0);
        double f = 1.0;
        for (int j = 1; j <= D; ++j) {
          d[j] = f / std::pow(u0, j);
          f *= -static_cast<double>(j);
        }
        return d;
      });
    case Op::Sqrt:
      return unary([&](double u0) {
        if (u0 <= 0.0 && D > 0) throw DomainError("square root is not differentiable at 0");
        return power_derivs(u0, 0.5, D);
      });
  }
  throw DomainError("unknown expression node");
}

std::size_t max_var(const ExprNode& n) {
  if (n.op == Op::Var) return n.var + 1;
  std::size_t m = 0;
  if (n.a) m = std::max(m, max_var(*n.a));
  if (n.b) m = std::max(m, max_var(*n.b));
  return m;
}

std::string print(const ExprNode& n) {
  auto bin = [&](const char* s) { return "(" + print(*n.a) + s + print(*n.b) + ")"; };
  auto fn = [&](const char* s) { return std::string(s) + "(" + print(*n.a) + ")"; };
  switch (n.op) {
    case Op::Const: {
      std::ostringstream os;
      os.precision(17);
      os << n.value;
      return os.str();
    }
    case Op::Var: return "x" + std::to_string(n.var + 1);
    case Op::Add: return bin(" + ");
    case Op::Sub: return bin(" - ");
    case Op::Mul: return bin("*");
    case Op::Div: return bin("/");
    case Op::Neg: return "(-" + print(*n.a) + ")";
    case Op::Pow: return bin("^");
    case Op::Exp: return fn("exp");
    case Op::Sin: return fn("sin");
    case Op::Cos: return fn("cos");
    case Op::Log: return fn("log");
    case Op::Sqrt: return fn("sqrt");
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("expression column " + std::to_string(pos_ + 1) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr l = term();
    for (;;) {
      if (accept('+')) l = make(Op::Add, l, term());
      else if (accept('-')) l = make(Op::Sub, l, term());
      else return l;
    }
  }
  NodePtr term() {
    NodePtr l = unary();
    for (;;) {
      if (accept('*')) l = make(Op::Mul, l, unary());
      else if (accept('/')) l = make(Op::Div, l, unary());
      else return l;
    }
  }
  NodePtr unary() {
    if (accept('-')) return make(Op::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }
  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Op::Pow, base, unary());
    return base;
  }
  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return word();
    fail("unexpected '" + std::string(1, c) + "'");
  }
  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
      if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
        pos_ = p;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc() || ptr != s_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return make_const(v);
  }
  NodePtr word() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string w(s_.substr(start, pos_ - start));
    if (w == "pi") return make_const(std::numbers::pi);
    if (w == "e") return make_const(std::numbers::e);
    if (w == "x") return make_var(0);
    if (w == "y") return make_var(1);
    if (w == "z") return make_var(2);
    if (w.size() > 1 && w[0] == 'x' && std::all_of(w.begin() + 1, w.end(), ::isdigit)) {
      const int i = std::stoi(w.substr(1));
      if (i < 1) {
        pos_ = start;
        fail("variables are numbered from x1");
      }
      return make_var(static_cast<std::size_t>(i - 1));
    }
    Op op;
    if (w == "exp") op = Op::Exp;
    else if (w == "sin") op = Op::Sin;
    else if (w == "cos") op = Op::Cos;
    else if (w == "log") op = Op::Log;
    else if (w == "sqrt") op = Op::Sqrt;
    else {
      pos_ = start;
      fail("unknown name '" + w + "'");
    }
    if (!accept('(')) fail("expected '(' after " + w);
    NodePtr arg = expr();
    if (!accept(')')) fail("expected ')'");
    return make(op, arg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression::Expression(std::shared_ptr<const ExprNode> root) : root_(std::move(root)) {}

Expression Expression::parse(std::string_view text) { return Expression(Parser(text).parse()); }

std::size_t Expression::dims() const { return root_ ? max_var(*root_) : 0; }

double Expression::eval(const std::vector<double>& x) const { return eval_node(*root_, x); }

TaylorTensor Expression::taylor(const std::vector<double>& x, const MultiIndex& order) const {
  if (order.size() != x.size()) throw DimensionError("expansion order has wrong length");
  return taylor_node(*root_, x, order);
}

double Expression::derivative(const std::vector<double>& x, const MultiIndex& k) const {
  return taylor(x, k).derivative(k);
}

std::string Expression::to_string() const { return root_ ? print(*root_) : ""; }

}  // namespace hermite
