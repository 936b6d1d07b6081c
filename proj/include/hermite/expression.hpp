#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hermite/multiindex.hpp"

namespace hermite {

/// Truncated multivariate Taylor expansion about a point:
///   f(x0 + h) = sum_{k <= K} c[k] h^k  (componentwise box truncation).
class TaylorTensor {
 public:
  TaylorTensor() = default;
  explicit TaylorTensor(MultiIndex order);

  static TaylorTensor constant(const MultiIndex& order, double c);
  /// x_i about x0_i: x0_i + h_i.
  static TaylorTensor variable(const MultiIndex& order, std::size_t i, double x0);

  const MultiIndex& order() const { return order_; }
  std::size_t size() const { return c_.size(); }
  double value() const { return c_[0]; }
  double coeff(const MultiIndex& k) const { return c_[position(k)]; }
  /// d^k f(x0) = k! c[k]
  double derivative(const MultiIndex& k) const;

  TaylorTensor& operator+=(const TaylorTensor& o);
  TaylorTensor& operator-=(const TaylorTensor& o);
  TaylorTensor& operator*=(double s);
  TaylorTensor operator*(const TaylorTensor& o) const;
  TaylorTensor operator-() const;

  /// F(u) for a scalar function given its derivatives F^{(j)}(u0), j = 0..D,
  /// where D is the largest total degree kept.
  TaylorTensor compose(const std::vector<double>& derivs) const;
  int max_total_degree() const;

 private:
  std::size_t position(const MultiIndex& k) const;
  MultiIndex order_;
  std::vector<std::size_t> stride_;
  std::vector<double> c_;
};

struct ExprNode;

/// Expression tree over x1..xn with + - * / ^, exp, sin, cos, log, sqrt.
class Expression {
 public:
  Expression() = default;
  explicit Expression(std::shared_ptr<const ExprNode> root);

  /// Infix syntax, e.g. "x1*sin(x2) + exp(-(x1-3)^2)". Variables are x1, x2, ...
  /// (x, y, z are accepted for x1, x2, x3). Constants: pi, e.
  /// Throws InputError with the offending column.
  static Expression parse(std::string_view text);

  /// Highest variable index used (0 for constants).
  std::size_t dims() const;
  double eval(const std::vector<double>& x) const;
  TaylorTensor taylor(const std::vector<double>& x, const MultiIndex& order) const;
  double derivative(const std::vector<double>& x, const MultiIndex& k) const;
  std::string to_string() const;

 private:
  std::shared_ptr<const ExprNode> root_;
};

}  // namespace hermite
