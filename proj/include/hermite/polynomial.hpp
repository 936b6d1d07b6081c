#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hermite/coefficient.hpp"
#include "hermite/multiindex.hpp"

namespace hermite {

/// Dense univariate polynomial in one variable of an n-dimensional ring.
/// Coefficients are stored lowest degree first; the zero polynomial has no
/// coefficients. `var` is the 0-based axis the polynomial lives on.
template <class T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs, int var = 0);

  static UniPoly constant(const T& c, int var = 0);
  /// x - root
  static UniPoly linear(const T& root, int var = 0);

  int var() const { return var_; }
  void set_var(int v) { var_ = v; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const;
  const T& leading() const { return c_.back(); }

  T eval(const T& x) const;
  UniPoly derivative(int order = 1) const;
  /// Taylor coefficients about a: p(x) = sum_j out[j] (x-a)^j, first m terms.
  std::vector<T> taylor_at(const T& a, int m) const;
  UniPoly pow(int e) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const T& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const T& s) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& name = "x") const;

 private:
  void trim();
  int var_ = 0;
  std::vector<T> c_;
};

/// Sparse multivariate polynomial: exponent -> nonzero coefficient.
template <class T>
class MultiPoly {
 public:
  using Terms = std::map<MultiIndex, T>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t n) : n_(n) {}
  MultiPoly(std::size_t n, Terms terms);

  static MultiPoly constant(std::size_t n, const T& c);
  /// x_i (0-based axis).
  static MultiPoly variable(std::size_t n, std::size_t i);
  /// Embeds a univariate polynomial in its variable.
  static MultiPoly from_uni(std::size_t n, const UniPoly<T>& p);

  std::size_t dims() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  T coeff(const MultiIndex& e) const;
  /// Adds c to the coefficient of x^e, dropping it if the sum is zero.
  void add_term(const MultiIndex& e, const T& c);

  /// Max exponent of axis i over all terms; -1 for zero.
  int degree(std::size_t i) const;
  int total_degree() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const T& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const T& s) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return a.mul(b); }
  MultiPoly mul(const MultiPoly& o) const;
  MultiPoly pow(int e) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  MultiPoly differentiate(const MultiIndex& k) const;
  /// Nested Horner, one axis at a time.
  T evaluate(const std::vector<T>& x) const;

  /// Drops coefficients with |c| < rel * max|c|. No-op in exact mode.
  void prune(double rel);
  double max_abs_coeff() const;

  /// Human-readable form with variables x1..xn, highest grevlex term first.
  std::string to_string() const;

 private:
  void check_dims(const MultiPoly& o) const;
  std::size_t n_ = 0;
  Terms terms_;
};

template <class T>
MultiPoly<T> add(const MultiPoly<T>& p, const MultiPoly<T>& q) { return p + q; }
template <class T>
MultiPoly<T> mul(const MultiPoly<T>& p, const MultiPoly<T>& q) { return p.mul(q); }
template <class T>
MultiPoly<T> scale(const MultiPoly<T>& p, const T& c) { return p * c; }
template <class T>
MultiPoly<T> differentiate(const MultiPoly<T>& p, const MultiIndex& k) { return p.differentiate(k); }

/// scalar * prod_i factors[i](x_i); one factor per axis.
template <class T>
struct FactoredTerm {
  T scalar;
  std::vector<UniPoly<T>> factors;

  T evaluate(const std::vector<T>& x) const;
  MultiPoly<T> expand() const;
};

/// Taylor coefficients c_0..c_order of 1/h about a.
/// Throws SingularInversionError if h(a) == 0.
template <class T>
std::vector<T> series_inverse_at(const UniPoly<T>& h, const T& a, int order);

template <class T>
struct AxisDivision {
  MultiPoly<T> quotient;
  MultiPoly<T> remainder;
};

/// One Euclidean division step of g by h, viewing g as a polynomial in
/// h's variable with coefficients in the other variables.
/// Binary64 remainders are pruned at 1e-12 relative to max|g|.
template <class T>
AxisDivision<T> divide_by_axis(const MultiPoly<T>& g, const UniPoly<T>& h);

template <class U, class T>
MultiPoly<U> convert_poly(const MultiPoly<T>& p) {
  if constexpr (std::is_same_v<U, T>) return p;
  MultiPoly<U> out(p.dims());
  for (const auto& [e, c] : p.terms()) {
    if constexpr (std::is_same_v<U, double>) {
      out.add_term(e, CoeffTraits<T>::to_double(c));
    } else {
      out.add_term(e, CoeffTraits<U>::from_double(CoeffTraits<T>::to_double(c)));
    }
  }
  return out;
}

}  // namespace hermite
