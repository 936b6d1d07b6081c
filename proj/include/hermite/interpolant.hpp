#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hermite/grid.hpp"
#include "hermite/multiindex.hpp"
#include "hermite/polynomial.hpp"

namespace hermite {

/// Per-axis degree above which evaluation switches from expanded Horner to
/// the product form of the nodal factors.
inline constexpr int kExpandedDegreeLimit = 15;

/// Univariate basis of one axis. Slot (node j, order k) holds
///   phi_{j,k}(x) = (x - a_j)^k / k! * H_{a_j}(x),  k < nu(a_j),
/// and slots are numbered node-major.
template <class T>
class AxisBasis {
 public:
  AxisBasis(const Axis<T>& axis, int var);

  std::size_t slot_count() const { return slot_node_.size(); }
  std::size_t node_count() const { return coords_.size(); }
  std::size_t slot(std::size_t node, int k) const { return offset_[node] + static_cast<std::size_t>(k); }
  std::size_t node_of(std::size_t s) const { return slot_node_[s]; }
  int order_of(std::size_t s) const { return slot_k_[s]; }
  /// Upper bound on the degree of every slot polynomial.
  int degree() const { return static_cast<int>(slot_count()) - 1; }

  const UniPoly<T>& nodal(std::size_t node) const { return nodal_[node]; }
  const UniPoly<T>& slot_poly(std::size_t s) const { return slot_poly_[s]; }

  /// out[s] = phi_s^{(m)}(x) for every slot.
  void values(const T& x, int m, T* out) const;

  /// D[r][k] = phi_{node,k}^{(r)}(a_node) for r, k < nu(node). Lower triangular
  /// with unit diagonal.
  const std::vector<std::vector<T>>& node_derivatives(std::size_t node) const { return node_deriv_[node]; }

 private:
  void values_factored(double x, int m, double* out) const;

  int var_;
  std::vector<T> coords_;
  std::vector<int> mult_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> slot_node_;
  std::vector<int> slot_k_;
  std::vector<UniPoly<T>> nodal_;
  std::vector<UniPoly<T>> slot_poly_;
  // derivs_[m][s]: m-th derivative of slot s in powers of (x - center_), kept only for low degree
  std::vector<std::vector<UniPoly<T>>> derivs_;
  T center_{};
  std::vector<T> nodal_scale_;  // 1 / prod_{c != a} (a - c)^{nu(c)}
  std::vector<std::vector<std::vector<T>>> node_deriv_;
};

/// Basis polynomials H_{(a,k)} of a grid, one AxisBasis per axis.
template <class T>
class BasisSet {
 public:
  explicit BasisSet(const GridSpec<T>& grid);

  const GridSpec<T>& grid() const { return grid_; }
  const AxisBasis<T>& axis(std::size_t i) const { return axes_[i]; }
  std::size_t dims() const { return axes_.size(); }

  /// H_{(a,k)} as a product of one slot polynomial per axis.
  FactoredTerm<T> term(const MultiIndex& a, const MultiIndex& k) const;
  /// H_a: all terms of point a in grevlex order of [0, nu(a) - 1].
  std::vector<FactoredTerm<T>> point_terms(const MultiIndex& a) const;

 private:
  GridSpec<T> grid_;
  std::vector<AxisBasis<T>> axes_;
};

template <class T>
BasisSet<T> build_basis(const GridSpec<T>& grid) {
  return BasisSet<T>(grid);
}

/// Dense square matrix, row-major.
template <class T>
struct LambdaMatrix {
  std::size_t size = 0;
  std::vector<T> entries;

  T& operator()(std::size_t r, std::size_t c) { return entries[r * size + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries[r * size + c]; }
  LambdaMatrix inverse() const;
  friend bool operator==(const LambdaMatrix&, const LambdaMatrix&) = default;
};

/// Entry (row j, col i) = d^j H_{(a,i)} evaluated at a, rows and columns in
/// grevlex order of [0, nu(a) - 1].
template <class T>
LambdaMatrix<T> build_lambda(const BasisSet<T>& basis, const MultiIndex& a);

/// Forward substitution for the unitriangular system L xi = t.
template <class T>
std::vector<T> solve_forward(const LambdaMatrix<T>& lambda, const std::vector<T>& t);

/// sum_{i < m} (I - L)^i t
template <class T>
std::vector<T> solve_neumann(const LambdaMatrix<T>& lambda, const std::vector<T>& t);

/// f = sum_a xi_a^T H_a. Stored as a dense tensor C over per-axis slots,
///   f(x) = sum_s C[s] prod_i phi_{s_i}(x_i).
template <class T>
class HermiteInterpolant {
 public:
  HermiteInterpolant(std::shared_ptr<const BasisSet<T>> basis, std::vector<std::vector<T>> xi);

  const GridSpec<T>& grid() const { return basis_->grid(); }
  const BasisSet<T>& basis() const { return *basis_; }
  std::size_t dims() const { return basis_->dims(); }
  /// xi_a in grevlex order.
  const std::vector<T>& xi(const MultiIndex& a) const { return xi_[grid().flat(a)]; }
  const std::vector<T>& coefficient_tensor() const { return coef_; }

  /// d^k f(x); k defaults to zero.
  T eval(const std::vector<T>& x) const;
  T eval(const std::vector<T>& x, const MultiIndex& k) const;

  /// Monomial form, computed on first use and cached.
  const MultiPoly<T>& expanded() const;

 private:
  std::shared_ptr<const BasisSet<T>> basis_;
  std::vector<std::vector<T>> xi_;
  std::vector<T> coef_;
  std::vector<std::size_t> slots_;
  struct Cache {
    std::once_flag once;
    MultiPoly<T> poly;
  };
  std::shared_ptr<Cache> cache_;
};

template <class T>
HermiteInterpolant<T> interpolate(const HermiteData<T>& data);

/// Interpolant on the sub-grid [lo, hi] of a data source.
template <class T>
HermiteInterpolant<T> interpolate_window(const DataSource<T>& source, const MultiIndex& lo, const MultiIndex& hi);

/// Largest |d^k f(a) - t_a^k| over all conditions (0 when exact).
template <class T>
double interpolation_residual(const HermiteInterpolant<T>& f, const HermiteData<T>& data);

}  // namespace hermite
