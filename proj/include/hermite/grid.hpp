#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermite/coefficient.hpp"
#include "hermite/multiindex.hpp"
#include "hermite/polynomial.hpp"

namespace hermite {

/// One grid axis: strictly increasing nodes, each with a multiplicity >= 1.
template <class T>
struct Axis {
  std::vector<T> coords;
  std::vector<int> mult;

  std::size_t size() const { return coords.size(); }
  /// Sum of multiplicities, i.e. the number of basis slots on this axis.
  int total_multiplicity() const;
  /// Index of an exact node match.
  std::optional<std::size_t> find(const T& a) const;
};

/// Tensor grid A = A_1 x ... x A_n. Grid points are addressed by index
/// vectors into the axes, never by coordinates.
template <class T>
class GridSpec {
 public:
  GridSpec() = default;
  explicit GridSpec(std::vector<Axis<T>> axes) : axes_(std::move(axes)) {}
  /// Builds and validates; throws InputError listing every violation.
  static GridSpec checked(std::vector<Axis<T>> axes);
  /// Same multiplicity nu at every node of axis i.
  static GridSpec uniform(const std::vector<std::vector<T>>& coords, const std::vector<int>& nu);

  std::size_t dims() const { return axes_.size(); }
  const Axis<T>& axis(std::size_t i) const { return axes_.at(i); }
  const std::vector<Axis<T>>& axes() const { return axes_; }

  /// Number of nodes per axis.
  MultiIndex shape() const;
  std::size_t point_count() const;
  /// nu(a) = (nu_1(a_1), ..., nu_n(a_n)) for the point with index vector idx.
  MultiIndex multiplicity(const MultiIndex& idx) const;
  std::vector<T> coords(const MultiIndex& idx) const;
  /// Row-major position of a point (last axis fastest).
  std::size_t flat(const MultiIndex& idx) const;
  MultiIndex unflat(std::size_t pos) const;
  /// prod_i sum_a nu_i(a): the dimension of the interpolation space.
  std::size_t condition_count() const;
  /// Sub-grid over the index box [lo, hi].
  GridSpec sub_grid(const MultiIndex& lo, const MultiIndex& hi) const;
  /// Empty when all invariants hold.
  std::vector<std::string> violations() const;

 private:
  std::vector<Axis<T>> axes_;
};

/// Prescribed data at one grid point as read from a file, before checking.
template <class T>
struct PointRecord {
  MultiIndex index;
  std::vector<std::pair<MultiIndex, T>> t;
};

/// Checks a record set against its grid: every point present exactly once,
/// each carrying exactly the derivative orders of [0, nu(a) - 1].
template <class T>
std::vector<std::string> validate(const GridSpec<T>& grid, const std::vector<PointRecord<T>>& records);

/// Supplies the prescribed values of one grid point, in grevlex order of
/// [0, nu(a) - 1].
template <class T>
class DataSource {
 public:
  virtual ~DataSource() = default;
  virtual const GridSpec<T>& grid() const = 0;
  virtual std::vector<T> point_values(const MultiIndex& idx) const = 0;
};

/// Values t_a^k for every grid point, stored densely.
template <class T>
class HermiteData : public DataSource<T> {
 public:
  HermiteData() = default;
  /// values[flat(a)] in grevlex order over [0, nu(a) - 1].
  HermiteData(GridSpec<T> grid, std::vector<std::vector<T>> values);
  /// Throws InputError with all violations joined by newlines.
  static HermiteData from_records(const GridSpec<T>& grid, const std::vector<PointRecord<T>>& records);
  /// t_a^k = fn(coords(a), k)
  static HermiteData from_function(const GridSpec<T>& grid,
                                   const std::function<T(const std::vector<T>&, const MultiIndex&)>& fn);

  const GridSpec<T>& grid() const override { return grid_; }
  std::vector<T> point_values(const MultiIndex& idx) const override;
  const std::vector<T>& values_at(const MultiIndex& idx) const;
  const T& value(const MultiIndex& idx, const MultiIndex& k) const;
  std::vector<PointRecord<T>> records() const;

 private:
  GridSpec<T> grid_;
  std::vector<std::vector<T>> values_;
};

/// H_i(x_i) = prod_a (x_i - a)^{nu_i(a)}
template <class T>
UniPoly<T> axis_annihilator(const Axis<T>& axis, int var = 0);

/// H_a(x) = prod_{c != a} ((x - c) / (a - c))^{nu(c)}.
/// Throws DomainError if a is not a node of the axis.
template <class T>
UniPoly<T> nodal_basis(const Axis<T>& axis, const T& a, int var = 0);
template <class T>
UniPoly<T> nodal_basis_at(const Axis<T>& axis, std::size_t node, int var = 0);

}  // namespace hermite
