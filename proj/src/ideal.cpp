#include "hermite/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

template <class T>
using Tr = CoeffTraits<T>;

}  // namespace

template <class T>
DivisionResult<T> cascaded_divide(const MultiPoly<T>& g, const GridSpec<T>& grid, std::vector<std::size_t> order) {
  const std::size_t n = grid.dims();
  if (g.dims() != n) throw DimensionError("polynomial and grid dimensions differ");
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  std::vector<std::size_t> check = order;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check.size() != n || check[i] != i) throw InputError("division order must be a permutation of the axes");
  }
  DivisionResult<T> out{g, std::vector<MultiPoly<T>>(n, MultiPoly<T>(n)), order};
  for (std::size_t axis : order) {
    auto step = divide_by_axis(out.remainder, axis_annihilator(grid.axis(axis), static_cast<int>(axis)));
    out.quotients[axis] = std::move(step.quotient);
    out.remainder = std::move(step.remainder);
  }
  return out;
}

template <class T>
HermiteData<T> sample_polynomial(const MultiPoly<T>& g, const GridSpec<T>& grid) {
  return HermiteData<T>::from_function(
      grid, [&g](const std::vector<T>& x, const MultiIndex& k) { return g.differentiate(k).evaluate(x); });
}

template <class T>
PolynomialInterpolation<T> interpolate_polynomial(const MultiPoly<T>& g, const GridSpec<T>& grid) {
  auto div = cascaded_divide(g, grid);
  auto f = interpolate(sample_polynomial(g, grid));
  return PolynomialInterpolation<T>{std::move(div.remainder), std::move(f)};
}

template <class T>
MembershipReport ideal_member(const MultiPoly<T>& g, const GridSpec<T>& grid) {
  const auto div = cascaded_divide(g, grid);
  MembershipReport rep;
  rep.residual = div.remainder.max_abs_coeff();
  if constexpr (Tr<T>::exact) {
    rep.member = div.remainder.is_zero();
  } else {
    rep.tolerance = 1e-10 * g.max_abs_coeff();
    rep.member = rep.residual <= rep.tolerance;
  }
  return rep;
}

template <class T>
bool vanishes_on_conditions(const MultiPoly<T>& g, const GridSpec<T>& grid) {
  const double tol = Tr<T>::exact ? 0.0 : 1e-9 * std::max(1.0, g.max_abs_coeff());
  for (std::size_t p = 0; p < grid.point_count(); ++p) {
    const MultiIndex a = grid.unflat(p);
    const auto x = grid.coords(a);
    for (const auto& k : multiplicity_box(grid.multiplicity(a))->indices()) {
      const T v = g.differentiate(k).evaluate(x);
      if (Tr<T>::exact ? !Tr<T>::is_zero(v) : std::fabs(Tr<T>::to_double(v)) > tol) return false;
    }
  }
  return true;
}

template <class T>
std::vector<UniPoly<T>> groebner_basis(const GridSpec<T>& grid) {
  std::vector<UniPoly<T>> out;
  for (std::size_t i = 0; i < grid.dims(); ++i) out.push_back(axis_annihilator(grid.axis(i), static_cast<int>(i)));
  return out;
}

#define HERMITE_INSTANTIATE_IDEAL(T)                                                                      \
  template struct DivisionResult<T>;                                                                      \
  template DivisionResult<T> cascaded_divide(const MultiPoly<T>&, const GridSpec<T>&, std::vector<std::size_t>); \
  template HermiteData<T> sample_polynomial(const MultiPoly<T>&, const GridSpec<T>&);                     \
  template PolynomialInterpolation<T> interpolate_polynomial(const MultiPoly<T>&, const GridSpec<T>&);    \
  template MembershipReport ideal_member(const MultiPoly<T>&, const GridSpec<T>&);                        \
  template bool vanishes_on_conditions(const MultiPoly<T>&, const GridSpec<T>&);                          \
  template std::vector<UniPoly<T>> groebner_basis(const GridSpec<T>&);

HERMITE_INSTANTIATE_IDEAL(double)
HERMITE_INSTANTIATE_IDEAL(Rational)

}  // namespace hermite
