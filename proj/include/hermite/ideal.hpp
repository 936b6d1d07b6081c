#pragma once

#include <cstddef>
#include <vector>

#include "hermite/grid.hpp"
#include "hermite/interpolant.hpp"
#include "hermite/polynomial.hpp"

namespace hermite {

/// g = remainder + sum_i H_i quotients[i]
template <class T>
struct DivisionResult {
  MultiPoly<T> remainder;
  std::vector<MultiPoly<T>> quotients;  // indexed by axis, not by step
  std::vector<std::size_t> order;       // axes in the order they were divided
};

/// Divides g by H_1, ..., H_n in the given axis order (identity if empty).
template <class T>
DivisionResult<T> cascaded_divide(const MultiPoly<T>& g, const GridSpec<T>& grid,
                                  std::vector<std::size_t> order = {});

/// The interpolant of the data d^m g(a): the cascaded remainder, wrapped with
/// its Hermite coefficients.
template <class T>
struct PolynomialInterpolation {
  MultiPoly<T> remainder;
  HermiteInterpolant<T> interpolant;
};

template <class T>
PolynomialInterpolation<T> interpolate_polynomial(const MultiPoly<T>& g, const GridSpec<T>& grid);

/// t_a^k = d^k g(a), by exact differentiation.
template <class T>
HermiteData<T> sample_polynomial(const MultiPoly<T>& g, const GridSpec<T>& grid);

struct MembershipReport {
  bool member = false;
  /// Largest remainder coefficient; 0 for members in exact mode.
  double residual = 0.0;
  /// Threshold used in Binary64 mode (1e-10 * max|g|).
  double tolerance = 0.0;
};

/// g lies in the ideal (H_1, ..., H_n) iff its cascaded remainder vanishes.
template <class T>
MembershipReport ideal_member(const MultiPoly<T>& g, const GridSpec<T>& grid);

/// Membership by the derivative criterion: every d^m g(a) vanishes.
template <class T>
bool vanishes_on_conditions(const MultiPoly<T>& g, const GridSpec<T>& grid);

/// {H_1(x_1), ..., H_n(x_n)}. Leading terms are pure powers x_i^{deg H_i},
/// so the set is a reduced Groebner basis for any monomial order.
template <class T>
std::vector<UniPoly<T>> groebner_basis(const GridSpec<T>& grid);

}  // namespace hermite
