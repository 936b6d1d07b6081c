#pragma once

#include <cstddef>

#include "hermite/grid.hpp"
#include "hermite/polynomial.hpp"

namespace hermite {

/// Tensor product of the classical one-dimensional Hermite fundamental
/// polynomials, built from Taylor coefficients of 1/H_a. Shares no code with
/// the Lambda-matrix construction.
template <class T>
MultiPoly<T> spitzbart_interpolate(const HermiteData<T>& data);

/// Largest system vandermonde_interpolate accepts.
inline constexpr std::size_t kVandermondeLimit = 512;

/// Direct solve of the confluent Vandermonde system in the monomial basis
/// x^e, e_i < sum_a nu_i(a). Throws SystemTooLargeError above the limit.
template <class T>
MultiPoly<T> vandermonde_interpolate(const HermiteData<T>& data);

}  // namespace hermite
