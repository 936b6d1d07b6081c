#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace hermite {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator).
using Rational = mpq_class;

enum class CoeffMode { Binary64, ExactRational };

/// Parses "p/q", an integer, or a decimal literal ("0.7", "-1.25e-3") into an
/// exact rational. Throws InputError on malformed text.
Rational parse_rational(std::string_view text);

/// Exact rational equal to the shortest decimal representation of x, so that
/// 0.7 becomes 7/10 rather than the nearest binary fraction.
Rational rational_from_double(double x);

std::string rational_to_string(const Rational& q);

/// Per-type behaviour the polynomial code needs from a coefficient field.
template <class T>
struct CoeffTraits;

template <>
struct CoeffTraits<double> {
  static constexpr bool exact = false;
  static constexpr CoeffMode mode = CoeffMode::Binary64;
  static double from_int(long v) { return static_cast<double>(v); }
  static double from_ratio(long p, long q) { return static_cast<double>(p) / static_cast<double>(q); }
  static bool is_zero(double v) { return v == 0.0; }
  static double to_double(double v) { return v; }
  static double abs(double v) { return std::fabs(v); }
  static double from_double(double v) { return v; }
};

template <>
struct CoeffTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr CoeffMode mode = CoeffMode::ExactRational;
  static Rational from_int(long v) { return Rational(v); }
  static Rational from_ratio(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static double to_double(const Rational& v) { return v.get_d(); }
  static Rational abs(const Rational& v) { return ::abs(v); }
  static Rational from_double(double v) { return rational_from_double(v); }
};

template <class T>
T factorial(int n) {
  T r = CoeffTraits<T>::from_int(1);
  for (int i = 2; i <= n; ++i) r *= CoeffTraits<T>::from_int(i);
  return r;
}

/// n (n-1) ... (n-k+1)
template <class T>
T falling_factorial(int n, int k) {
  T r = CoeffTraits<T>::from_int(1);
  for (int i = 0; i < k; ++i) r *= CoeffTraits<T>::from_int(n - i);
  return r;
}

}  // namespace hermite
