#include "hermite/oracles.hpp"

#include <cmath>
#include <utility>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

template <class T>
using Tr = CoeffTraits<T>;

// One-dimensional fundamental polynomials H_a^k, indexed [node][k]:
//   H_a^k(x) = w_a(x) (x-a)^k / k! * sum_{t < nu(a)-k} c_t (x-a)^t
// with w_a = prod_{c != a} (x - c)^{nu(c)} and c_t the Taylor coefficients of
// 1/w_a about a.
template <class T>
std::vector<std::vector<UniPoly<T>>> fundamental_1d(const Axis<T>& axis, int var) {
  std::vector<std::vector<UniPoly<T>>> out;
  for (std::size_t j = 0; j < axis.size(); ++j) {
    const T& a = axis.coords[j];
    const int nu = axis.mult[j];
    UniPoly<T> w = UniPoly<T>::constant(Tr<T>::from_int(1), var);
    for (std::size_t c = 0; c < axis.size(); ++c) {
      if (c != j) w *= UniPoly<T>::linear(axis.coords[c], var).pow(axis.mult[c]);
    }
    const auto inv = series_inverse_at(w, a, nu - 1);
    const UniPoly<T> shift = UniPoly<T>::linear(a, var);
    std::vector<UniPoly<T>> row;
    for (int k = 0; k < nu; ++k) {
      UniPoly<T> tail(std::vector<T>{}, var);
      UniPoly<T> power = UniPoly<T>::constant(Tr<T>::from_int(1), var);
      for (int t = 0; t < nu - k; ++t) {
        tail += power * inv[t];
        power *= shift;
      }
      UniPoly<T> h = w * shift.pow(k) * tail;
      h *= Tr<T>::from_int(1) / factorial<T>(k);
      row.push_back(std::move(h));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

template <class T>
MultiPoly<T> spitzbart_interpolate(const HermiteData<T>& data) {
  const auto& g = data.grid();
  const std::size_t n = g.dims();
  std::vector<std::vector<std::vector<MultiPoly<T>>>> fund(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& row : fundamental_1d(g.axis(i), static_cast<int>(i))) {
      std::vector<MultiPoly<T>> lifted;
      for (auto& h : row) lifted.push_back(MultiPoly<T>::from_uni(n, h));
      fund[i].push_back(std::move(lifted));
    }
  }
  MultiPoly<T> p(n);
  for (std::size_t q = 0; q < g.point_count(); ++q) {
    const MultiIndex a = g.unflat(q);
    const auto box = multiplicity_box(g.multiplicity(a));
    const auto& t = data.values_at(a);
    for (std::size_t r = 0; r < box->size(); ++r) {
      if (Tr<T>::is_zero(t[r])) continue;
      const MultiIndex& k = box->at(r);
      MultiPoly<T> term = MultiPoly<T>::constant(n, t[r]);
      for (std::size_t i = 0; i < n; ++i) term = term.mul(fund[i][a[i]][k[i]]);
      p += term;
    }
  }
  return p;
}

template <class T>
MultiPoly<T> vandermonde_interpolate(const HermiteData<T>& data) {
  const auto& g = data.grid();
  const std::size_t n = g.dims();
  const std::size_t size = g.condition_count();
  if (size > kVandermondeLimit) {
    throw SystemTooLargeError("confluent Vandermonde system of size " + std::to_string(size) + " exceeds " +
                              std::to_string(kVandermondeLimit));
  }
  MultiIndex top(n);
  for (std::size_t i = 0; i < n; ++i) top.set(i, g.axis(i).total_multiplicity() - 1);
  const auto monomials = enumerate_box(IndexBox(MultiIndex(n), top));

  // Row per condition (a, k): d^k x^e at a = prod_i e_i!/(e_i-k_i)! a_i^{e_i-k_i}.
  std::vector<std::vector<T>> A;
  std::vector<T> b;
  A.reserve(size);
  for (std::size_t q = 0; q < g.point_count(); ++q) {
    const MultiIndex a = g.unflat(q);
    const auto x = g.coords(a);
    const auto box = multiplicity_box(g.multiplicity(a));
    const auto& t = data.values_at(a);
    for (std::size_t r = 0; r < box->size(); ++r) {
      const MultiIndex& k = box->at(r);
      std::vector<T> row(monomials.size(), Tr<T>::from_int(0));
      for (std::size_t c = 0; c < monomials.size(); ++c) {
        const MultiIndex& e = monomials[c];
        if (!leq_partial(k, e)) continue;
        T v = Tr<T>::from_int(1);
        for (std::size_t i = 0; i < n; ++i) {
          v *= falling_factorial<T>(e[i], k[i]);
          for (int s = 0; s < e[i] - k[i]; ++s) v *= x[i];
        }
        row[c] = v;
      }
      A.push_back(std::move(row));
      b.push_back(t[r]);
    }
  }

  // Gaussian elimination; partial pivoting in Binary64, first nonzero pivot
  // in exact mode.
  const std::size_t m = A.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    if constexpr (Tr<T>::exact) {
      while (piv < m && Tr<T>::is_zero(A[piv][col])) ++piv;
    } else {
      for (std::size_t r = col + 1; r < m; ++r) {
        if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
      }
    }
    if (piv == m || Tr<T>::is_zero(A[piv][col])) throw DomainError("singular confluent Vandermonde system");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < m; ++r) {
      if (Tr<T>::is_zero(A[r][col])) continue;
      const T f = A[r][col] / A[col][col];
      for (std::size_t c = col; c < m; ++c) {
        if (!Tr<T>::is_zero(A[col][c])) A[r][c] -= f * A[col][c];
      }
      b[r] -= f * b[col];
    }
  }
  std::vector<T> sol(m);
  for (std::size_t r = m; r-- > 0;) {
    T s = b[r];
    for (std::size_t c = r + 1; c < m; ++c) {
      if (!Tr<T>::is_zero(A[r][c])) s -= A[r][c] * sol[c];
    }
    sol[r] = s / A[r][r];
  }
  MultiPoly<T> p(n);
  for (std::size_t c = 0; c < m; ++c) p.add_term(monomials[c], sol[c]);
  return p;
}

template MultiPoly<double> spitzbart_interpolate(const HermiteData<double>&);
template MultiPoly<Rational> spitzbart_interpolate(const HermiteData<Rational>&);
template MultiPoly<double> vandermonde_interpolate(const HermiteData<double>&);
template MultiPoly<Rational> vandermonde_interpolate(const HermiteData<Rational>&);

}  // namespace hermite
