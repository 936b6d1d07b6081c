#include "hermite/interpolant.hpp"

#include <algorithm>
#include <cmath>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

template <class T>
using Tr = CoeffTraits<T>;

}  // namespace

// ---------------------------------------------------------------- AxisBasis

template <class T>
AxisBasis<T>::AxisBasis(const Axis<T>& axis, int var) : var_(var), coords_(axis.coords), mult_(axis.mult) {
  const std::size_t nodes = coords_.size();
  for (std::size_t j = 0; j < nodes; ++j) {
    offset_.push_back(slot_node_.size());
    for (int k = 0; k < mult_[j]; ++k) {
      slot_node_.push_back(j);
      slot_k_.push_back(k);
    }
    nodal_.push_back(nodal_basis_at(axis, j, var));
    T scale = Tr<T>::from_int(1);
    for (std::size_t c = 0; c < nodes; ++c) {
      if (c == j) continue;
      const T d = coords_[j] - coords_[c];
      for (int e = 0; e < mult_[c]; ++e) scale *= d;
    }
    nodal_scale_.push_back(Tr<T>::from_int(1) / scale);
  }
  for (std::size_t s = 0; s < slot_node_.size(); ++s) {
    const std::size_t j = slot_node_[s];
    const int k = slot_k_[s];
    UniPoly<T> p = UniPoly<T>::linear(coords_[j], var).pow(k);
    p *= Tr<T>::from_int(1) / factorial<T>(k);
    p *= nodal_[j];
    slot_poly_.push_back(std::move(p));
  }
  // Same slots in powers of (x - center_); binary64 loses far less to cancellation there.
  center_ = (coords_.front() + coords_.back()) / 2;
  Axis<T> local = axis;
  for (auto& c : local.coords) c -= center_;
  std::vector<UniPoly<T>> local_poly;
  for (std::size_t s = 0; s < slot_node_.size(); ++s) {
    const std::size_t j = slot_node_[s];
    UniPoly<T> p = UniPoly<T>::linear(local.coords[j], var).pow(slot_k_[s]);
    p *= Tr<T>::from_int(1) / factorial<T>(slot_k_[s]);
    p *= nodal_basis_at(local, j, var);
    local_poly.push_back(std::move(p));
  }
  if (!Tr<T>::exact && degree() <= kExpandedDegreeLimit) {
    derivs_.resize(static_cast<std::size_t>(degree()) + 1);
    for (const auto& p : local_poly) {
      for (int m = 0; m <= degree(); ++m) derivs_[m].push_back(p.derivative(m));
    }
  }
  for (std::size_t j = 0; j < nodes; ++j) {
    const int nu = mult_[j];
    std::vector<std::vector<T>> d(nu, std::vector<T>(nu, Tr<T>::from_int(0)));
    for (int k = 0; k < nu; ++k) {
      const auto taylor = local_poly[slot(j, k)].taylor_at(local.coords[j], nu);
      for (int r = 0; r < nu; ++r) d[r][k] = taylor[r] * factorial<T>(r);
    }
    node_deriv_.push_back(std::move(d));
  }
}

template <class T>
void AxisBasis<T>::values(const T& x, int m, T* out) const {
  if constexpr (Tr<T>::exact) {
    for (std::size_t s = 0; s < slot_poly_.size(); ++s) out[s] = slot_poly_[s].derivative(m).eval(x);
  } else {
    if (!derivs_.empty()) {
      if (m > degree()) {
        std::fill(out, out + slot_count(), 0.0);
        return;
      }
      for (std::size_t s = 0; s < slot_poly_.size(); ++s) out[s] = derivs_[m][s].eval(x - center_);
      return;
    }
    values_factored(x, m, out);
  }
}

// Product form: phi_{j,k}(x) = scale_j (x - a_j)^k / k! prod_{c != j} (x - c)^{nu_c}.
// Derivatives come from truncated Taylor series of the same product about x.
template <class T>
void AxisBasis<T>::values_factored(double x, int m, double* out) const {
  if constexpr (Tr<T>::exact) {
    (void)x, (void)m, (void)out;
  } else {
    const std::size_t nodes = coords_.size();
    if (m == 0) {
      for (std::size_t j = 0; j < nodes; ++j) {
        double h = nodal_scale_[j];
        for (std::size_t c = 0; c < nodes; ++c) {
          if (c == j) continue;
          const double d = x - coords_[c];
          for (int e = 0; e < mult_[c]; ++e) h *= d;
        }
        const double u = x - coords_[j];
        double pk = 1.0;
        for (int k = 0; k < mult_[j]; ++k) {
          out[offset_[j] + k] = h * pk;
          pk *= u / static_cast<double>(k + 1);
        }
      }
      return;
    }
    const std::size_t len = static_cast<std::size_t>(m) + 1;
    std::vector<double> series(len);
    for (std::size_t j = 0; j < nodes; ++j) {
      std::fill(series.begin(), series.end(), 0.0);
      series[0] = nodal_scale_[j];
      for (std::size_t c = 0; c < nodes; ++c) {
        if (c == j) continue;
        const double d = x - coords_[c];
        for (int e = 0; e < mult_[c]; ++e) {
          // multiply by (d + t), truncated
          for (std::size_t i = len; i-- > 1;) series[i] = series[i] * d + series[i - 1];
          series[0] *= d;
        }
      }
      const double u = x - coords_[j];
      double mfact = 1.0;
      for (int i = 2; i <= m; ++i) mfact *= i;
      for (int k = 0; k < mult_[j]; ++k) {
        // (u + t)^k / k! = sum_i t^i u^{k-i} / (i! (k-i)!)
        double acc = 0.0;
        for (int i = 0; i <= std::min(k, m); ++i) {
          double c = std::pow(u, k - i);
          for (int q = 2; q <= i; ++q) c /= q;
          for (int q = 2; q <= k - i; ++q) c /= q;
          acc += c * series[m - i];
        }
        out[offset_[j] + k] = acc * mfact;
      }
    }
  }
}

// ---------------------------------------------------------------- BasisSet

template <class T>
BasisSet<T>::BasisSet(const GridSpec<T>& grid) : grid_(grid) {
  for (std::size_t i = 0; i < grid.dims(); ++i) axes_.emplace_back(grid.axis(i), static_cast<int>(i));
}

template <class T>
FactoredTerm<T> BasisSet<T>::term(const MultiIndex& a, const MultiIndex& k) const {
  FactoredTerm<T> t{Tr<T>::from_int(1), {}};
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (k[i] >= grid_.axis(i).mult.at(a[i])) throw DomainError("derivative order outside [0, nu(a) - 1]");
    t.factors.push_back(axes_[i].slot_poly(axes_[i].slot(a[i], k[i])));
  }
  return t;
}

template <class T>
std::vector<FactoredTerm<T>> BasisSet<T>::point_terms(const MultiIndex& a) const {
  std::vector<FactoredTerm<T>> out;
  for (const auto& k : multiplicity_box(grid_.multiplicity(a))->indices()) out.push_back(term(a, k));
  return out;
}

// ----------------------------------------------------------------- Lambda

template <class T>
LambdaMatrix<T> LambdaMatrix<T>::inverse() const {
  LambdaMatrix inv{size, std::vector<T>(size * size, Tr<T>::from_int(0))};
  for (std::size_t c = 0; c < size; ++c) {
    std::vector<T> e(size, Tr<T>::from_int(0));
    e[c] = Tr<T>::from_int(1);
    const auto col = solve_forward(*this, e);
    for (std::size_t r = 0; r < size; ++r) inv(r, c) = col[r];
  }
  return inv;
}

template <class T>
LambdaMatrix<T> build_lambda(const BasisSet<T>& basis, const MultiIndex& a) {
  const std::size_t n = basis.dims();
  const auto box = multiplicity_box(basis.grid().multiplicity(a));
  const std::size_t m = box->size();
  LambdaMatrix<T> lam{m, std::vector<T>(m * m, Tr<T>::from_int(0))};
  for (std::size_t r = 0; r < m; ++r) {
    const MultiIndex& j = box->at(r);
    for (std::size_t c = 0; c <= r; ++c) {
      const MultiIndex& i = box->at(c);
      if (!leq_partial(i, j)) continue;
      T v = Tr<T>::from_int(1);
      for (std::size_t ax = 0; ax < n; ++ax) {
        v *= basis.axis(ax).node_derivatives(static_cast<std::size_t>(a[ax]))[j[ax]][i[ax]];
      }
      lam(r, c) = v;
    }
  }
  return lam;
}

template <class T>
std::vector<T> solve_forward(const LambdaMatrix<T>& lambda, const std::vector<T>& t) {
  const std::size_t m = lambda.size;
  if (t.size() != m) throw DimensionError("right-hand side length does not match the matrix");
  std::vector<T> xi(m);
  for (std::size_t r = 0; r < m; ++r) {
    T s = t[r];
    for (std::size_t c = 0; c < r; ++c) {
      if (!Tr<T>::is_zero(lambda(r, c))) s -= lambda(r, c) * xi[c];
    }
    xi[r] = s / lambda(r, r);
  }
  return xi;
}

template <class T>
std::vector<T> solve_neumann(const LambdaMatrix<T>& lambda, const std::vector<T>& t) {
  const std::size_t m = lambda.size;
  if (t.size() != m) throw DimensionError("right-hand side length does not match the matrix");
  std::vector<T> acc(t), term(t), next(m);
  for (std::size_t it = 1; it < m; ++it) {
    for (std::size_t r = 0; r < m; ++r) {
      T s = Tr<T>::from_int(0);
      for (std::size_t c = 0; c < m; ++c) {
        T nrc = (r == c ? Tr<T>::from_int(1) : Tr<T>::from_int(0)) - lambda(r, c);
        if (!Tr<T>::is_zero(nrc)) s += nrc * term[c];
      }
      next[r] = s;
    }
    std::swap(term, next);
    for (std::size_t r = 0; r < m; ++r) acc[r] += term[r];
  }
  return acc;
}

// ------------------------------------------------------ HermiteInterpolant

template <class T>
HermiteInterpolant<T>::HermiteInterpolant(std::shared_ptr<const BasisSet<T>> basis, std::vector<std::vector<T>> xi)
    : basis_(std::move(basis)), xi_(std::move(xi)), cache_(std::make_shared<Cache>()) {
  const GridSpec<T>& g = basis_->grid();
  const std::size_t n = g.dims();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    slots_.push_back(basis_->axis(i).slot_count());
    total *= slots_.back();
  }
  if (xi_.size() != g.point_count()) throw DimensionError("one coefficient block per grid point expected");
  coef_.assign(total, Tr<T>::from_int(0));
  for (std::size_t p = 0; p < xi_.size(); ++p) {
    const MultiIndex a = g.unflat(p);
    const auto box = multiplicity_box(g.multiplicity(a));
    if (xi_[p].size() != box->size()) throw DimensionError("coefficient block has the wrong length");
    for (std::size_t q = 0; q < box->size(); ++q) {
      const MultiIndex& k = box->at(q);
      std::size_t pos = 0;
      for (std::size_t i = 0; i < n; ++i) pos = pos * slots_[i] + basis_->axis(i).slot(a[i], k[i]);
      coef_[pos] = xi_[p][q];
    }
  }
}

template <class T>
T HermiteInterpolant<T>::eval(const std::vector<T>& x) const {
  return eval(x, MultiIndex(dims()));
}

template <class T>
T HermiteInterpolant<T>::eval(const std::vector<T>& x, const MultiIndex& k) const {
  const std::size_t n = dims();
  if (x.size() != n || k.size() != n) throw DimensionError("point or derivative order has wrong length");
  std::size_t maxm = 0;
  for (auto s : slots_) maxm = std::max(maxm, s);
  std::vector<T> v(n * maxm);
  for (std::size_t i = 0; i < n; ++i) basis_->axis(i).values(x[i], k[i], v.data() + i * maxm);

  // Contract the last axis first; later passes run in place.
  std::size_t len = coef_.size();
  std::size_t m = slots_[n - 1];
  std::size_t rows = len / m;
  std::vector<T> buf(rows);
  {
    const T* vi = v.data() + (n - 1) * maxm;
    for (std::size_t r = 0; r < rows; ++r) {
      const T* row = coef_.data() + r * m;
      T s = Tr<T>::from_int(0);
      for (std::size_t j = 0; j < m; ++j) s += row[j] * vi[j];
      buf[r] = s;
    }
  }
  for (std::size_t i = n - 1; i-- > 0;) {
    len = rows;
    m = slots_[i];
    rows = len / m;
    const T* vi = v.data() + i * maxm;
    for (std::size_t r = 0; r < rows; ++r) {
      T s = Tr<T>::from_int(0);
      for (std::size_t j = 0; j < m; ++j) s += buf[r * m + j] * vi[j];
      buf[r] = s;
    }
  }
  return buf[0];
}

template <class T>
const MultiPoly<T>& HermiteInterpolant<T>::expanded() const {
  std::call_once(cache_->once, [this] {
    const std::size_t n = dims();
    // Change of basis along each axis: slot s -> monomial coefficients.
    std::vector<T> cur = coef_;
    std::size_t inner = coef_.size();
    std::size_t outer = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t m = slots_[i];
      inner /= m;
      std::vector<T> next(cur.size(), Tr<T>::from_int(0));
      const auto& ab = basis_->axis(i);
      for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t s = 0; s < m; ++s) {
          const auto& pc = ab.slot_poly(s).coeffs();
          for (std::size_t in = 0; in < inner; ++in) {
            const T& c = cur[(o * m + s) * inner + in];
            if (Tr<T>::is_zero(c)) continue;
            for (std::size_t e = 0; e < pc.size(); ++e) next[(o * m + e) * inner + in] += c * pc[e];
          }
        }
      }
      cur = std::move(next);
      outer *= m;
    }
    MultiPoly<T> p(n);
    for (std::size_t pos = 0; pos < cur.size(); ++pos) {
      if (Tr<T>::is_zero(cur[pos])) continue;
      MultiIndex e(n);
      std::size_t rest = pos;
      for (std::size_t i = n; i-- > 0;) {
        e.set(i, static_cast<int>(rest % slots_[i]));
        rest /= slots_[i];
      }
      p.add_term(e, cur[pos]);
    }
    cache_->poly = std::move(p);
  });
  return cache_->poly;
}

// ------------------------------------------------------------ construction

namespace {

template <class T>
HermiteInterpolant<T> build(const GridSpec<T>& grid, const DataSource<T>& source, const MultiIndex& lo) {
  auto basis = std::make_shared<const BasisSet<T>>(grid);
  std::vector<std::vector<T>> xi(grid.point_count());
  for (std::size_t p = 0; p < xi.size(); ++p) {
    const MultiIndex a = grid.unflat(p);
    const auto t = source.point_values(a + lo);
    xi[p] = solve_forward(build_lambda(*basis, a), t);
  }
  return HermiteInterpolant<T>(std::move(basis), std::move(xi));
}

}  // namespace

template <class T>
HermiteInterpolant<T> interpolate(const HermiteData<T>& data) {
  return build(data.grid(), data, MultiIndex(data.grid().dims()));
}

template <class T>
HermiteInterpolant<T> interpolate_window(const DataSource<T>& source, const MultiIndex& lo, const MultiIndex& hi) {
  return build(source.grid().sub_grid(lo, hi), source, lo);
}

template <class T>
double interpolation_residual(const HermiteInterpolant<T>& f, const HermiteData<T>& data) {
  const auto& g = data.grid();
  double worst = 0.0;
  for (std::size_t p = 0; p < g.point_count(); ++p) {
    const MultiIndex a = g.unflat(p);
    const auto x = g.coords(a);
    const auto box = multiplicity_box(g.multiplicity(a));
    const auto& t = data.values_at(a);
    for (std::size_t q = 0; q < box->size(); ++q) {
      const T diff = f.eval(x, box->at(q)) - t[q];
      worst = std::max(worst, std::fabs(Tr<T>::to_double(diff)));
    }
  }
  return worst;
}

#define HERMITE_INSTANTIATE_INTERPOLANT(T)                                                                 \
  template class AxisBasis<T>;                                                                             \
  template class BasisSet<T>;                                                                              \
  template struct LambdaMatrix<T>;                                                                         \
  template class HermiteInterpolant<T>;                                                                    \
  template LambdaMatrix<T> build_lambda(const BasisSet<T>&, const MultiIndex&);                            \
  template std::vector<T> solve_forward(const LambdaMatrix<T>&, const std::vector<T>&);                    \
  template std::vector<T> solve_neumann(const LambdaMatrix<T>&, const std::vector<T>&);                    \
  template HermiteInterpolant<T> interpolate(const HermiteData<T>&);                                       \
  template HermiteInterpolant<T> interpolate_window(const DataSource<T>&, const MultiIndex&, const MultiIndex&); \
  template double interpolation_residual(const HermiteInterpolant<T>&, const HermiteData<T>&);

HERMITE_INSTANTIATE_INTERPOLANT(double)
HERMITE_INSTANTIATE_INTERPOLANT(Rational)

}  // namespace hermite
