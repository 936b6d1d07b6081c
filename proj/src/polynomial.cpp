#include "hermite/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

template <class T>
using Tr = CoeffTraits<T>;

template <class T>
std::string coeff_text(const T& c) {
  if constexpr (Tr<T>::exact) {
    return rational_to_string(c);
  } else {
    std::ostringstream os;
    os.precision(17);
    os << c;
    return os.str();
  }
}

template <class T>
bool negative(const T& c) {
  if constexpr (Tr<T>::exact) return sgn(c) < 0;
  else return c < 0;
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

template <class T>
UniPoly<T>::UniPoly(std::vector<T> coeffs, int var) : var_(var), c_(std::move(coeffs)) {
  trim();
}

template <class T>
UniPoly<T> UniPoly<T>::constant(const T& c, int var) {
  return UniPoly(std::vector<T>{c}, var);
}

template <class T>
UniPoly<T> UniPoly<T>::linear(const T& root, int var) {
  return UniPoly(std::vector<T>{T(-root), Tr<T>::from_int(1)}, var);
}

template <class T>
void UniPoly<T>::trim() {
  while (!c_.empty() && Tr<T>::is_zero(c_.back())) c_.pop_back();
}

template <class T>
T UniPoly<T>::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Tr<T>::from_int(0);
  return c_[i];
}

template <class T>
T UniPoly<T>::eval(const T& x) const {
  T acc = Tr<T>::from_int(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

template <class T>
UniPoly<T> UniPoly<T>::derivative(int order) const {
  if (order <= 0) return *this;
  if (order > degree()) return UniPoly(std::vector<T>{}, var_);
  std::vector<T> d(c_.size() - order);
  for (std::size_t j = 0; j < d.size(); ++j) {
    d[j] = c_[j + order] * falling_factorial<T>(static_cast<int>(j) + order, order);
  }
  return UniPoly(std::move(d), var_);
}

template <class T>
std::vector<T> UniPoly<T>::taylor_at(const T& a, int m) const {
  // Repeated synthetic division by (x - a).
  std::vector<T> work(c_);
  std::vector<T> out(std::max(m, 0), Tr<T>::from_int(0));
  for (int j = 0; j < m && !work.empty(); ++j) {
    T acc = Tr<T>::from_int(0);
    for (std::size_t i = work.size(); i-- > 0;) {
      T next = acc * a + work[i];
      work[i] = acc;
      acc = next;
    }
    out[j] = acc;
    work.pop_back();  // work[0..deg-1] is now the quotient
  }
  return out;
}

template <class T>
UniPoly<T> UniPoly<T>::pow(int e) const {
  UniPoly result = constant(Tr<T>::from_int(1), var_);
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

template <class T>
UniPoly<T>& UniPoly<T>::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Tr<T>::from_int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

template <class T>
UniPoly<T>& UniPoly<T>::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Tr<T>::from_int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

template <class T>
UniPoly<T>& UniPoly<T>::operator*=(const UniPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<T> r(c_.size() + o.c_.size() - 1, Tr<T>::from_int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (Tr<T>::is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

template <class T>
UniPoly<T>& UniPoly<T>::operator*=(const T& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

template <class T>
std::string UniPoly<T>::to_string(const std::string& name) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const T& c = c_[i];
    if (Tr<T>::is_zero(c)) continue;
    T mag = Tr<T>::abs(c);
    if (out.empty()) {
      if (negative(c)) out += "-";
    } else {
      out += negative(c) ? " - " : " + ";
    }
    const bool unit = mag == Tr<T>::from_int(1);
    if (!unit || i == 0) out += coeff_text(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += name;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

// -------------------------------------------------------------- MultiPoly

template <class T>
MultiPoly<T>::MultiPoly(std::size_t n, Terms terms) : n_(n) {
  for (auto& [e, c] : terms) add_term(e, c);
}

template <class T>
MultiPoly<T> MultiPoly<T>::constant(std::size_t n, const T& c) {
  MultiPoly p(n);
  p.add_term(MultiIndex(n), c);
  return p;
}

template <class T>
MultiPoly<T> MultiPoly<T>::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionError("variable index out of range");
  MultiIndex e(n);
  e.set(i, 1);
  MultiPoly p(n);
  p.add_term(e, Tr<T>::from_int(1));
  return p;
}

template <class T>
MultiPoly<T> MultiPoly<T>::from_uni(std::size_t n, const UniPoly<T>& u) {
  if (u.var() < 0 || static_cast<std::size_t>(u.var()) >= n) {
    throw DimensionError("univariate variable outside the ring");
  }
  MultiPoly p(n);
  for (int j = 0; j <= u.degree(); ++j) {
    MultiIndex e(n);
    e.set(u.var(), j);
    p.add_term(e, u.coeffs()[j]);
  }
  return p;
}

template <class T>
T MultiPoly<T>::coeff(const MultiIndex& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Tr<T>::from_int(0) : it->second;
}

template <class T>
void MultiPoly<T>::add_term(const MultiIndex& e, const T& c) {
  if (e.size() != n_) throw DimensionError("exponent length does not match ring dimension");
  if (Tr<T>::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (Tr<T>::is_zero(it->second)) terms_.erase(it);
  }
}

template <class T>
int MultiPoly<T>::degree(std::size_t i) const {
  int d = -1;
  for (const auto& kv : terms_) d = std::max(d, kv.first[i]);
  return d;
}

template <class T>
int MultiPoly<T>::total_degree() const {
  int d = -1;
  for (const auto& kv : terms_) d = std::max(d, kv.first.total_degree());
  return d;
}

template <class T>
void MultiPoly<T>::check_dims(const MultiPoly& o) const {
  if (n_ != o.n_) throw DimensionError("polynomials live in rings of different dimension");
}

template <class T>
MultiPoly<T>& MultiPoly<T>::operator+=(const MultiPoly& o) {
  check_dims(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

template <class T>
MultiPoly<T>& MultiPoly<T>::operator-=(const MultiPoly& o) {
  check_dims(o);
  for (const auto& [e, c] : o.terms_) add_term(e, T(-c));
  return *this;
}

template <class T>
MultiPoly<T>& MultiPoly<T>::operator*=(const T& s) {
  if (Tr<T>::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (Tr<T>::is_zero(it->second)) it = terms_.erase(it);
    else ++it;
  }
  return *this;
}

template <class T>
MultiPoly<T> MultiPoly<T>::mul(const MultiPoly& o) const {
  check_dims(o);
  MultiPoly r(n_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  }
  return r;
}

template <class T>
MultiPoly<T> MultiPoly<T>::pow(int e) const {
  MultiPoly result = constant(n_, Tr<T>::from_int(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result.mul(base);
    e >>= 1;
    if (e) base = base.mul(base);
  }
  return result;
}

template <class T>
MultiPoly<T> MultiPoly<T>::differentiate(const MultiIndex& k) const {
  if (k.size() != n_) throw DimensionError("derivative order length does not match ring dimension");
  MultiPoly r(n_);
  for (const auto& [e, c] : terms_) {
    if (!leq_partial(k, e)) continue;
    T v = c;
    std::vector<int> ne(e.entries());
    for (std::size_t i = 0; i < n_; ++i) {
      v *= falling_factorial<T>(e[i], k[i]);
      ne[i] -= k[i];
    }
    r.add_term(MultiIndex(std::move(ne)), v);
  }
  return r;
}

namespace {

// Terms are sorted lexicographically, so all terms sharing the exponents of
// axes < axis form a contiguous run, grouped again by the exponent of axis.
template <class T, class It>
T horner_range(It first, It last, std::size_t axis, const std::vector<T>& x) {
  const std::size_t n = x.size();
  if (axis == n) return first->second;  // a single term remains
  // Collect groups by the exponent of this axis (ascending within the run).
  std::vector<std::pair<int, T>> groups;
  It g = first;
  while (g != last) {
    const int e = g->first[axis];
    It h = g;
    while (h != last && h->first[axis] == e) ++h;
    groups.emplace_back(e, horner_range<T>(g, h, axis + 1, x));
    g = h;
  }
  T acc = Tr<T>::from_int(0);
  int prev = groups.back().first;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    for (int s = it->first; s < prev; ++s) acc *= x[axis];
    acc += it->second;
    prev = it->first;
  }
  for (int s = 0; s < prev; ++s) acc *= x[axis];
  return acc;
}

}  // namespace

template <class T>
T MultiPoly<T>::evaluate(const std::vector<T>& x) const {
  if (x.size() != n_) throw DimensionError("point dimension does not match ring dimension");
  if (terms_.empty()) return Tr<T>::from_int(0);
  if (n_ == 0) return terms_.begin()->second;
  return horner_range<T>(terms_.begin(), terms_.end(), 0, x);
}

template <class T>
double MultiPoly<T>::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& kv : terms_) m = std::max(m, std::fabs(Tr<T>::to_double(kv.second)));
  return m;
}

template <class T>
void MultiPoly<T>::prune(double rel) {
  if constexpr (Tr<T>::exact) {
    (void)rel;
  } else {
    const double cut = rel * max_abs_coeff();
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (std::fabs(it->second) < cut) it = terms_.erase(it);
      else ++it;
    }
  }
}

template <class T>
std::string MultiPoly<T>::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const MultiIndex, T>*> order;
  for (const auto& kv : terms_) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return compare_grevlex(a->first, b->first) > 0;
  });
  std::string out;
  for (auto* kv : order) {
    const T& c = kv->second;
    T mag = Tr<T>::abs(c);
    if (out.empty()) {
      if (negative(c)) out += "-";
    } else {
      out += negative(c) ? " - " : " + ";
    }
    const bool unit = mag == Tr<T>::from_int(1);
    const bool constant_term = kv->first.is_zero();
    if (!unit || constant_term) out += coeff_text(mag);
    bool first_var = unit;
    for (std::size_t i = 0; i < n_; ++i) {
      const int e = kv->first[i];
      if (e == 0) continue;
      if (!first_var) out += "*";
      first_var = false;
      out += "x" + std::to_string(i + 1);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

// ----------------------------------------------------------- FactoredTerm

template <class T>
T FactoredTerm<T>::evaluate(const std::vector<T>& x) const {
  T v = scalar;
  for (const auto& f : factors) v *= f.eval(x.at(static_cast<std::size_t>(f.var())));
  return v;
}

template <class T>
MultiPoly<T> FactoredTerm<T>::expand() const {
  const std::size_t n = factors.size();
  MultiPoly<T> p = MultiPoly<T>::constant(n, scalar);
  for (const auto& f : factors) p = p.mul(MultiPoly<T>::from_uni(n, f));
  return p;
}

// ------------------------------------------------------ series inversion

template <class T>
std::vector<T> series_inverse_at(const UniPoly<T>& h, const T& a, int order) {
  if (order < 0) return {};
  const std::vector<T> b = h.taylor_at(a, order + 1);
  if (Tr<T>::is_zero(b[0])) throw SingularInversionError("polynomial vanishes at the expansion point");
  std::vector<T> c(order + 1, Tr<T>::from_int(0));
  c[0] = Tr<T>::from_int(1) / b[0];
  for (int t = 1; t <= order; ++t) {
    T s = Tr<T>::from_int(0);
    for (int j = 1; j <= t; ++j) s += b[j] * c[t - j];
    c[t] = -s / b[0];
  }
  return c;
}

// ---------------------------------------------------------------- division

template <class T>
AxisDivision<T> divide_by_axis(const MultiPoly<T>& g, const UniPoly<T>& h) {
  if (h.is_zero()) throw DomainError("division by the zero polynomial");
  const std::size_t n = g.dims();
  const std::size_t i = static_cast<std::size_t>(h.var());
  if (i >= n) throw DimensionError("divisor variable outside the ring");
  const int dh = h.degree();
  const int dg = g.degree(i);
  AxisDivision<T> out{MultiPoly<T>(n), MultiPoly<T>(n)};
  if (dg < dh) {
    out.remainder = g;
    return out;
  }

  // rows[d]: coefficient of x_i^d, itself a polynomial in the other axes
  using Row = std::map<MultiIndex, T>;
  std::vector<Row> rows(static_cast<std::size_t>(dg) + 1);
  for (const auto& [e, c] : g.terms()) {
    MultiIndex rest = e;
    rest.set(i, 0);
    rows[e[i]].emplace(std::move(rest), c);
  }
  const T lc = h.leading();
  for (int d = dg; d >= dh; --d) {
    Row& top = rows[d];
    if (top.empty()) continue;
    const int shift = d - dh;
    for (const auto& [rest, c] : top) {
      const T f = c / lc;
      MultiIndex qe = rest;
      qe.set(i, shift);
      out.quotient.add_term(qe, f);
      for (int j = 0; j < dh; ++j) {
        const T& hj = h.coeffs()[j];
        if (Tr<T>::is_zero(hj)) continue;
        Row& target = rows[shift + j];
        auto [it, inserted] = target.try_emplace(rest, T(-(f * hj)));
        if (!inserted) {
          it->second -= f * hj;
          if (Tr<T>::is_zero(it->second)) target.erase(it);
        }
      }
    }
    top.clear();  // leading terms cancel by construction
  }
  for (int d = 0; d < dh && d <= dg; ++d) {
    for (const auto& [rest, c] : rows[d]) {
      MultiIndex e = rest;
      e.set(i, d);
      out.remainder.add_term(e, c);
    }
  }
  if constexpr (!Tr<T>::exact) {
    const double cut = 1e-12 * g.max_abs_coeff();
    MultiPoly<T> pruned(n);
    for (const auto& [e, c] : out.remainder.terms()) {
      if (std::fabs(c) >= cut) pruned.add_term(e, c);
    }
    out.remainder = std::move(pruned);
  }
  return out;
}

template class UniPoly<double>;
template class UniPoly<Rational>;
template class MultiPoly<double>;
template class MultiPoly<Rational>;
template struct FactoredTerm<double>;
template struct FactoredTerm<Rational>;
template std::vector<double> series_inverse_at(const UniPoly<double>&, const double&, int);
template std::vector<Rational> series_inverse_at(const UniPoly<Rational>&, const Rational&, int);
template AxisDivision<double> divide_by_axis(const MultiPoly<double>&, const UniPoly<double>&);
template AxisDivision<Rational> divide_by_axis(const MultiPoly<Rational>&, const UniPoly<Rational>&);

}  // namespace hermite
