#include "hermite/spline.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>

#include "hermite/errors.hpp"
#include "hermite/parallel.hpp"

namespace hermite {

namespace {

template <class T>
using Tr = CoeffTraits<T>;

long floor_of(double q) { return static_cast<long>(std::floor(q)); }

long floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

template <class T>
bool is_integer(const T& v) {
  return T(v - Tr<T>::from_int(floor_of(v))) == Tr<T>::from_int(0);
}

template <class T>
bool unit_integer_axis(const Axis<T>& axis) {
  if (!is_integer(axis.coords.front())) return false;
  for (std::size_t j = 1; j < axis.size(); ++j) {
    if (T(axis.coords[j] - axis.coords[j - 1]) != Tr<T>::from_int(1)) return false;
  }
  return true;
}

// Half-integers go away from zero.
template <class T>
long round_half_away(const T& q) {
  const T half = Tr<T>::from_ratio(1, 2);
  if (q >= Tr<T>::from_int(0)) return floor_of(T(q + half));
  return -floor_of(T(half - q));
}

}  // namespace

template <class T>
WindowRange select_window(const Axis<T>& axis, const T& q, int w) {
  const int size = static_cast<int>(axis.size());
  if (w < 2) throw InputError("window width must be at least 2");
  if (w > size) throw InputError("window width exceeds the number of nodes on the axis");
  if (q < axis.coords.front() || q > axis.coords.back()) throw DomainError("query outside the grid hull");

  long lo;
  if (unit_integer_axis(axis)) {
    const long base = floor_of(axis.coords.front());
    if (w % 2 == 1) lo = round_half_away(q) - (w - 1) / 2 - base;
    else lo = floor_of(q) - w / 2 + 1 - base;
  } else {
    // last node <= q
    const auto it = std::upper_bound(axis.coords.begin(), axis.coords.end(), q);
    long j = static_cast<long>(it - axis.coords.begin()) - 1;
    if (w % 2 == 1) {
      if (j + 1 < size && T(axis.coords[j + 1] - q) < T(q - axis.coords[j])) ++j;
      lo = j - (w - 1) / 2;
    } else {
      lo = j - w / 2 + 1;
    }
  }
  lo = std::clamp<long>(lo, 0, size - w);
  return WindowRange{static_cast<int>(lo), static_cast<int>(lo) + w - 1};
}

template <class T>
SplineInterpolant<T>::SplineInterpolant(std::shared_ptr<const DataSource<T>> data, std::vector<int> window)
    : data_(std::move(data)), window_(std::move(window)) {
  const auto& g = data_->grid();
  if (window_.size() != g.dims()) throw DimensionError("one window width per axis expected");
  for (std::size_t i = 0; i < g.dims(); ++i) {
    if (window_[i] < 2) throw InputError("window width must be at least 2");
    if (static_cast<std::size_t>(window_[i]) > g.axis(i).size()) {
      throw InputError("window width exceeds the number of nodes on axis " + std::to_string(i + 1));
    }
  }
}

template <class T>
MultiIndex SplineInterpolant<T>::corner(const std::vector<T>& x) const {
  const auto& g = grid();
  if (x.size() != g.dims()) throw DimensionError("point has wrong length");
  MultiIndex lo(g.dims());
  for (std::size_t i = 0; i < g.dims(); ++i) lo.set(i, select_window(g.axis(i), x[i], window_[i]).lo);
  return lo;
}

template <class T>
std::shared_ptr<const HermiteInterpolant<T>> SplineInterpolant<T>::patch(const MultiIndex& lo) const {
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(lo);
    if (it != cache_.end()) return it->second;
  }
  MultiIndex hi(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) hi.set(i, lo[i] + window_[i] - 1);
  auto built = std::make_shared<const Patch>(interpolate_window(*data_, lo, hi));
  std::unique_lock lock(mu_);
  // Another thread may have won the race; its patch is identical.
  auto [it, inserted] = cache_.emplace(lo, std::move(built));
  return it->second;
}

template <class T>
std::size_t SplineInterpolant<T>::cached_patches() const {
  std::shared_lock lock(mu_);
  return cache_.size();
}

template <class T>
T SplineInterpolant<T>::eval(const std::vector<T>& x) const {
  return eval(x, MultiIndex(x.size()));
}

template <class T>
T SplineInterpolant<T>::eval(const std::vector<T>& x, const MultiIndex& k) const {
  return patch(corner(x))->eval(x, k);
}

template <class T>
std::vector<T> SplineInterpolant<T>::eval_many(const std::vector<std::vector<T>>& xs, const MultiIndex& k,
                                               unsigned threads) const {
  std::vector<T> out(xs.size());
  parallel_chunks(xs.size(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t p = b; p < e; ++p) out[p] = eval(xs[p], k);
  });
  return out;
}

template <class T>
ContinuityReport continuity_report(const SplineInterpolant<T>& s, std::size_t axis, std::size_t node, int probes,
                                   const ContinuityOptions& opt) {
  const auto& g = s.grid();
  const std::size_t n = g.dims();
  if (axis >= n) throw DimensionError("axis out of range");
  const Axis<T>& ax = g.axis(axis);
  if (node == 0 || node + 1 >= ax.size()) throw DomainError("continuity needs an interior node");
  const T a = ax.coords[node];
  const int w = s.window()[axis];

  int lo_minus;
  int lo_plus;
  if (opt.pairing == PatchPairing::SharedHyperplane) {
    lo_minus = static_cast<int>(node) - w + 1;
    lo_plus = static_cast<int>(node);
    if (lo_minus < 0 || lo_plus + w > static_cast<int>(ax.size())) {
      throw DomainError("node is not shared by two full windows");
    }
  } else {
    const T left = a - T(a - ax.coords[node - 1]) * Tr<T>::from_ratio(1, 4);
    const T right = a + T(ax.coords[node + 1] - a) * Tr<T>::from_ratio(1, 4);
    lo_minus = select_window(ax, left, w).lo;
    lo_plus = select_window(ax, right, w).lo;
  }

  int min_nu = 1 << 30;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == axis) continue;
    for (int m : g.axis(i).mult) min_nu = std::min(min_nu, m);
  }
  if (n == 1) min_nu = 1;
  const int top = opt.max_order < 0 ? ax.mult[node] : opt.max_order;

  ContinuityReport rep;
  rep.mismatch.assign(static_cast<std::size_t>(top) + 1, 0.0);
  rep.distinct_patches = lo_minus != lo_plus;

  std::mt19937_64 rng(opt.seed);
  for (int p = 0; p < probes; ++p) {
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == axis) {
        x[i] = a;
        continue;
      }
      const auto& c = g.axis(i).coords;
      std::uniform_real_distribution<double> u(Tr<T>::to_double(c.front()), Tr<T>::to_double(c.back()));
      x[i] = Tr<T>::from_double(u(rng));
      if (x[i] < c.front()) x[i] = c.front();
      if (x[i] > c.back()) x[i] = c.back();
    }
    MultiIndex cm = s.corner(x);
    MultiIndex cp = cm;
    cm.set(axis, lo_minus);
    cp.set(axis, lo_plus);
    if (p == 0) {
      rep.lower_corner = cm;
      rep.upper_corner = cp;
    }
    const auto pm = s.patch(cm);
    const auto pp = s.patch(cp);
    MultiIndex hi(n);
    for (std::size_t i = 0; i < n; ++i) hi.set(i, i == axis ? top : min_nu - 1);
    for (const auto& k : enumerate_box(IndexBox(MultiIndex(n), hi))) {
      const T d = pm->eval(x, k) - pp->eval(x, k);
      double& slot = rep.mismatch[k[axis]];
      slot = std::max(slot, std::fabs(Tr<T>::to_double(d)));
    }
  }
  return rep;
}

template WindowRange select_window(const Axis<double>&, const double&, int);
template WindowRange select_window(const Axis<Rational>&, const Rational&, int);
template class SplineInterpolant<double>;
template class SplineInterpolant<Rational>;
template ContinuityReport continuity_report(const SplineInterpolant<double>&, std::size_t, std::size_t, int,
                                            const ContinuityOptions&);
template ContinuityReport continuity_report(const SplineInterpolant<Rational>&, std::size_t, std::size_t, int,
                                            const ContinuityOptions&);

}  // namespace hermite
