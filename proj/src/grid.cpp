#include "hermite/grid.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hermite/errors.hpp"

namespace hermite {

template <class T>
int Axis<T>::total_multiplicity() const {
  return std::accumulate(mult.begin(), mult.end(), 0);
}

template <class T>
std::optional<std::size_t> Axis<T>::find(const T& a) const {
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] == a) return j;
  }
  return std::nullopt;
}

template <class T>
GridSpec<T> GridSpec<T>::checked(std::vector<Axis<T>> axes) {
  GridSpec g(std::move(axes));
  auto v = g.violations();
  if (!v.empty()) {
    std::string msg;
    for (const auto& s : v) msg += (msg.empty() ? "" : "\n") + s;
    throw InputError(msg);
  }
  return g;
}

template <class T>
GridSpec<T> GridSpec<T>::uniform(const std::vector<std::vector<T>>& coords, const std::vector<int>& nu) {
  if (coords.size() != nu.size()) throw DimensionError("one multiplicity per axis expected");
  std::vector<Axis<T>> axes;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    axes.push_back(Axis<T>{coords[i], std::vector<int>(coords[i].size(), nu[i])});
  }
  return checked(std::move(axes));
}

template <class T>
MultiIndex GridSpec<T>::shape() const {
  MultiIndex s(dims());
  for (std::size_t i = 0; i < dims(); ++i) s.set(i, static_cast<int>(axes_[i].size()));
  return s;
}

template <class T>
std::size_t GridSpec<T>::point_count() const {
  std::size_t c = 1;
  for (const auto& a : axes_) c *= a.size();
  return c;
}

template <class T>
MultiIndex GridSpec<T>::multiplicity(const MultiIndex& idx) const {
  if (idx.size() != dims()) throw DimensionError("point index has wrong length");
  MultiIndex nu(dims());
  for (std::size_t i = 0; i < dims(); ++i) nu.set(i, axes_[i].mult.at(idx[i]));
  return nu;
}

template <class T>
std::vector<T> GridSpec<T>::coords(const MultiIndex& idx) const {
  if (idx.size() != dims()) throw DimensionError("point index has wrong length");
  std::vector<T> x;
  x.reserve(dims());
  for (std::size_t i = 0; i < dims(); ++i) x.push_back(axes_[i].coords.at(idx[i]));
  return x;
}

template <class T>
std::size_t GridSpec<T>::flat(const MultiIndex& idx) const {
  if (idx.size() != dims()) throw DimensionError("point index has wrong length");
  std::size_t p = 0;
  for (std::size_t i = 0; i < dims(); ++i) {
    if (static_cast<std::size_t>(idx[i]) >= axes_[i].size()) {
      throw DomainError("point index " + idx.to_string() + " outside the grid");
    }
    p = p * axes_[i].size() + static_cast<std::size_t>(idx[i]);
  }
  return p;
}

template <class T>
MultiIndex GridSpec<T>::unflat(std::size_t pos) const {
  MultiIndex idx(dims());
  for (std::size_t i = dims(); i-- > 0;) {
    idx.set(i, static_cast<int>(pos % axes_[i].size()));
    pos /= axes_[i].size();
  }
  return idx;
}

template <class T>
std::size_t GridSpec<T>::condition_count() const {
  std::size_t c = 1;
  for (const auto& a : axes_) c *= static_cast<std::size_t>(a.total_multiplicity());
  return c;
}

template <class T>
GridSpec<T> GridSpec<T>::sub_grid(const MultiIndex& lo, const MultiIndex& hi) const {
  std::vector<Axis<T>> axes;
  for (std::size_t i = 0; i < dims(); ++i) {
    if (lo[i] > hi[i] || static_cast<std::size_t>(hi[i]) >= axes_[i].size()) {
      throw DomainError("sub-grid box outside the grid");
    }
    Axis<T> a;
    a.coords.assign(axes_[i].coords.begin() + lo[i], axes_[i].coords.begin() + hi[i] + 1);
    a.mult.assign(axes_[i].mult.begin() + lo[i], axes_[i].mult.begin() + hi[i] + 1);
    axes.push_back(std::move(a));
  }
  return GridSpec(std::move(axes));
}

template <class T>
std::vector<std::string> GridSpec<T>::violations() const {
  std::vector<std::string> out;
  if (axes_.empty()) out.push_back("grid has no axes");
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    const auto& a = axes_[i];
    const std::string name = "axis " + std::to_string(i + 1);
    if (a.coords.empty()) out.push_back(name + ": no coordinates");
    if (a.mult.size() != a.coords.size()) {
      out.push_back(name + ": " + std::to_string(a.mult.size()) + " multiplicities for " +
                    std::to_string(a.coords.size()) + " coordinates");
    }
    for (std::size_t j = 1; j < a.coords.size(); ++j) {
      if (a.coords[j] == a.coords[j - 1]) {
        out.push_back(name + ": duplicate coordinate");
      } else if (a.coords[j] < a.coords[j - 1]) {
        out.push_back(name + ": coordinates not increasing");
      }
    }
    for (int m : a.mult) {
      if (m < 1) {
        out.push_back(name + ": multiplicity must be at least 1");
        break;
      }
    }
  }
  return out;
}

template <class T>
std::vector<std::string> validate(const GridSpec<T>& grid, const std::vector<PointRecord<T>>& records) {
  std::vector<std::string> out = grid.violations();
  if (!out.empty()) return out;
  const std::size_t n = grid.dims();
  const MultiIndex shape = grid.shape();
  std::vector<int> seen(grid.point_count(), 0);
  for (const auto& rec : records) {
    const std::string where = "point " + rec.index.to_string();
    if (rec.index.size() != n) {
      out.push_back(where + ": index has " + std::to_string(rec.index.size()) + " entries, expected " +
                    std::to_string(n));
      continue;
    }
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) inside = inside && rec.index[i] < shape[i];
    if (!inside) {
      out.push_back(where + ": index outside the grid");
      continue;
    }
    if (seen[grid.flat(rec.index)]++ == 1) out.push_back(where + ": listed more than once");
    const IndexBox box(MultiIndex(n), [&] {
      MultiIndex hi = grid.multiplicity(rec.index);
      for (std::size_t i = 0; i < n; ++i) hi.set(i, hi[i] - 1);
      return hi;
    }());
    std::set<MultiIndex> keys;
    for (const auto& [k, v] : rec.t) {
      (void)v;
      if (k.size() != n) {
        out.push_back(where + ": derivative order " + k.to_string() + " has wrong length");
        continue;
      }
      if (!box.contains(k)) {
        out.push_back(where + ": extra " + k.to_string());
      } else if (!keys.insert(k).second) {
        out.push_back(where + ": duplicate " + k.to_string());
      }
    }
    for (const auto& k : enumerate_box(box)) {
      if (!keys.count(k)) out.push_back(where + ": missing " + k.to_string());
    }
  }
  for (std::size_t p = 0; p < seen.size(); ++p) {
    if (seen[p] == 0) out.push_back("point " + grid.unflat(p).to_string() + ": not listed");
  }
  return out;
}

template <class T>
HermiteData<T>::HermiteData(GridSpec<T> grid, std::vector<std::vector<T>> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.point_count()) throw InputError("one value block per grid point expected");
  for (std::size_t p = 0; p < values_.size(); ++p) {
    const MultiIndex nu = grid_.multiplicity(grid_.unflat(p));
    std::size_t m = 1;
    for (int v : nu) m *= static_cast<std::size_t>(v);
    if (values_[p].size() != m) {
      throw InputError("point " + grid_.unflat(p).to_string() + ": expected " + std::to_string(m) + " values");
    }
  }
}

template <class T>
HermiteData<T> HermiteData<T>::from_records(const GridSpec<T>& grid, const std::vector<PointRecord<T>>& records) {
  auto v = validate(grid, records);
  if (!v.empty()) {
    std::string msg;
    for (const auto& s : v) msg += (msg.empty() ? "" : "\n") + s;
    throw InputError(msg);
  }
  std::vector<std::vector<T>> values(grid.point_count());
  for (const auto& rec : records) {
    auto box = multiplicity_box(grid.multiplicity(rec.index));
    std::vector<T> vals(box->size());
    for (const auto& [k, t] : rec.t) vals[box->position(k)] = t;
    values[grid.flat(rec.index)] = std::move(vals);
  }
  return HermiteData(grid, std::move(values));
}

template <class T>
HermiteData<T> HermiteData<T>::from_function(
    const GridSpec<T>& grid, const std::function<T(const std::vector<T>&, const MultiIndex&)>& fn) {
  std::vector<std::vector<T>> values(grid.point_count());
  for (std::size_t p = 0; p < values.size(); ++p) {
    const MultiIndex idx = grid.unflat(p);
    const auto x = grid.coords(idx);
    auto box = multiplicity_box(grid.multiplicity(idx));
    for (const auto& k : box->indices()) values[p].push_back(fn(x, k));
  }
  return HermiteData(grid, std::move(values));
}

template <class T>
std::vector<T> HermiteData<T>::point_values(const MultiIndex& idx) const {
  return values_[grid_.flat(idx)];
}

template <class T>
const std::vector<T>& HermiteData<T>::values_at(const MultiIndex& idx) const {
  return values_[grid_.flat(idx)];
}

template <class T>
const T& HermiteData<T>::value(const MultiIndex& idx, const MultiIndex& k) const {
  auto box = multiplicity_box(grid_.multiplicity(idx));
  return values_[grid_.flat(idx)][box->position(k)];
}

template <class T>
std::vector<PointRecord<T>> HermiteData<T>::records() const {
  std::vector<PointRecord<T>> out;
  for (std::size_t p = 0; p < values_.size(); ++p) {
    PointRecord<T> rec;
    rec.index = grid_.unflat(p);
    auto box = multiplicity_box(grid_.multiplicity(rec.index));
    for (std::size_t j = 0; j < box->size(); ++j) rec.t.emplace_back(box->at(j), values_[p][j]);
    out.push_back(std::move(rec));
  }
  return out;
}

template <class T>
UniPoly<T> axis_annihilator(const Axis<T>& axis, int var) {
  UniPoly<T> h = UniPoly<T>::constant(CoeffTraits<T>::from_int(1), var);
  for (std::size_t j = 0; j < axis.size(); ++j) h *= UniPoly<T>::linear(axis.coords[j], var).pow(axis.mult[j]);
  return h;
}

template <class T>
UniPoly<T> nodal_basis_at(const Axis<T>& axis, std::size_t node, int var) {
  const T& a = axis.coords.at(node);
  UniPoly<T> h = UniPoly<T>::constant(CoeffTraits<T>::from_int(1), var);
  for (std::size_t j = 0; j < axis.size(); ++j) {
    if (j == node) continue;
    const T& c = axis.coords[j];
    const T inv = CoeffTraits<T>::from_int(1) / T(a - c);
    // (x - c) / (a - c)
    UniPoly<T> f(std::vector<T>{T(-c * inv), inv}, var);
    h *= f.pow(axis.mult[j]);
  }
  return h;
}

template <class T>
UniPoly<T> nodal_basis(const Axis<T>& axis, const T& a, int var) {
  auto j = axis.find(a);
  if (!j) throw DomainError("coordinate is not a grid node");
  return nodal_basis_at(axis, *j, var);
}

#define HERMITE_INSTANTIATE_GRID(T)                                                                   \
  template struct Axis<T>;                                                                            \
  template class GridSpec<T>;                                                                         \
  template class HermiteData<T>;                                                                      \
  template std::vector<std::string> validate(const GridSpec<T>&, const std::vector<PointRecord<T>>&); \
  template UniPoly<T> axis_annihilator(const Axis<T>&, int);                                          \
  template UniPoly<T> nodal_basis(const Axis<T>&, const T&, int);                                     \
  template UniPoly<T> nodal_basis_at(const Axis<T>&, std::size_t, int);

HERMITE_INSTANTIATE_GRID(double)
HERMITE_INSTANTIATE_GRID(Rational)

}  // namespace hermite
