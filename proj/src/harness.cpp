#include "hermite/harness.hpp"

#include <algorithm>
#include <cmath>

#include "hermite/errors.hpp"
#include "hermite/parallel.hpp"

namespace hermite {

namespace {

struct Builtin {
  const char* name;
  std::size_t dims;
  const char* text;
};

constexpr Builtin kBuiltins[] = {
    {"exp2d", 2, "exp(x1 + x2)"},
    {"gauss2d", 2, "exp(-(x1 - 3)^2 - (x2 - 3)^2) + exp((-(x1 - 4)^2 - (x2 - 4)^2) / 5)"},
    {"gauss3d", 3,
     "exp((-(x1 - 3)^2 - (x2 - 1)^2 - (x3 - 1.5)^2) / 3) - exp((-(x1 - 0.5)^2 - (x2 - 2)^2 - (x3 - 1)^2) / 5)"},
    {"sinmix3d", 3, "x1*sin(x2) + x2*sin(x1)/10 - x1*sin(x2*x3/4)"},
};

}  // namespace

TestFunction builtin_function(const std::string& name) {
  for (const auto& b : kBuiltins) {
    if (name == b.name) return TestFunction{b.name, Expression::parse(b.text), b.dims};
  }
  throw InputError("unknown built-in function '" + name + "'");
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& b : kBuiltins) out.emplace_back(b.name);
  return out;
}

TestFunction make_function(const std::string& name_or_expr, std::size_t dims) {
  for (const auto& b : kBuiltins) {
    if (name_or_expr == b.name) {
      if (dims != 0 && dims != b.dims) {
        throw DimensionError(name_or_expr + " is " + std::to_string(b.dims) + "-dimensional");
      }
      return builtin_function(name_or_expr);
    }
  }
  Expression e = Expression::parse(name_or_expr);
  if (e.dims() > dims) throw DimensionError("expression uses more variables than the grid has axes");
  return TestFunction{name_or_expr, std::move(e), dims};
}

void check_against_differences(const TestFunction& f, const std::vector<double>& x) {
  const std::size_t n = x.size();
  const double h = 1e-4;
  MultiIndex order(n);
  for (std::size_t i = 0; i < n; ++i) order.set(i, 1);
  const TaylorTensor t = f.expr.taylor(x, order);
  for (std::size_t i = 0; i < n; ++i) {
    MultiIndex k(n);
    k.set(i, 1);
    const double ad = t.derivative(k);
    auto xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    const double fd = (f.value(xp) - f.value(xm)) / (2 * h);
    if (!(std::fabs(ad - fd) <= 1e-5 * std::max(1.0, std::fabs(ad)))) {
      std::string where;
      for (double v : x) where += (where.empty() ? "" : ",") + std::to_string(v);
      throw NumericValidationError("derivative along x" + std::to_string(i + 1) + " at (" + where +
                                   ") disagrees with central difference: " + std::to_string(ad) + " vs " +
                                   std::to_string(fd));
    }
  }
}

namespace {

std::vector<double> node_values(const TestFunction& f, const GridSpec<double>& grid, const MultiIndex& idx,
                                bool validate) {
  const auto x = grid.coords(idx);
  const MultiIndex nu = grid.multiplicity(idx);
  MultiIndex order(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) order.set(i, nu[i] - 1);
  const TaylorTensor t = f.expr.taylor(x, order);
  if (!std::isfinite(t.value())) throw DomainError("function undefined at grid point " + idx.to_string());
  if (validate) check_against_differences(f, x);
  std::vector<double> out;
  for (const auto& k : multiplicity_box(nu)->indices()) out.push_back(t.derivative(k));
  return out;
}

}  // namespace

HermiteData<double> derive_data(const TestFunction& f, const GridSpec<double>& grid, bool validate) {
  if (f.dims > grid.dims()) throw DimensionError("function has more variables than the grid has axes");
  std::vector<std::vector<double>> values(grid.point_count());
  for (std::size_t p = 0; p < values.size(); ++p) values[p] = node_values(f, grid, grid.unflat(p), validate);
  return HermiteData<double>(grid, std::move(values));
}

FunctionDataSource::FunctionDataSource(TestFunction f, GridSpec<double> grid, bool validate)
    : f_(std::move(f)), grid_(std::move(grid)), validate_(validate) {
  if (f_.dims > grid_.dims()) throw DimensionError("function has more variables than the grid has axes");
}

std::vector<double> FunctionDataSource::point_values(const MultiIndex& idx) const {
  const std::size_t key = grid_.flat(idx);
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  auto v = node_values(f_, grid_, idx, validate_);
  std::lock_guard lock(mu_);
  return memo_.emplace(key, std::move(v)).first->second;
}

std::size_t FunctionDataSource::computed_points() const {
  std::lock_guard lock(mu_);
  return memo_.size();
}

std::size_t Lattice::size() const {
  std::size_t s = 1;
  for (auto c : counts) s *= c;
  return s;
}

std::vector<double> Lattice::point(std::size_t p) const {
  const std::size_t n = counts.size();
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t j = p % counts[i];
    p /= counts[i];
    x[i] = counts[i] == 1 ? lo[i] : lo[i] + (hi[i] - lo[i]) * static_cast<double>(j) / static_cast<double>(counts[i] - 1);
  }
  return x;
}

std::vector<std::vector<double>> Lattice::points() const {
  std::vector<std::vector<double>> out;
  out.reserve(size());
  for (std::size_t p = 0; p < size(); ++p) out.push_back(point(p));
  return out;
}

std::vector<double> axis_range(double lo, double hi, double step) {
  if (!(step > 0) || hi < lo) throw InputError("invalid axis range");
  const auto count = static_cast<std::size_t>(std::llround((hi - lo) / step)) + 1;
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j) out[j] = lo + step * static_cast<double>(j);
  out.back() = std::min(out.back(), hi);
  return out;
}

namespace {

double pairwise(const double* d, std::size_t n) {
  if (n <= 64) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += d[i] * d[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise(d, half) + pairwise(d + half, n - half);
}

}  // namespace

double pairwise_sum_squares(const std::vector<double>& d) { return pairwise(d.data(), d.size()); }

double rmse(const TestFunction& reference, const std::function<double(const std::vector<double>&)>& approx,
            const std::vector<std::vector<double>>& points, unsigned threads) {
  if (points.empty()) return 0.0;
  std::vector<double> diff(points.size());
  parallel_chunks(points.size(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t p = b; p < e; ++p) diff[p] = approx(points[p]) - reference.value(points[p]);
  });
  return std::sqrt(pairwise_sum_squares(diff) / static_cast<double>(points.size()));
}

double multilinear_baseline(const HermiteData<double>& data, const std::vector<double>& x) {
  const auto& g = data.grid();
  const std::size_t n = g.dims();
  if (x.size() != n) throw DimensionError("point has wrong length");
  std::vector<int> cell(n);
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = g.axis(i).coords;
    if (x[i] < c.front() || x[i] > c.back()) throw DomainError("query outside the grid hull");
    if (c.size() == 1) {
      cell[i] = 0;
      w[i] = 0.0;
      continue;
    }
    auto it = std::upper_bound(c.begin(), c.end(), x[i]);
    int j = static_cast<int>(it - c.begin()) - 1;
    j = std::clamp(j, 0, static_cast<int>(c.size()) - 2);
    cell[i] = j;
    w[i] = (x[i] - c[j]) / (c[j + 1] - c[j]);
  }
  double v = 0.0;
  for (std::size_t corner = 0; corner < (std::size_t{1} << n); ++corner) {
    MultiIndex idx(n);
    double weight = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool up = (corner >> (n - 1 - i)) & 1;
      if (up && g.axis(i).size() == 1) {
        weight = 0.0;
        break;
      }
      idx.set(i, cell[i] + (up ? 1 : 0));
      weight *= up ? w[i] : 1.0 - w[i];
    }
    if (weight != 0.0) v += weight * data.values_at(idx)[0];
  }
  return v;
}

PlaneSample sample_plane(const PlaneSpec& p, const GridSpec<double>* hull) {
  const auto& nrm = p.normal;
  const double len = std::sqrt(nrm[0] * nrm[0] + nrm[1] * nrm[1] + nrm[2] * nrm[2]);
  if (std::fabs(len - 1.0) > 1e-12) throw InputError("plane normal must have unit length");
  if (nrm[2] == 0.0) throw DomainError("plane is parallel to the x3 axis and has no graph over (x1, x2)");
  const auto us = axis_range(p.u_range[0], p.u_range[1], p.step);
  const auto vs = axis_range(p.v_range[0], p.v_range[1], p.step);
  PlaneSample out;
  for (double u : us) {
    for (double v : vs) {
      const double z = p.point[2] - (nrm[0] * (u - p.point[0]) + nrm[1] * (v - p.point[1])) / nrm[2];
      std::vector<double> x{u, v, z};
      bool inside = true;
      if (hull) {
        for (std::size_t i = 0; i < 3 && inside; ++i) {
          const auto& c = hull->axis(i).coords;
          inside = x[i] >= c.front() && x[i] <= c.back();
        }
      }
      if (inside) out.points.push_back(std::move(x));
      else ++out.excluded;
    }
  }
  return out;
}

BenchmarkPreset benchmark_preset(const std::string& function) {
  if (function == "exp2d") return {function, {0, 0}, {1, 1}, 1.0, Lattice{{0, 0}, {1, 1}, {11, 11}}};
  if (function == "gauss2d") return {function, {0, 0}, {5, 5}, 1.0, Lattice{{0, 0}, {5, 5}, {51, 51}}};
  if (function == "gauss3d") {
    return {function, {0, 0, 0}, {3, 4, 2}, 1.0, Lattice{{0, 0, 0}, {3, 4, 2}, {13, 17, 9}}};
  }
  if (function == "sinmix3d") {
    return {function, {-7, -7, -7}, {7, 7, 7}, 1.0, Lattice{{-7, -7, -7}, {7, 7, 7}, {57, 57, 57}}};
  }
  throw InputError("no benchmark preset for '" + function + "'");
}

GridSpec<double> box_grid(const std::vector<double>& lo, const std::vector<double>& hi, double step,
                          const std::vector<int>& nu) {
  if (lo.size() != hi.size() || lo.size() != nu.size()) throw DimensionError("box bounds and multiplicities differ in length");
  std::vector<std::vector<double>> axes;
  for (std::size_t i = 0; i < lo.size(); ++i) axes.push_back(axis_range(lo[i], hi[i], step));
  return GridSpec<double>::uniform(axes, nu);
}

PlaneBenchmark plane_benchmark(double sample_step) {
  PlaneBenchmark b;
  const double r = 1.0 / std::sqrt(2.0);
  b.plane.point = {10.5, 10.5, 10.5};
  b.plane.normal = {r, 0.0, r};
  b.plane.u_range = {1.0, 18.0};
  b.plane.v_range = {1.0, 18.0};
  b.plane.step = sample_step;
  return b;
}

}  // namespace hermite
