#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hermite/expression.hpp"
#include "hermite/grid.hpp"

namespace hermite {

/// Analytic function with exact mixed partials via Taylor propagation.
struct TestFunction {
  std::string name;
  Expression expr;
  std::size_t dims = 0;

  double value(const std::vector<double>& x) const { return expr.eval(x); }
  double derivative(const std::vector<double>& x, const MultiIndex& k) const { return expr.derivative(x, k); }
};

/// exp2d, gauss2d, gauss3d, sinmix3d. Throws InputError for other names.
TestFunction builtin_function(const std::string& name);
std::vector<std::string> builtin_names();
/// Built-in name or an infix expression in x1..xn.
TestFunction make_function(const std::string& name_or_expr, std::size_t dims);

/// Checks every first-order partial at x against a central difference
/// (step 1e-4); throws NumericValidationError beyond 1e-5 relative.
void check_against_differences(const TestFunction& f, const std::vector<double>& x);

/// t_a^k = d^k f(a) for every grid point, each point checked by
/// check_against_differences when `validate` is set.
HermiteData<double> derive_data(const TestFunction& f, const GridSpec<double>& grid, bool validate = true);

/// Derivative data computed on first request and memoized; lets a spline
/// touch only the nodes its queries need.
class FunctionDataSource : public DataSource<double> {
 public:
  FunctionDataSource(TestFunction f, GridSpec<double> grid, bool validate = true);

  const GridSpec<double>& grid() const override { return grid_; }
  std::vector<double> point_values(const MultiIndex& idx) const override;
  std::size_t computed_points() const;

 private:
  TestFunction f_;
  GridSpec<double> grid_;
  bool validate_;
  mutable std::mutex mu_;
  mutable std::map<std::size_t, std::vector<double>> memo_;
};

/// Inclusive equispaced lattice: counts[i] points from lo[i] to hi[i].
struct Lattice {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<std::size_t> counts;

  std::size_t size() const;
  std::vector<double> point(std::size_t p) const;
  std::vector<std::vector<double>> points() const;
};

/// Axis coordinates lo, lo + step, ..., hi.
std::vector<double> axis_range(double lo, double hi, double step);

/// Order-independent pairwise sum of squares over fixed blocks.
double pairwise_sum_squares(const std::vector<double>& d);

/// sqrt(mean((approx - ref)^2)), deterministic for any thread count.
double rmse(const TestFunction& reference, const std::function<double(const std::vector<double>&)>& approx,
            const std::vector<std::vector<double>>& points, unsigned threads = 1);

/// n-linear blend of the 2^n nodes around x, using only t_a^0.
double multilinear_baseline(const HermiteData<double>& data, const std::vector<double>& x);

/// Plane through `point` with unit `normal`, sampled over the (x1, x2)
/// rectangle as x3 = pi(x1, x2).
struct PlaneSpec {
  std::array<double, 3> point{};
  std::array<double, 3> normal{0.0, 0.0, 1.0};
  std::array<double, 2> u_range{};  // x1
  std::array<double, 2> v_range{};  // x2
  double step = 1.0;
};

struct PlaneSample {
  std::vector<std::vector<double>> points;
  std::size_t excluded = 0;
};

/// Lattice points of the plane; points outside `hull` (when given) are
/// dropped and counted.
PlaneSample sample_plane(const PlaneSpec& p, const GridSpec<double>* hull = nullptr);

/// Geometry of the reproduction runs for a built-in function: the support
/// grid box, its default step and the inclusive evaluation lattice.
struct BenchmarkPreset {
  std::string function;
  std::vector<double> grid_lo;
  std::vector<double> grid_hi;
  double grid_step = 1.0;
  Lattice lattice;
};

BenchmarkPreset benchmark_preset(const std::string& function);

/// Uniform-multiplicity grid over [lo, hi] with the given step on every axis.
GridSpec<double> box_grid(const std::vector<double>& lo, const std::vector<double>& hi, double step,
                          const std::vector<int>& nu);

/// Oblique-plane resampling setup: plane x1 + x3 = 21 over (x1, x2) in
/// [1, 18]^2, support grid [0, 21]^3.
struct PlaneBenchmark {
  PlaneSpec plane;
  std::vector<double> grid_lo{0.0, 0.0, 0.0};
  std::vector<double> grid_hi{21.0, 21.0, 21.0};
};

PlaneBenchmark plane_benchmark(double sample_step = 0.25);

}  // namespace hermite
