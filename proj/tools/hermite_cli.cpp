// hermite: build, evaluate and check Hermite interpolants on rectilinear grids.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hermite/errors.hpp"
#include "hermite/harness.hpp"
#include "hermite/ideal.hpp"
#include "hermite/interpolant.hpp"
#include "hermite/io.hpp"
#include "hermite/parallel.hpp"
#include "hermite/spline.hpp"

using namespace hermite;

namespace {

enum Exit { kOk = 0, kInput = 2, kDomain = 3, kNumeric = 4 };

struct Options {
  std::string mode = "binary64";
  std::string grid_path;
  std::string poly_path;
  std::string points_path;
  std::string out_path;
  std::string window;
  std::vector<std::string> derivs;
  std::string order;
  std::string mult;
  std::string function;
  std::string member_path;
  double grid_step = 0.0;
  double sample_step = 0.25;
  bool skip_outside = false;
  bool continuity = false;
  bool expanded = false;
  bool plane = false;
  int probes = 16;
  int max_order = -1;
  unsigned threads = default_threads();
  std::uint64_t seed = 42;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw InputError(flag + ": '" + cell + "' is not an integer");
    }
  }
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

bool exact_mode(const Options& o) {
  if (o.mode == "binary64") return false;
  if (o.mode == "exact") return true;
  throw InputError("--mode must be binary64 or exact");
}

template <class T>
double value_as_double(const T& v) {
  return CoeffTraits<T>::to_double(v);
}

// Largest |t| in the data, at least 1; binary64 tolerances are relative to it.
template <class T>
double data_scale(const HermiteData<T>& data) {
  double scale = 1.0;
  for (const auto& rec : data.records()) {
    for (const auto& kv : rec.t) scale = std::max(scale, std::fabs(value_as_double(kv.second)));
  }
  return scale;
}

// ------------------------------------------------------------------ build

template <class T>
int run_build(const Options& o) {
  const auto data = hgrid_from_json<T>(read_json_file(o.grid_path));
  const auto f = interpolate(data);
  const double residual = interpolation_residual(f, data);
  Json doc = interpolant_to_json(f);
  if (o.expanded) doc["expanded"] = poly_to_json(f.expanded());
  const double tol = CoeffTraits<T>::exact ? 0.0 : 1e-9 * data_scale(data);
  doc["validation"] = {{"max_residual", residual}, {"tolerance", tol}, {"conditions", data.grid().condition_count()}};
  Output out(o.out_path);
  out.stream() << doc.dump(2) << "\n";
  if (!o.out_path.empty()) std::cout << doc["validation"].dump() << "\n";
  return residual <= tol ? kOk : kNumeric;
}

// ------------------------------------------------------------------- eval

template <class T>
int run_eval(const Options& o) {
  auto data = std::make_shared<const HermiteData<T>>(hgrid_from_json<T>(read_json_file(o.grid_path)));
  const auto& g = data->grid();
  const std::size_t n = g.dims();
  const auto points = read_points_csv_file(o.points_path, n);

  std::vector<MultiIndex> ks;
  for (const auto& d : o.derivs) {
    auto v = parse_int_list(d, "--deriv");
    if (v.size() != n) throw InputError("--deriv needs " + std::to_string(n) + " entries");
    ks.emplace_back(std::move(v));
  }
  if (ks.empty()) ks.emplace_back(n);

  std::optional<HermiteInterpolant<T>> global;
  std::optional<SplineInterpolant<T>> spline;
  if (o.window.empty()) {
    global.emplace(interpolate(*data));
  } else {
    auto w = parse_int_list(o.window, "--window");
    spline.emplace(data, w);
  }

  auto inside = [&](const std::vector<double>& x) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& c = g.axis(i).coords;
      if (x[i] < value_as_double(c.front()) || x[i] > value_as_double(c.back())) return false;
    }
    return true;
  };

  std::vector<std::vector<std::string>> cells(points.size());
  std::vector<char> outside(points.size(), 0);
  parallel_chunks(points.size(), o.threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t p = b; p < e; ++p) {
      const auto& xd = points[p];
      if (!inside(xd)) {
        outside[p] = 1;
        continue;
      }
      std::vector<T> x;
      for (double v : xd) x.push_back(CoeffTraits<T>::from_double(v));
      for (const auto& k : ks) {
        const T v = global ? global->eval(x, k) : spline->eval(x, k);
        if constexpr (CoeffTraits<T>::exact) cells[p].push_back(rational_to_string(v));
        else cells[p].push_back(format_double(v));
      }
    }
  });

  Output out(o.out_path);
  auto& os = out.stream();
  for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << "x" << i + 1;
  for (const auto& k : ks) {
    std::string name = "value";
    if (!k.is_zero()) {
      name = "d";
      for (int e : k) name += std::to_string(e);
    }
    os << "," << name;
  }
  os << "\n";
  std::size_t flagged = 0;
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (outside[p]) {
      ++flagged;
      if (o.skip_outside) continue;
    }
    for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << format_double(points[p][i]);
    if (outside[p]) {
      for (std::size_t j = 0; j < ks.size(); ++j) os << ",outside";
    } else {
      for (const auto& c : cells[p]) os << "," << c;
    }
    os << "\n";
  }
  if (flagged) {
    std::cerr << flagged << " point(s) outside the grid hull" << (o.skip_outside ? " skipped" : "") << "\n";
    if (!o.skip_outside) return kDomain;
  }
  return kOk;
}

// ----------------------------------------------------------------- divide

template <class T>
int run_divide(const Options& o) {
  const auto g = poly_from_json<T>(read_json_file(o.poly_path));
  const Json gj = read_json_file(o.grid_path);
  const auto grid = grid_from_json<T>(gj);
  std::vector<std::size_t> order;
  if (!o.order.empty()) {
    for (int a : parse_int_list(o.order, "--order")) {
      if (a < 1) throw InputError("--order uses 1-based axis numbers");
      order.push_back(static_cast<std::size_t>(a - 1));
    }
  }
  const auto div = cascaded_divide(g, grid, order);
  Json quotients = Json::array();
  for (const auto& q : div.quotients) quotients.push_back(poly_to_json(q));
  Json ord = Json::array();
  for (auto a : div.order) ord.push_back(a + 1);
  Json gens = Json::array();
  for (const auto& h : groebner_basis(grid)) gens.push_back(poly_to_json(MultiPoly<T>::from_uni(grid.dims(), h)));
  Json doc = {{"remainder", poly_to_json(div.remainder)},
              {"quotients", quotients},
              {"order", ord},
              {"generators", gens},
              {"remainder_text", div.remainder.to_string()}};
  Output out(o.out_path);
  out.stream() << doc.dump(2) << "\n";
  return kOk;
}

// ----------------------------------------------------------------- verify

template <class T>
int run_verify(const Options& o) {
  Json report = Json::object();
  int status = kOk;
  const Json gj = read_json_file(o.grid_path);

  if (!o.member_path.empty()) {
    const auto g = poly_from_json<T>(read_json_file(o.member_path));
    const auto grid = grid_from_json<T>(gj);
    const auto m = ideal_member(g, grid);
    report["membership"] = {{"member", m.member}, {"residual", m.residual}, {"tolerance", m.tolerance}};
  }
  if (gj.contains("points")) {
    auto data = std::make_shared<const HermiteData<T>>(hgrid_from_json<T>(gj));
    const auto f = interpolate(*data);
    const double residual = interpolation_residual(f, *data);
    const double tol = CoeffTraits<T>::exact ? 0.0 : 1e-9 * data_scale(*data);
    report["interpolation"] = {{"max_residual", residual}, {"tolerance", tol}, {"pass", residual <= tol}};
    if (residual > tol) status = kNumeric;

    if (o.continuity) {
      const auto& g = data->grid();
      std::vector<int> w;
      if (o.window.empty()) {
        for (std::size_t i = 0; i < g.dims(); ++i) w.push_back(std::min<int>(4, static_cast<int>(g.axis(i).size())));
      } else {
        w = parse_int_list(o.window, "--window");
      }
      SplineInterpolant<T> s(data, w);
      Json axes = Json::array();
      int smooth = 1 << 30;
      for (std::size_t ax = 0; ax < g.dims(); ++ax) {
        Json nodes = Json::array();
        std::vector<double> worst;
        for (std::size_t j = 1; j + 1 < g.axis(ax).size(); ++j) {
          ContinuityOptions opt;
          opt.seed = o.seed;
          opt.max_order = o.max_order;
          const auto rep = continuity_report(s, ax, j, o.probes, opt);
          if (!rep.distinct_patches) continue;
          nodes.push_back({{"node", j}, {"mismatch", rep.mismatch}});
          if (worst.size() < rep.mismatch.size()) worst.resize(rep.mismatch.size(), 0.0);
          for (std::size_t r = 0; r < rep.mismatch.size(); ++r) worst[r] = std::max(worst[r], rep.mismatch[r]);
        }
        int c = -1;
        while (c + 1 < static_cast<int>(worst.size()) && worst[c + 1] <= tol) ++c;
        if (!worst.empty()) smooth = std::min(smooth, c);
        axes.push_back({{"axis", ax + 1}, {"nodes", nodes}, {"max_mismatch", worst}, {"continuous_up_to", c}});
      }
      int nu_min = 1 << 30;
      for (const auto& a : g.axes()) {
        for (int m : a.mult) nu_min = std::min(nu_min, m);
      }
      const bool pass = smooth == (1 << 30) || smooth >= nu_min - 1;
      report["continuity"] = {{"window", w}, {"axes", axes}, {"expected_order", nu_min - 1}, {"tolerance", tol}, {"pass", pass}};
      if (!pass) status = kNumeric;
    }
  } else if (o.continuity) {
    throw InputError("--continuity needs a grid file with point data");
  }
  Output out(o.out_path);
  out.stream() << report.dump(2) << "\n";
  return status;
}

// ------------------------------------------------- compare and resample

std::vector<int> mult_or_default(const Options& o, std::size_t n) {
  if (o.mult.empty()) return std::vector<int>(n, 2);
  auto v = parse_int_list(o.mult, "--mult");
  if (v.size() != n) throw InputError("--mult needs " + std::to_string(n) + " entries");
  return v;
}

int run_compare(const Options& o) {
  const TestFunction f = builtin_function(o.function);
  std::vector<std::vector<double>> points;
  GridSpec<double> grid;
  const auto nu = mult_or_default(o, f.dims);
  if (o.plane) {
    if (f.dims != 3) throw InputError("--plane needs a 3-dimensional function");
    const auto bench = plane_benchmark(o.sample_step);
    grid = box_grid(bench.grid_lo, bench.grid_hi, o.grid_step > 0 ? o.grid_step : 1.0, nu);
    auto sample = sample_plane(bench.plane, &grid);
    if (sample.excluded) std::cerr << sample.excluded << " plane point(s) outside the grid excluded\n";
    points = std::move(sample.points);
  } else {
    const auto preset = benchmark_preset(o.function);
    grid = box_grid(preset.grid_lo, preset.grid_hi, o.grid_step > 0 ? o.grid_step : preset.grid_step, nu);
    points = preset.lattice.points();
  }

  Json doc = {{"function", f.name}, {"mult", nu}, {"points", points.size()}, {"seed", o.seed}};
  std::vector<double> steps;
  for (const auto& a : grid.axes()) steps.push_back(a.coords.size() > 1 ? a.coords[1] - a.coords[0] : 0.0);
  doc["grid_step"] = steps;
  if (o.window.empty()) {
    const auto data = derive_data(f, grid);
    const auto h = interpolate(data);
    doc["method"] = "global";
    doc["rmse"] = rmse(f, [&](const std::vector<double>& x) { return h.eval(x); }, points, o.threads);
  } else {
    auto w = parse_int_list(o.window, "--window");
    auto src = std::make_shared<const FunctionDataSource>(f, grid);
    SplineInterpolant<double> s(src, w);
    doc["method"] = "spline";
    doc["window"] = w;
    doc["rmse"] = rmse(f, [&](const std::vector<double>& x) { return s.eval(x); }, points, o.threads);
    doc["patches"] = s.cached_patches();
  }
  // Multilinear reference row on the same support grid.
  std::vector<int> ones(f.dims, 1);
  GridSpec<double> lin_grid(std::vector<Axis<double>>(grid.axes()));
  {
    std::vector<std::vector<double>> coords;
    for (const auto& a : grid.axes()) coords.push_back(a.coords);
    lin_grid = GridSpec<double>::uniform(coords, ones);
  }
  const auto lin = derive_data(f, lin_grid, false);
  doc["multilinear_rmse"] =
      rmse(f, [&](const std::vector<double>& x) { return multilinear_baseline(lin, x); }, points, o.threads);
  Output out(o.out_path);
  out.stream() << doc.dump(2) << "\n";
  return kOk;
}

int run_resample(const Options& o) {
  const TestFunction f = builtin_function(o.function.empty() ? "sinmix3d" : o.function);
  if (f.dims != 3) throw InputError("resample works on 3-dimensional functions");
  const auto nu = mult_or_default(o, 3);
  const auto bench = plane_benchmark(o.sample_step);
  const auto grid = box_grid(bench.grid_lo, bench.grid_hi, o.grid_step > 0 ? o.grid_step : 1.0, nu);
  const auto sample = sample_plane(bench.plane, &grid);
  if (sample.excluded) std::cerr << sample.excluded << " plane point(s) outside the grid excluded\n";
  auto w = o.window.empty() ? std::vector<int>{5, 5, 5} : parse_int_list(o.window, "--window");
  auto src = std::make_shared<const FunctionDataSource>(f, grid);
  SplineInterpolant<double> s(src, w);
  const auto values = s.eval_many(sample.points, MultiIndex(3), o.threads);
  std::vector<double> diff(values.size());
  Output out(o.out_path);
  auto& os = out.stream();
  os << "x1,x2,x3,value,reference\n";
  for (std::size_t p = 0; p < values.size(); ++p) {
    const auto& x = sample.points[p];
    const double ref = f.value(x);
    diff[p] = values[p] - ref;
    os << format_double(x[0]) << "," << format_double(x[1]) << "," << format_double(x[2]) << ","
       << format_double(values[p]) << "," << format_double(ref) << "\n";
  }
  const double r = values.empty() ? 0.0 : std::sqrt(pairwise_sum_squares(diff) / static_cast<double>(values.size()));
  Json summary = {{"function", f.name}, {"window", w}, {"mult", nu}, {"points", values.size()},
                  {"excluded", sample.excluded}, {"rmse", r}};
  (o.out_path.empty() ? std::cerr : std::cout) << summary.dump() << "\n";
  return kOk;
}

template <class Fn>
int dispatch(const Options& o, Fn&& fn) {
  return exact_mode(o) ? fn(Rational{}) : fn(0.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite coordinate interpolation on rectilinear grids"};
  app.require_subcommand(1);
  Options o;

  auto add_mode = [&](CLI::App* c) {
    c->add_option("--mode", o.mode, "binary64 or exact")->check(CLI::IsMember({"binary64", "exact"}));
  };
  auto add_threads = [&](CLI::App* c) { c->add_option("--threads", o.threads, "worker threads"); };

  auto* build = app.add_subcommand("build", "construct the interpolant of an HGRID file");
  build->add_option("grid", o.grid_path, "HGRID JSON file")->required();
  build->add_option("-o,--out", o.out_path, "output file (default stdout)");
  build->add_flag("--expanded", o.expanded, "also emit the monomial form");
  add_mode(build);

  auto* eval = app.add_subcommand("eval", "evaluate at CSV points");
  eval->add_option("grid", o.grid_path, "HGRID JSON file")->required();
  eval->add_option("--points", o.points_path, "CSV with header x1,...,xn")->required();
  eval->add_option("--window", o.window, "spline window w1,...,wn (global interpolant if omitted)");
  eval->add_option("--deriv", o.derivs, "derivative order k1,...,kn (repeatable)");
  eval->add_flag("--skip-outside", o.skip_outside, "drop points outside the grid hull");
  eval->add_option("-o,--out", o.out_path, "output CSV (default stdout)");
  add_mode(eval);
  add_threads(eval);

  auto* resample = app.add_subcommand("resample", "spline resampling on the oblique benchmark plane");
  resample->add_option("--function", o.function, "built-in 3D function (default sinmix3d)");
  resample->add_option("--grid-step", o.grid_step, "support grid step");
  resample->add_option("--sample-step", o.sample_step, "plane sampling step");
  resample->add_option("--window", o.window, "spline window (default 5,5,5)");
  resample->add_option("--mult", o.mult, "multiplicity per axis (default 2 each)");
  resample->add_option("-o,--out", o.out_path, "output CSV (default stdout)");
  add_threads(resample);

  auto* divide = app.add_subcommand("divide", "cascaded division by the axis annihilators");
  divide->add_option("--poly", o.poly_path, "polynomial JSON")->required();
  divide->add_option("--grid", o.grid_path, "grid JSON (points optional)")->required();
  divide->add_option("--order", o.order, "axis order, e.g. 2,1,3");
  divide->add_option("-o,--out", o.out_path, "output JSON (default stdout)");
  add_mode(divide);

  auto* verify = app.add_subcommand("verify", "check interpolation conditions, continuity and membership");
  verify->add_option("grid", o.grid_path, "HGRID JSON file")->required();
  verify->add_flag("--continuity", o.continuity, "check patch agreement at interior nodes");
  verify->add_option("--window", o.window, "spline window for --continuity (default 4 per axis)");
  verify->add_option("--probes", o.probes, "random probes per node");
  verify->add_option("--max-order", o.max_order, "highest derivative order across the axis (default nu)");
  verify->add_option("--member", o.member_path, "polynomial JSON to test for ideal membership");
  verify->add_option("--seed", o.seed, "probe seed");
  verify->add_option("-o,--out", o.out_path, "output JSON (default stdout)");
  add_mode(verify);

  auto* compare = app.add_subcommand("compare", "RMSE of a built-in function against its interpolant");
  compare->add_option("--function", o.function, "exp2d, gauss2d, gauss3d or sinmix3d")->required();
  compare->add_option("--mult", o.mult, "multiplicity per axis (default 2 each)");
  compare->add_option("--grid-step", o.grid_step, "support grid step");
  compare->add_option("--window", o.window, "spline window (global interpolant if omitted)");
  compare->add_flag("--plane", o.plane, "sample the oblique benchmark plane instead of the lattice");
  compare->add_option("--sample-step", o.sample_step, "plane sampling step");
  compare->add_option("--seed", o.seed, "seed recorded in the report");
  compare->add_option("-o,--out", o.out_path, "output JSON (default stdout)");
  add_threads(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (o.threads == 0) o.threads = 1;
    if (*build) return dispatch(o, [&](auto tag) { return run_build<decltype(tag)>(o); });
    if (*eval) return dispatch(o, [&](auto tag) { return run_eval<decltype(tag)>(o); });
    if (*divide) return dispatch(o, [&](auto tag) { return run_divide<decltype(tag)>(o); });
    if (*verify) return dispatch(o, [&](auto tag) { return run_verify<decltype(tag)>(o); });
    if (*compare) return run_compare(o);
    if (*resample) return run_resample(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const NumericValidationError& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return kNumeric;
  } catch (const Error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}
