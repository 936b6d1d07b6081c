#include "hermite/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hermite/errors.hpp"

namespace hermite {

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

Json multiindex_to_json(const MultiIndex& k) { return Json(k.entries()); }

MultiIndex multiindex_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("multi-index must be an array of integers, got " + j.dump());
  std::vector<int> v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InputError("multi-index entries must be integers, got " + j.dump());
    v.push_back(e.get<int>());
  }
  try {
    return MultiIndex(std::move(v));
  } catch (const Error&) {
    throw InputError("multi-index entries must be non-negative, got " + j.dump());
  }
}

template <>
Json coeff_to_json<double>(const double& c) {
  return c;
}

template <>
Json coeff_to_json<Rational>(const Rational& c) {
  return rational_to_string(c);
}

template <>
double coeff_from_json<double>(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_rational(j.get<std::string>()).get_d();
  throw InputError("expected a number, got " + j.dump());
}

template <>
Rational coeff_from_json<Rational>(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number()) return rational_from_double(j.get<double>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a number or \"p/q\" string, got " + j.dump());
}

template <class T>
Json poly_to_json(const MultiPoly<T>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"e", multiindex_to_json(e)}, {"c", coeff_to_json(c)}});
  return {{"n", p.dims()}, {"terms", terms}};
}

template <class T>
MultiPoly<T> poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) {
    throw InputError("polynomial record needs \"n\" and \"terms\"");
  }
  const auto n = j.at("n").get<std::size_t>();
  MultiPoly<T> p(n);
  std::size_t pos = 0;
  for (const auto& t : j.at("terms")) {
    if (!t.contains("e") || !t.contains("c")) {
      throw InputError("term " + std::to_string(pos) + " needs \"e\" and \"c\"");
    }
    const MultiIndex e = multiindex_from_json(t.at("e"));
    if (e.size() != n) throw InputError("term " + std::to_string(pos) + ": exponent length differs from n");
    p.add_term(e, coeff_from_json<T>(t.at("c")));
    ++pos;
  }
  return p;
}

template <class T>
GridSpec<T> grid_from_json(const Json& j) {
  for (const char* key : {"dims", "axes", "mult"}) {
    if (!j.contains(key)) throw InputError(std::string("grid file is missing \"") + key + "\"");
  }
  const auto n = j.at("dims").get<std::size_t>();
  const auto& axes = j.at("axes");
  const auto& mult = j.at("mult");
  if (axes.size() != n || mult.size() != n) throw InputError("\"axes\" and \"mult\" need one entry per dimension");
  std::vector<Axis<T>> out;
  for (std::size_t i = 0; i < n; ++i) {
    Axis<T> a;
    for (const auto& c : axes[i]) a.coords.push_back(coeff_from_json<T>(c));
    for (const auto& m : mult[i]) {
      if (!m.is_number_integer()) throw InputError("axis " + std::to_string(i + 1) + ": multiplicities must be integers");
      a.mult.push_back(m.get<int>());
    }
    out.push_back(std::move(a));
  }
  return GridSpec<T>::checked(std::move(out));
}

template <class T>
std::vector<PointRecord<T>> records_from_json(const Json& j) {
  if (!j.contains("points")) throw InputError("grid file is missing \"points\"");
  std::vector<PointRecord<T>> out;
  for (const auto& p : j.at("points")) {
    if (!p.contains("index") || !p.contains("t")) throw InputError("point record needs \"index\" and \"t\"");
    PointRecord<T> rec;
    rec.index = multiindex_from_json(p.at("index"));
    for (const auto& t : p.at("t")) {
      if (!t.contains("k") || !t.contains("value")) {
        throw InputError("point " + rec.index.to_string() + ": entry needs \"k\" and \"value\"");
      }
      rec.t.emplace_back(multiindex_from_json(t.at("k")), coeff_from_json<T>(t.at("value")));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

template <class T>
HermiteData<T> hgrid_from_json(const Json& j) {
  const GridSpec<T> grid = grid_from_json<T>(j);
  return HermiteData<T>::from_records(grid, records_from_json<T>(j));
}

template <class T>
Json hgrid_to_json(const HermiteData<T>& data) {
  const auto& g = data.grid();
  Json axes = Json::array(), mult = Json::array();
  for (const auto& a : g.axes()) {
    Json c = Json::array();
    for (const auto& v : a.coords) c.push_back(coeff_to_json(v));
    axes.push_back(c);
    mult.push_back(a.mult);
  }
  Json points = Json::array();
  for (const auto& rec : data.records()) {
    Json t = Json::array();
    for (const auto& [k, v] : rec.t) t.push_back({{"k", multiindex_to_json(k)}, {"value", coeff_to_json(v)}});
    points.push_back({{"index", multiindex_to_json(rec.index)}, {"t", t}});
  }
  return {{"dims", g.dims()}, {"axes", axes}, {"mult", mult}, {"points", points}};
}

template <class T>
Json interpolant_to_json(const HermiteInterpolant<T>& f) {
  const auto& g = f.grid();
  Json points = Json::array();
  for (std::size_t p = 0; p < g.point_count(); ++p) {
    const MultiIndex a = g.unflat(p);
    Json xi = Json::array();
    for (const auto& v : f.xi(a)) xi.push_back(coeff_to_json(v));
    Json basis = Json::array();
    for (const auto& k : multiplicity_box(g.multiplicity(a))->indices()) {
      Json factors = Json::array();
      for (const auto& u : f.basis().term(a, k).factors) {
        Json c = Json::array();
        for (const auto& v : u.coeffs()) c.push_back(coeff_to_json(v));
        factors.push_back(c);
      }
      basis.push_back({{"k", multiindex_to_json(k)}, {"factors", factors}});
    }
    points.push_back({{"index", multiindex_to_json(a)}, {"xi", xi}, {"basis", basis}});
  }
  return {{"dims", g.dims()}, {"points", points}};
}

std::vector<std::vector<double>> read_points_csv(std::istream& in, std::size_t dims) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::vector<double>> out;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!header_seen) {
      header_seen = true;
      bool ok = cells.size() == dims;
      for (std::size_t i = 0; ok && i < dims; ++i) ok = cells[i] == "x" + std::to_string(i + 1);
      if (!ok) {
        std::string want;
        for (std::size_t i = 0; i < dims; ++i) want += (i ? ",x" : "x") + std::to_string(i + 1);
        throw InputError("line " + std::to_string(lineno) + ": expected header " + want);
      }
      continue;
    }
    if (cells.size() != dims) {
      throw InputError("line " + std::to_string(lineno) + ": expected " + std::to_string(dims) + " columns");
    }
    std::vector<double> x(dims);
    for (std::size_t i = 0; i < dims; ++i) {
      const auto& c = cells[i];
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), x[i]);
      if (ec != std::errc() || ptr != c.data() + c.size()) {
        throw InputError("line " + std::to_string(lineno) + ": malformed number '" + c + "'");
      }
    }
    out.push_back(std::move(x));
  }
  if (!header_seen) throw InputError("empty points file");
  return out;
}

std::vector<std::vector<double>> read_points_csv_file(const std::string& path, std::size_t dims) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return read_points_csv(in, dims);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

#define HERMITE_INSTANTIATE_IO(T)                                              \
  template Json poly_to_json(const MultiPoly<T>&);                             \
  template MultiPoly<T> poly_from_json(const Json&);                           \
  template GridSpec<T> grid_from_json(const Json&);                            \
  template std::vector<PointRecord<T>> records_from_json(const Json&);         \
  template HermiteData<T> hgrid_from_json(const Json&);                        \
  template Json hgrid_to_json(const HermiteData<T>&);                          \
  template Json interpolant_to_json(const HermiteInterpolant<T>&);

HERMITE_INSTANTIATE_IO(double)
HERMITE_INSTANTIATE_IO(Rational)

}  // namespace hermite
