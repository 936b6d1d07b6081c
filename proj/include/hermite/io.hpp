#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hermite/grid.hpp"
#include "hermite/interpolant.hpp"
#include "hermite/multiindex.hpp"
#include "hermite/polynomial.hpp"

namespace hermite {

using Json = nlohmann::json;

/// Parses a JSON file; InputError messages carry the line and column.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& origin = "input");

Json multiindex_to_json(const MultiIndex& k);
MultiIndex multiindex_from_json(const Json& j);

/// Binary64 values become JSON numbers; exact values become "p/q" strings.
template <class T>
Json coeff_to_json(const T& c);
/// Accepts numbers and "p/q" / decimal strings.
template <class T>
T coeff_from_json(const Json& j);
template <>
Json coeff_to_json<double>(const double& c);
template <>
Json coeff_to_json<Rational>(const Rational& c);
template <>
double coeff_from_json<double>(const Json& j);
template <>
Rational coeff_from_json<Rational>(const Json& j);

/// {"n": n, "terms": [{"e": [...], "c": ...}, ...]}
template <class T>
Json poly_to_json(const MultiPoly<T>& p);
template <class T>
MultiPoly<T> poly_from_json(const Json& j);

/// {"dims", "axes", "mult", "points": [{"index", "t": [{"k", "value"}]}]}
template <class T>
GridSpec<T> grid_from_json(const Json& j);
template <class T>
std::vector<PointRecord<T>> records_from_json(const Json& j);
/// Grid plus validated data; InputError lists every violation.
template <class T>
HermiteData<T> hgrid_from_json(const Json& j);
template <class T>
Json hgrid_to_json(const HermiteData<T>& data);

/// {"points": [{"index", "xi", "basis": [{"k", "factors": [[coeffs]...]}]}]}
template <class T>
Json interpolant_to_json(const HermiteInterpolant<T>& f);

/// CSV with header x1,...,xn. InputError names the offending line.
std::vector<std::vector<double>> read_points_csv(std::istream& in, std::size_t dims);
std::vector<std::vector<double>> read_points_csv_file(const std::string& path, std::size_t dims);
/// Shortest round-trip decimal text, '.' separator regardless of locale.
std::string format_double(double v);

}  // namespace hermite
