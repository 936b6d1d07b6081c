#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hermite/coefficient.hpp"
#include "hermite/grid.hpp"
#include "hermite/polynomial.hpp"

#ifndef HERMITE_FIXTURE_DIR
#define HERMITE_FIXTURE_DIR "tests/fixtures"
#endif

namespace hermite::testing {

inline std::string fixture(const std::string& name) { return std::string(HERMITE_FIXTURE_DIR) + "/" + name; }

inline Rational random_rational(std::mt19937_64& rng, int num = 20, int den = 7) {
  std::uniform_int_distribution<int> p(-num, num);
  std::uniform_int_distribution<int> q(1, den);
  return CoeffTraits<Rational>::from_ratio(p(rng), q(rng));
}

// Distinct sorted coordinates with small denominators.
inline std::vector<Rational> random_coords(std::mt19937_64& rng, std::size_t count) {
  std::set<Rational> s;
  while (s.size() < count) s.insert(random_rational(rng, 12, 4));
  return {s.begin(), s.end()};
}

struct RandomGridOptions {
  std::size_t max_dims = 3;
  std::size_t max_points = 3;
  int max_nu = 3;
  bool constant_nu = false;
  std::size_t max_conditions = 512;
};

inline GridSpec<Rational> random_grid(std::mt19937_64& rng, const RandomGridOptions& o = {}) {
  for (;;) {
    std::uniform_int_distribution<std::size_t> dims(1, o.max_dims);
    std::uniform_int_distribution<std::size_t> pts(1, o.max_points);
    std::uniform_int_distribution<int> nu(1, o.max_nu);
    const std::size_t n = dims(rng);
    std::vector<Axis<Rational>> axes;
    for (std::size_t i = 0; i < n; ++i) {
      Axis<Rational> a;
      a.coords = random_coords(rng, pts(rng));
      const int c = nu(rng);
      for (std::size_t j = 0; j < a.coords.size(); ++j) a.mult.push_back(o.constant_nu ? c : nu(rng));
      axes.push_back(std::move(a));
    }
    GridSpec<Rational> g(std::move(axes));
    if (g.condition_count() <= o.max_conditions) return g;
  }
}

inline HermiteData<Rational> random_data(std::mt19937_64& rng, const GridSpec<Rational>& g) {
  return HermiteData<Rational>::from_function(
      g, [&](const std::vector<Rational>&, const MultiIndex&) { return random_rational(rng); });
}

inline MultiPoly<Rational> random_poly(std::mt19937_64& rng, std::size_t n, int max_deg, int terms) {
  std::uniform_int_distribution<int> d(0, max_deg);
  MultiPoly<Rational> p(n);
  for (int t = 0; t < terms; ++t) {
    MultiIndex e(n);
    int budget = d(rng);
    for (std::size_t i = 0; i < n; ++i) {
      std::uniform_int_distribution<int> take(0, budget);
      const int v = i + 1 == n ? budget : take(rng);
      e.set(i, v);
      budget -= v;
    }
    p.add_term(e, random_rational(rng));
  }
  return p;
}

}  // namespace hermite::testing
