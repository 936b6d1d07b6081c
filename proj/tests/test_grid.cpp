#include <doctest.h>

#include <algorithm>
#include <random>

#include "hermite/errors.hpp"
#include "hermite/grid.hpp"
#include "support.hpp"

using namespace hermite;
using Q = Rational;

namespace {

Q q(long p, long d = 1) { return CoeffTraits<Q>::from_ratio(p, d); }

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

std::vector<PointRecord<Q>> full_records(const GridSpec<Q>& g) {
  std::vector<PointRecord<Q>> recs;
  for (std::size_t p = 0; p < g.point_count(); ++p) {
    PointRecord<Q> r{g.unflat(p), {}};
    for (const auto& k : multiplicity_box(g.multiplicity(r.index))->indices()) r.t.emplace_back(k, q(1));
    recs.push_back(r);
  }
  return recs;
}

}  // namespace

TEST_CASE("record validation") {
  const auto g = GridSpec<Q>::uniform({{q(0), q(1)}, {q(0), q(1)}}, {2, 2});
  auto recs = full_records(g);
  CHECK(validate(g, recs).empty());
  CHECK(g.condition_count() == 16);

  auto missing = recs;
  auto& last = missing.back();
  REQUIRE(last.index == MultiIndex{1, 1});
  last.t.erase(std::remove_if(last.t.begin(), last.t.end(), [](const auto& e) { return e.first == MultiIndex{1, 1}; }),
               last.t.end());
  CHECK(has(validate(g, missing), "point (1,1): missing (1,1)"));

  auto extra = recs;
  extra[0].t.emplace_back(MultiIndex{2, 0}, q(1));
  CHECK(has(validate(g, extra), "point (0,0): extra (2,0)"));

  auto twice = recs;
  twice.push_back(recs[1]);
  CHECK(has(validate(g, twice), "point (0,1): listed more than once"));

  auto absent = recs;
  absent.pop_back();
  CHECK_FALSE(validate(g, absent).empty());
  CHECK_THROWS_AS(HermiteData<Q>::from_records(g, absent), InputError);
}

TEST_CASE("axis validation") {
  GridSpec<Q> bad({Axis<Q>{{q(0), q(0), q(1)}, {1, 1, 1}}});
  CHECK(has(bad.violations(), "axis 1: duplicate coordinate"));
  GridSpec<Q> zero({Axis<Q>{{q(0), q(1)}, {1, 0}}});
  CHECK_FALSE(zero.violations().empty());
  CHECK_THROWS_AS(GridSpec<Q>::checked({Axis<Q>{{q(1), q(0)}, {1, 1}}}), InputError);
}

TEST_CASE("condition count and indexing") {
  GridSpec<Q> g({Axis<Q>{{q(0), q(1), q(3)}, {1, 2, 3}}, Axis<Q>{{q(-1), q(2)}, {2, 1}}});
  CHECK(g.condition_count() == 6 * 3);
  CHECK(g.point_count() == 6);
  for (std::size_t p = 0; p < g.point_count(); ++p) CHECK(g.flat(g.unflat(p)) == p);
  CHECK(g.multiplicity({2, 0}) == MultiIndex{3, 2});
  CHECK(g.coords({1, 1}) == std::vector<Q>{q(1), q(2)});
  const auto sub = g.sub_grid({1, 0}, {2, 0});
  CHECK(sub.shape() == MultiIndex{2, 1});
  CHECK(sub.axis(0).coords == std::vector<Q>{q(1), q(3)});
}

TEST_CASE("axis annihilator") {
  const UniPoly<Q> x = UniPoly<Q>::linear(q(0));
  Axis<Q> a45{{q(7, 10), q(6, 5), q(17, 10), q(11, 5)}, {2, 2, 2, 2}};
  UniPoly<Q> expect = UniPoly<Q>::constant(q(1));
  for (const auto& c : a45.coords) expect *= UniPoly<Q>::linear(c).pow(2);
  CHECK(axis_annihilator(a45) == expect);
  CHECK(axis_annihilator(a45).degree() == 8);

  Axis<Q> a46{{q(-1), q(0), q(1)}, {2, 2, 2}};
  CHECK(axis_annihilator(a46) == UniPoly<Q>::linear(q(-1)).pow(2) * x.pow(2) * UniPoly<Q>::linear(q(1)).pow(2));
  CHECK(axis_annihilator(Axis<Q>{{q(0)}, {1}}) == x);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto g = testing::random_grid(rng, {1, 4, 3});
    const auto& ax = g.axis(0);
    const auto h = axis_annihilator(ax);
    CHECK(h.degree() == ax.total_multiplicity());
    for (std::size_t j = 0; j < ax.size(); ++j) {
      for (int k = 0; k < ax.mult[j]; ++k) CHECK(h.derivative(k).eval(ax.coords[j]) == 0);
    }
  }
}

TEST_CASE("nodal basis") {
  Axis<Q> a{{q(0), q(1)}, {2, 2}};
  CHECK(nodal_basis(a, q(0)) == UniPoly<Q>({q(1), q(-2), q(1)}));
  Axis<Q> lin{{q(0), q(1)}, {1, 1}};
  CHECK(nodal_basis(lin, q(1)) == UniPoly<Q>::linear(q(0)));
  CHECK(nodal_basis(Axis<Q>{{q(5)}, {3}}, q(5)) == UniPoly<Q>::constant(q(1)));
  CHECK_THROWS_AS(nodal_basis(a, q(1, 2)), DomainError);

  // vanishing to order nu(c) at every other node, with varying nu
  std::mt19937_64 rng(10);
  for (int t = 0; t < 30; ++t) {
    const auto g = testing::random_grid(rng, {1, 4, 3});
    const auto& ax = g.axis(0);
    for (std::size_t j = 0; j < ax.size(); ++j) {
      const auto h = nodal_basis_at(ax, j);
      CHECK(h.eval(ax.coords[j]) == 1);
      for (std::size_t c = 0; c < ax.size(); ++c) {
        if (c == j) continue;
        for (int k = 0; k < ax.mult[c]; ++k) CHECK(h.derivative(k).eval(ax.coords[c]) == 0);
      }
    }
  }
}

TEST_CASE("data access") {
  const auto g = GridSpec<Q>::uniform({{q(0), q(1)}}, {3});
  const auto d = HermiteData<Q>::from_function(g, [](const std::vector<Q>& x, const MultiIndex& k) -> Q {
    return x[0] * 10 + k[0];
  });
  CHECK(d.value({1}, {2}) == q(12));
  CHECK(d.values_at({0}) == std::vector<Q>{q(0), q(1), q(2)});
  CHECK(d.records().size() == 2);
  CHECK(validate(g, d.records()).empty());
}
