#include <doctest.h>

#include <cmath>
#include <random>

#include "hermite/errors.hpp"
#include "hermite/interpolant.hpp"
#include "hermite/io.hpp"
#include "hermite/oracles.hpp"
#include "support.hpp"

using namespace hermite;
using Q = Rational;
using PQ = MultiPoly<Q>;

namespace {

Q q(long p, long d = 1) { return CoeffTraits<Q>::from_ratio(p, d); }

LambdaMatrix<Q> matrix(std::initializer_list<long> v) {
  LambdaMatrix<Q> m;
  m.size = 4;
  for (long x : v) m.entries.push_back(q(x));
  return m;
}

GridSpec<Q> unit_square(int nu) { return GridSpec<Q>::uniform({{q(0), q(1)}, {q(0), q(1)}}, {nu, nu}); }

}  // namespace

TEST_CASE("basis terms of the unit square") {
  const auto basis = build_basis(unit_square(2));
  CHECK(basis.point_terms({0, 1}).size() == 4);
  const PQ x = PQ::variable(2, 0), y = PQ::variable(2, 1);
  const PQ one = PQ::constant(2, q(1));
  CHECK(basis.term({0, 0}, {1, 0}).expand() == (x.pow(3) - x.pow(2) * q(2) + x) * (y.pow(2) - y * q(2) + one));
  CHECK(basis.term({1, 1}, {1, 1}).expand() == (x.pow(3) - x.pow(2)) * (y.pow(3) - y.pow(2)));

  const auto lin = build_basis(unit_square(1));
  CHECK(lin.term({0, 0}, {0, 0}).expand() == (one - x) * (one - y));
  CHECK(lin.term({1, 0}, {0, 0}).expand() == x * (one - y));

  const auto single = build_basis(GridSpec<Q>::uniform({{q(3)}, {q(4)}}, {1, 1}));
  CHECK(single.term({0, 0}, {0, 0}).expand() == one);
}

TEST_CASE("lambda matrices of the unit square") {
  const auto basis = build_basis(unit_square(2));
  // Lambda itself: d^j H_{(a,i)} at a
  CHECK(build_lambda(basis, {0, 0}) == matrix({1, 0, 0, 0, -2, 1, 0, 0, -2, 0, 1, 0, 4, -2, -2, 1}));
  CHECK(build_lambda(basis, {0, 1}) == matrix({1, 0, 0, 0, 2, 1, 0, 0, -2, 0, 1, 0, -4, -2, 2, 1}));
  CHECK(build_lambda(basis, {1, 0}) == matrix({1, 0, 0, 0, -2, 1, 0, 0, 2, 0, 1, 0, -4, 2, -2, 1}));
  CHECK(build_lambda(basis, {1, 1}) == matrix({1, 0, 0, 0, 2, 1, 0, 0, 2, 0, 1, 0, 4, 2, 2, 1}));
  CHECK(build_lambda(basis, {0, 0}).inverse() == matrix({1, 0, 0, 0, 2, 1, 0, 0, 2, 0, 1, 0, 4, 2, 2, 1}));

  const auto lin = build_basis(unit_square(1));
  const auto one = build_lambda(lin, {1, 0});
  CHECK(one.size == 1);
  CHECK(one.entries == std::vector<Q>{q(1)});
}

TEST_CASE("coefficient solve") {
  const auto lam = build_lambda(build_basis(unit_square(2)), {0, 0});
  CHECK(solve_forward(lam, {q(1), q(1), q(1), q(1)}) == std::vector<Q>{q(1), q(3), q(3), q(9)});
  CHECK(solve_forward(lam, {q(0), q(0), q(0), q(0)}) == std::vector<Q>(4, q(0)));
  LambdaMatrix<Q> one{1, {q(1)}};
  CHECK(solve_forward(one, {q(7, 3)}) == std::vector<Q>{q(7, 3)});
  CHECK(solve_neumann(one, {q(7, 3)}) == std::vector<Q>{q(7, 3)});
}

TEST_CASE("forward substitution equals the Neumann series") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 40; ++t) {
    const auto g = testing::random_grid(rng);
    const auto basis = build_basis(g);
    for (std::size_t p = 0; p < g.point_count(); ++p) {
      const auto a = g.unflat(p);
      const auto lam = build_lambda(basis, a);
      std::vector<Q> tv;
      for (std::size_t i = 0; i < lam.size; ++i) tv.push_back(testing::random_rational(rng));
      CHECK(solve_forward(lam, tv) == solve_neumann(lam, tv));
      for (std::size_t r = 0; r < lam.size; ++r) {
        CHECK(lam(r, r) == 1);
        for (std::size_t c = r + 1; c < lam.size; ++c) CHECK(lam(r, c) == 0);
      }
    }
  }
}

TEST_CASE("kronecker table of the basis") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 15; ++t) {
    const auto g = testing::random_grid(rng, {2, 3, 3, false, 200});
    const auto basis = build_basis(g);
    for (std::size_t pb = 0; pb < g.point_count(); ++pb) {
      const auto b = g.unflat(pb);
      const auto terms = basis.point_terms(b);
      const auto mbox = multiplicity_box(g.multiplicity(b));
      for (std::size_t mi = 0; mi < terms.size(); ++mi) {
        const auto poly = terms[mi].expand();
        const MultiIndex& m = mbox->at(mi);
        for (std::size_t pa = 0; pa < g.point_count(); ++pa) {
          const auto a = g.unflat(pa);
          const auto x = g.coords(a);
          for (const auto& k : multiplicity_box(g.multiplicity(a))->indices()) {
            const Q v = poly.differentiate(k).evaluate(x);
            if (a != b) CHECK(v == 0);
            else if (k == m) CHECK(v == 1);
            else if (!leq_partial(m, k)) CHECK(v == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("interpolation conditions and degree bounds") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 60; ++t) {
    const auto g = testing::random_grid(rng);
    const auto data = testing::random_data(rng, g);
    const auto f = interpolate(data);
    CHECK(interpolation_residual(f, data) == 0.0);
    for (std::size_t p = 0; p < g.point_count(); ++p) {
      const auto a = g.unflat(p);
      const auto box = multiplicity_box(g.multiplicity(a));
      for (std::size_t i = 0; i < box->size(); ++i) CHECK(f.eval(g.coords(a), box->at(i)) == data.values_at(a)[i]);
    }
    const auto& e = f.expanded();
    for (std::size_t i = 0; i < g.dims(); ++i) CHECK(e.degree(i) < g.axis(i).total_multiplicity());
  }
}

TEST_CASE("eval agrees with the expanded form") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    const auto g = testing::random_grid(rng);
    const auto f = interpolate(testing::random_data(rng, g));
    std::vector<Q> x;
    for (std::size_t i = 0; i < g.dims(); ++i) x.push_back(testing::random_rational(rng));
    MultiIndex k(g.dims());
    k.set(0, t % 3);
    CHECK(f.eval(x, k) == f.expanded().differentiate(k).evaluate(x));
  }
}

TEST_CASE("interpolation is linear in the data") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto g = testing::random_grid(rng);
    const auto d1 = testing::random_data(rng, g);
    const auto d2 = testing::random_data(rng, g);
    const Q alpha = testing::random_rational(rng), beta = testing::random_rational(rng);
    std::vector<std::vector<Q>> mix;
    for (std::size_t p = 0; p < g.point_count(); ++p) {
      const auto a = g.unflat(p);
      std::vector<Q> v;
      for (std::size_t i = 0; i < d1.values_at(a).size(); ++i) v.push_back(alpha * d1.values_at(a)[i] + beta * d2.values_at(a)[i]);
      mix.push_back(v);
    }
    const auto lhs = interpolate(HermiteData<Q>(g, mix)).expanded();
    const auto rhs = interpolate(d1).expanded() * alpha + interpolate(d2).expanded() * beta;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("oracles agree with the construction") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 40; ++t) {
    const auto g = testing::random_grid(rng);
    const auto data = testing::random_data(rng, g);
    const auto f = interpolate(data).expanded();
    CHECK(spitzbart_interpolate(data) == f);
    CHECK(vandermonde_interpolate(data) == f);
  }
  const auto one = GridSpec<Q>::uniform({{q(2)}}, {1});
  const HermiteData<Q> c(one, {{q(5, 7)}});
  CHECK(spitzbart_interpolate(c) == PQ::constant(1, q(5, 7)));
  CHECK(vandermonde_interpolate(c) == PQ::constant(1, q(5, 7)));

  const auto big = GridSpec<Q>::uniform({{q(0), q(1), q(2), q(3)}, {q(0), q(1), q(2), q(3)}}, {3, 3});
  CHECK(big.condition_count() == 144);
  const auto huge = GridSpec<Q>::uniform({{q(0), q(1), q(2), q(3)}, {q(0), q(1), q(2), q(3)}, {q(0), q(1)}}, {3, 3, 3});
  const auto zz = HermiteData<Q>::from_function(huge, [](const std::vector<Q>&, const MultiIndex&) { return q(0); });
  CHECK_THROWS_AS(vandermonde_interpolate(zz), SystemTooLargeError);
}

TEST_CASE("bilinear reproduction") {
  const PQ x = PQ::variable(2, 0), y = PQ::variable(2, 1), one = PQ::constant(2, q(1));
  const Q c00 = q(3), c01 = q(-1, 2), c10 = q(7, 3), c11 = q(5);
  const auto g = unit_square(1);
  const auto data = HermiteData<Q>::from_function(g, [&](const std::vector<Q>& p, const MultiIndex&) {
    return p[0] == 0 ? (p[1] == 0 ? c00 : c01) : (p[1] == 0 ? c10 : c11);
  });
  const auto f = interpolate(data);
  const PQ bil = (one - x) * (one - y) * c00 + (one - x) * y * c01 + x * (one - y) * c10 + x * y * c11;
  CHECK(f.expanded() == bil);
  CHECK(f.eval({q(1, 2), q(1, 2)}) == (c00 + c01 + c10 + c11) / 4);
  CHECK(f.eval({q(1), q(0)}) == c10);
}

TEST_CASE("exp data on the unit square") {
  const auto data = hgrid_from_json<double>(read_json_file(testing::fixture("exp_square_nu2.json")));
  const auto f = interpolate(data);
  CHECK(f.eval({0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(f.eval({0.0, 0.0}, {1, 0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(interpolation_residual(f, data) < 1e-12);
}

TEST_CASE("high degree axes use the product form") {
  std::vector<double> c;
  for (int i = 0; i <= 14; ++i) c.push_back(i - 7.0);
  const auto g = GridSpec<double>::uniform({c}, {2});
  CHECK(build_basis(g).axis(0).degree() > kExpandedDegreeLimit);
  const auto data = HermiteData<double>::from_function(g, [](const std::vector<double>& x, const MultiIndex& k) {
    return k[0] == 0 ? std::sin(x[0]) : std::cos(x[0]);
  });
  const auto f = interpolate(data);
  CHECK(interpolation_residual(f, data) < 1e-8);
  CHECK(f.eval({0.5}) == doctest::Approx(std::sin(0.5)).epsilon(1e-9));
  CHECK(f.eval({0.5}, {1}) == doctest::Approx(std::cos(0.5)).epsilon(1e-8));
}

TEST_CASE("argument checks") {
  std::mt19937_64 rng(1);
  const auto f = interpolate(testing::random_data(rng, unit_square(2)));
  CHECK_THROWS_AS(f.eval({q(0)}), DimensionError);
}
