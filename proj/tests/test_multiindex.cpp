#include <doctest.h>

#include <random>

#include "hermite/errors.hpp"
#include "hermite/multiindex.hpp"

using namespace hermite;

TEST_CASE("partial order") {
  CHECK(leq_partial({0, 1}, {1, 1}));
  CHECK_FALSE(leq_partial({1, 0}, {0, 1}));
  CHECK_FALSE(leq_partial({0, 1}, {1, 0}));
  CHECK(leq_partial({2, 2}, {2, 2}));
  CHECK_THROWS_AS(leq_partial({1}, {1, 2}), DimensionError);
}

TEST_CASE("grevlex comparison") {
  CHECK(compare_grevlex({0, 0, 1}, {0, 1, 0}) < 0);
  CHECK(compare_grevlex({2, 0}, {0, 1}) > 0);
  CHECK(compare_grevlex({1, 1}, {1, 1}) == 0);
  CHECK_THROWS_AS(compare_grevlex({1}, {1, 0}), DimensionError);

  // (1,0,...,0) is position n+1 of the unit box
  for (std::size_t n = 1; n <= 5; ++n) {
    MultiIndex hi(n);
    for (std::size_t i = 0; i < n; ++i) hi.set(i, 1);
    MultiIndex first(n);
    first.set(0, 1);
    const auto order = enumerate_box(IndexBox(MultiIndex(n), hi));
    CHECK(order[n] == first);
  }
}

TEST_CASE("box enumeration") {
  const auto a = enumerate_box(IndexBox({0, 0}, {1, 1}));
  CHECK(a == std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(enumerate_box(IndexBox({0}, {0})) == std::vector<MultiIndex>{{0}});
  const auto b = enumerate_box(IndexBox({0, 0}, {2, 1}));
  CHECK(b == std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
  CHECK(enumerate_box(IndexBox({1, 2}, {3, 2})).size() == 3);
  CHECK_THROWS(IndexBox({2, 0}, {1, 1}));
}

TEST_CASE("grevlex linearly extends the partial order") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> len(1, 4), ext(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(len(rng));
    MultiIndex hi(n);
    for (std::size_t i = 0; i < n; ++i) hi.set(i, ext(rng));
    IndexBox box(MultiIndex(n), hi);
    if (box.cardinality() > 256) continue;
    const auto order = enumerate_box(box);
    REQUIRE(order.size() == box.cardinality());
    for (std::size_t i = 1; i < order.size(); ++i) CHECK(compare_grevlex(order[i - 1], order[i]) < 0);
    for (const auto& k : order) {
      for (const auto& l : order) {
        if (k != l && leq_partial(k, l)) CHECK(compare_grevlex(k, l) < 0);
      }
    }
  }
}

TEST_CASE("grevlex is a total order") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(0, 3);
  auto draw = [&] { return MultiIndex{e(rng), e(rng), e(rng)}; };
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = draw(), b = draw(), c = draw();
    const auto ab = compare_grevlex(a, b);
    CHECK((ab == 0) == (a == b));
    CHECK((ab < 0) == (compare_grevlex(b, a) > 0));
    if (ab < 0 && compare_grevlex(b, c) < 0) CHECK(compare_grevlex(a, c) < 0);
  }
}

TEST_CASE("position lookup") {
  BoxEnumeration box({2, 1, 2});
  for (std::size_t p = 0; p < box.size(); ++p) CHECK(box.position(box.at(p)) == p);
  CHECK_THROWS_AS(box.position({3, 0, 0}), DomainError);
  CHECK(multiplicity_box({2, 2}).get() == multiplicity_box({2, 2}).get());
  CHECK(multiplicity_box({2, 2})->size() == 4);
}
