//
// refmon - tests for partial injections and closure enumeration.
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "refmon/partial_map.hpp"

using namespace refmon;

namespace {

  // |I_n| = sum_k C(n,k)^2 k!, the monoid of all partial injections on n
  // points, counted directly.
  size_t rook_order(int n) {
    auto   choose = [](int a, int b) {
      double r = 1;
      for (int i = 0; i < b; ++i) {
        r = r * (a - i) / (i + 1);
      }
      return static_cast<size_t>(r + 0.5);
    };
    size_t total = 0, fact = 1;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) {
        fact *= k;
      }
      total += choose(n, k) * choose(n, k) * fact;
    }
    return total;
  }

}  // namespace

TEST_CASE("partial_map: construction and validation") {
  ground_set g{3, false};
  partial_map f(g, {{1, 2}, {3, 1}});
  CHECK(f.defined_on(1));
  CHECK(!f.defined_on(2));
  CHECK(f.image(3) == 1);
  CHECK(f.domain_size() == 2);
  CHECK_THROWS_AS(partial_map(g, {{1, 2}, {3, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(partial_map(g, {{1, 2}, {1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(partial_map(g, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(partial_map(g, {{-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(f.image(2), std::invalid_argument);
}

TEST_CASE("partial_map: signed ground sets pair (p,q) with (-p,-q)") {
  ground_set g{2, true};
  partial_map f(g, {{1, -2}, {-1, 2}});
  CHECK(f.image(1) == -2);
  CHECK(f.image(-1) == 2);
  CHECK_THROWS_AS(partial_map(g, {{1, -2}}), std::invalid_argument);
  CHECK_THROWS_AS(partial_map(g, {{1, -2}, {-1, -2}}), std::invalid_argument);
}

TEST_CASE("partial_map: compose and inverse") {
  ground_set g{4, false};
  partial_map f(g, {{1, 2}, {2, 3}});
  partial_map h(g, {{3, 4}, {1, 1}});
  partial_map fh = compose(f, h);
  CHECK(fh.domain_size() == 1);
  CHECK(fh.image(2) == 4);
  CHECK(compose(f, inverse(f))
        == partial_map::partial_identity(g, {1, 2}));
  CHECK(compose(inverse(f), f)
        == partial_map::partial_identity(g, {2, 3}));
  CHECK(inverse(inverse(f)) == f);
  ground_set g2{3, false};
  CHECK_THROWS_AS(compose(f, partial_map::identity(g2)),
                  std::invalid_argument);
}

TEST_CASE("partial_map: factories") {
  ground_set g{3, true};
  partial_map id = partial_map::identity(g);
  CHECK(id.domain_size() == 6);
  partial_map s = partial_map::permutation(g, {2, 1, 3});
  CHECK(s.image(-1) == -2);
  CHECK(compose(s, s) == id);
  partial_map e = partial_map::partial_identity(g, {2, 3});
  CHECK(e.domain_size() == 4);
  CHECK(compose(e, e) == e);
}

TEST_CASE("enumerate_closure: symmetric inverse monoid orders") {
  for (int n = 2; n <= 4; ++n) {
    ground_set g{n, false};
    std::vector<partial_map> gens;
    for (int i = 1; i < n; ++i) {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 1);
      std::swap(img[i - 1], img[i]);
      gens.push_back(partial_map::permutation(g, img));
    }
    std::vector<int> dom(n - 1);
    std::iota(dom.begin(), dom.end(), 2);
    gens.push_back(partial_map::partial_identity(g, dom));
    auto closure = enumerate_closure(gens, 100000);
    CHECK(closure.order() == rook_order(n));
    // the Cayley graph is total and closed
    for (auto const& row : closure.cayley) {
      for (int t : row) {
        CHECK(t >= 0);
        CHECK(t < static_cast<int>(closure.order()));
      }
    }
  }
}

TEST_CASE("enumerate_closure: cap") {
  ground_set g{4, false};
  std::vector<partial_map> gens{
      partial_map::permutation(g, {2, 1, 3, 4}),
      partial_map::permutation(g, {1, 3, 2, 4}),
      partial_map::permutation(g, {1, 2, 4, 3}),
      partial_map::partial_identity(g, {2, 3, 4})};
  CHECK_THROWS_AS(enumerate_closure(gens, 100), cap_exceeded);
  CHECK_NOTHROW(enumerate_closure(gens, 209));
}
