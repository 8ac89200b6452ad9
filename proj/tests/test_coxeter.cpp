//
// refmon - tests for Weyl groups, orbits and characteristic maps.
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "refmon/coxeter.hpp"

using namespace refmon;

namespace {

  size_t factorial(int n) {
    size_t r = 1;
    for (int i = 2; i <= n; ++i) {
      r *= i;
    }
    return r;
  }

  int element_order(signed_perm const& g) {
    signed_perm p = g;
    int         k = 1;
    while (p != sp_identity(g.n())) {
      p = sp_multiply(p, g);
      ++k;
    }
    return k;
  }

}  // namespace

TEST_CASE("coxeter: generator lists") {
  auto a = generators(coxeter_type::A, 3);
  CHECK(a.size() == 2);
  CHECK(a[0].img == std::vector<int>{2, 1, 3});
  auto b = generators(coxeter_type::B, 2);
  CHECK(b.size() == 2);
  CHECK(b[0].img == std::vector<int>{-1, 2});
  CHECK(b[1].img == std::vector<int>{2, 1});
  auto d = generators(coxeter_type::D, 4);
  CHECK(d.size() == 4);
  CHECK(d[0].img == std::vector<int>{-2, -1, 3, 4});
  CHECK(sp_even_signed(d[0]));
  CHECK_THROWS_AS(generators(coxeter_type::D, 3), std::invalid_argument);
}

TEST_CASE("coxeter: matrix orders are satisfied exactly") {
  for (auto [type, lo] : std::vector<std::pair<coxeter_type, int>>{
           {coxeter_type::A, 2}, {coxeter_type::B, 2}, {coxeter_type::D, 4}}) {
    for (int n = lo; n <= 5; ++n) {
      auto gens = generators(type, n);
      auto mat  = coxeter_matrix(type, n);
      for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = 0; j < gens.size(); ++j) {
          CHECK(element_order(sp_multiply(gens[i], gens[j])) == mat[i][j]);
        }
      }
    }
  }
}

TEST_CASE("coxeter: evaluate_word") {
  CHECK(evaluate_word({}, coxeter_type::A, 3) == sp_identity(3));
  CHECK(evaluate_word({0, 0}, coxeter_type::A, 3) == sp_identity(3));
  CHECK(evaluate_word({0, 1, 0, 1, 0, 1, 0, 1}, coxeter_type::B, 2)
        == sp_identity(2));
  // braid: s1 s2 s1 = s2 s1 s2
  CHECK(evaluate_word({0, 1, 0}, coxeter_type::A, 3)
        == evaluate_word({1, 0, 1}, coxeter_type::A, 3));
  CHECK_THROWS_AS(evaluate_word({5}, coxeter_type::A, 3),
                  std::invalid_argument);
}

TEST_CASE("coxeter: group orders") {
  CHECK(enumerate_group(coxeter_type::A, 4).elements.size() == factorial(4));
  CHECK(enumerate_group(coxeter_type::B, 3).elements.size()
        == 8 * factorial(3));
  CHECK(enumerate_group(coxeter_type::D, 4).elements.size()
        == 8 * factorial(4));
  // witness words evaluate to their elements; type D stays even-signed
  auto data = enumerate_group(coxeter_type::D, 4);
  for (size_t i = 0; i < data.elements.size(); ++i) {
    CHECK(evaluate_word(data.words[i], coxeter_type::D, 4)
          == data.elements[i]);
    CHECK(sp_even_signed(data.elements[i]));
  }
}

TEST_CASE("coxeter: act is a right action") {
  lattice_kind kind{lattice_family::coupled_t, 3};
  auto         group = enumerate_group(coxeter_type::B, 3);
  auto         elts  = elements(kind);
  for (auto const& g : group.elements) {
    for (auto const& h : group.elements) {
      auto gh = sp_multiply(g, h);
      for (auto const& x : {elts[0], elts[3], elts.back()}) {
        CHECK(act(kind, x, gh) == act(kind, act(kind, x, g), h));
      }
    }
  }
  // the action respects joins
  lattice_kind oct{lattice_family::octa_face, 3};
  auto         g = generators(coxeter_type::B, 3)[0];
  for (auto const& x : atoms(oct)) {
    for (auto const& y : atoms(oct)) {
      CHECK(act(oct, join(oct, x, y), g)
            == join(oct, act(oct, x, g), act(oct, y, g)));
    }
  }
}

TEST_CASE("coxeter: atom orbit representatives and witness words") {
  // Boolean atoms under type A form a single orbit
  auto bool_orbits =
      orbit_reps(coxeter_type::A, 3, {lattice_family::boolean, 3});
  CHECK(bool_orbits.reps.size() == 1);

  // type B arrangement atoms split into the coordinate-hyperplane orbit and
  // the a/b orbit
  lattice_kind t3{lattice_family::coupled_t, 3};
  auto         t_orbits = orbit_reps(coxeter_type::B, 3, t3);
  CHECK(t_orbits.reps.size() == 2);

  // partition atoms under type A: single orbit; pairs: two orbits
  lattice_kind p4{lattice_family::partition, 4};
  CHECK(orbit_reps(coxeter_type::A, 4, p4).reps.size() == 1);
  auto pair_reps = orbit_reps_k(coxeter_type::A, 4, p4, 2);
  CHECK(pair_reps.size() == 2);

  // witness law: a = rep_of[a] . witness[a]
  for (auto const& [kind, type, n] :
       std::vector<std::tuple<lattice_kind, coxeter_type, int>>{
           {{lattice_family::boolean, 3}, coxeter_type::A, 3},
           {{lattice_family::coupled_t, 3}, coxeter_type::B, 3},
           {{lattice_family::octa_face, 3}, coxeter_type::B, 3},
           {{lattice_family::permutohedron, 2}, coxeter_type::A, 3}}) {
    auto data = orbit_reps(type, n, kind);
    for (auto const& a : atoms(kind)) {
      auto g = evaluate_word(data.witness.at(a), type, n);
      CHECK(act(kind, data.rep_of.at(a), g) == a);
    }
    for (auto const& r : data.reps) {
      CHECK(data.witness.at(r).empty());
    }
  }
}

TEST_CASE("coxeter: orbit reps are exhaustive and non-overlapping") {
  lattice_kind kind{lattice_family::coupled_to, 4};
  auto         group = enumerate_group(coxeter_type::D, 4);
  auto         data  = orbit_reps(coxeter_type::D, 4, kind);
  std::set<lattice_element> covered;
  for (auto const& r : data.reps) {
    std::set<lattice_element> orbit;
    for (auto const& g : group.elements) {
      orbit.insert(act(kind, r, g));
    }
    for (auto const& x : orbit) {
      CHECK(covered.insert(x).second);  // no overlap between orbits
    }
  }
  CHECK(covered.size() == atoms(kind).size());
}

TEST_CASE("coxeter: characteristic map counts") {
  for (int ell = 0; ell <= 6; ++ell) {
    CHECK(char_maps(ell, 1).size() == static_cast<size_t>(ell + 1));
  }
  CHECK(char_maps(2, 2).size() == 10);

  // brute force: orbits of S_ell on ordered k-tuples of subsets of {1..ell}
  for (int ell = 1; ell <= 4; ++ell) {
    auto group = enumerate_group(coxeter_type::A, std::max(ell, 2));
    for (int k = 1; k <= 3; ++k) {
      std::set<std::vector<std::vector<int>>> seen;
      size_t                                  orbits = 0;
      size_t total = size_t(1) << (ell * k);
      for (size_t code = 0; code < total; ++code) {
        std::vector<std::vector<int>> tuple(k);
        for (int i = 0; i < k; ++i) {
          for (int p = 1; p <= ell; ++p) {
            if ((code >> (i * ell + p - 1)) & 1) {
              tuple[i].push_back(p);
            }
          }
        }
        if (seen.count(tuple)) {
          continue;
        }
        ++orbits;
        for (auto const& g : group.elements) {
          if (ell == 1 && g.img[1] != 2) {
            continue;  // padding coordinate must stay fixed
          }
          std::vector<std::vector<int>> image(k);
          for (int i = 0; i < k; ++i) {
            for (int p : tuple[i]) {
              image[i].push_back(g.apply(p));
            }
            std::sort(image[i].begin(), image[i].end());
          }
          seen.insert(image);
        }
      }
      CAPTURE(ell);
      CAPTURE(k);
      CHECK(char_maps(ell, k).size() == orbits);
    }
  }
}

TEST_CASE("coxeter: realize_tuple round trip") {
  for (int ell = 1; ell <= 4; ++ell) {
    for (int k = 1; k <= 3; ++k) {
      for (auto const& f : char_maps(ell, k)) {
        auto tuple = realize_tuple(f);
        CHECK(char_map_of(tuple, ell) == f);
      }
    }
  }
  // the hand example: k=2, f({1})=f({2})=1, f({1,2})=0 realizes to {1},{2}
  char_map f;
  f.k      = 2;
  f.ell    = 2;
  f.values = {2, 1, 1, 0};
  auto t   = realize_tuple(f);
  CHECK(t == std::vector<std::vector<int>>{{1}, {2}});
  // equal components arise: f constant 1
  f.values = {1, 1, 1, 1};
  t        = realize_tuple(f);
  CHECK(t == std::vector<std::vector<int>>{{1}, {1}});
}

TEST_CASE("coxeter: hyperplane orbit representatives") {
  CHECK(hyperplane_orbit_reps(coxeter_type::A, 4) == std::vector<int>{0});
  CHECK(hyperplane_orbit_reps(coxeter_type::B, 3)
        == std::vector<int>{0, 1});
  CHECK(hyperplane_orbit_reps(coxeter_type::D, 4) == std::vector<int>{1});
  // the representatives really are pairwise non-conjugate and cover all
  // reflections up to conjugacy, for type B
  auto group = enumerate_group(coxeter_type::B, 3);
  auto gens  = generators(coxeter_type::B, 3);
  std::set<signed_perm> reflections;
  for (auto const& g : group.elements) {
    for (auto const& s : gens) {
      reflections.insert(
          sp_multiply(sp_multiply(sp_inverse(g), s), g));
    }
  }
  std::set<signed_perm> covered;
  for (int r : hyperplane_orbit_reps(coxeter_type::B, 3)) {
    std::set<signed_perm> cls;
    for (auto const& g : group.elements) {
      cls.insert(sp_multiply(sp_multiply(sp_inverse(g), gens[r]), g));
    }
    for (auto const& x : cls) {
      CHECK(covered.insert(x).second);
    }
  }
  CHECK(covered == reflections);
}
