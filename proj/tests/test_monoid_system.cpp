//
// refmon - tests for the concrete monoid systems M(W, S).
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "refmon/monoid_system.hpp"

using namespace refmon;

namespace {

  system_kind boolean_sys(coxeter_type t, int n) {
    return {system_category::boolean_sys, t, n};
  }
  system_kind arrangement_sys(coxeter_type t, int n) {
    return {system_category::arrangement_sys, t, n};
  }
  system_kind octa_sys(coxeter_type t, int n) {
    return {system_category::octa_sys, t, n};
  }
  system_kind perm_sys(int n) {
    return {system_category::permutohedron_sys, coxeter_type::A, n};
  }

  lattice_element one_row(std::vector<int> row) {
    lattice_element e;
    e.data.push_back(std::move(row));
    return e;
  }

  // the subgroup generated by the given group elements, as a set
  std::set<signed_perm> generated_subgroup(std::vector<signed_perm> gens,
                                           int                      n) {
    std::set<signed_perm>    seen{sp_identity(n)};
    std::vector<signed_perm> queue{sp_identity(n)};
    for (size_t q = 0; q < queue.size(); ++q) {
      for (auto const& g : gens) {
        auto h = sp_multiply(queue[q], g);
        if (seen.insert(h).second) {
          queue.push_back(h);
        }
      }
    }
    return seen;
  }

}  // namespace

TEST_CASE("system_kind validation and lattice assignment") {
  CHECK(system_lattice(boolean_sys(coxeter_type::A, 3)).family
        == lattice_family::boolean);
  CHECK(system_lattice(arrangement_sys(coxeter_type::A, 3)).family
        == lattice_family::partition);
  CHECK(system_lattice(arrangement_sys(coxeter_type::B, 2)).family
        == lattice_family::coupled_t);
  CHECK(system_lattice(arrangement_sys(coxeter_type::D, 4)).family
        == lattice_family::coupled_to);
  CHECK(system_lattice(octa_sys(coxeter_type::B, 2)).param == 2);
  CHECK(system_lattice(perm_sys(3)).param == 2);

  CHECK_THROWS_AS(system_lattice(octa_sys(coxeter_type::A, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(system_lattice(octa_sys(coxeter_type::D, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(system_lattice(boolean_sys(coxeter_type::D, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      system_lattice({system_category::permutohedron_sys, coxeter_type::B, 3}),
      std::invalid_argument);
}

TEST_CASE("fixes_pointwise on the three system styles") {
  // Boolean: a transposition moving only coordinates outside J fixes X(J)
  signed_perm s12{{2, 1, 3}};
  CHECK(fixes_pointwise(boolean_sys(coxeter_type::A, 3), one_row({3}), s12));
  CHECK(!fixes_pointwise(boolean_sys(coxeter_type::A, 3), one_row({1, 3}),
                         s12));

  // arrangement: the block constraint t1 = t2 absorbs the swap
  lattice_element p12;  // {12|3}
  p12.data = {{1, 2}, {3}};
  CHECK(fixes_pointwise(arrangement_sys(coxeter_type::A, 3), p12, s12));
  signed_perm s13{{3, 2, 1}};
  CHECK(!fixes_pointwise(arrangement_sys(coxeter_type::A, 3), p12, s13));

  // coupled: a sign flip fixes exactly the coupled coordinates
  lattice_element e1;  // Delta = {1}
  e1.data = {{1}, {2}};
  signed_perm s0{{-1, 2}};
  CHECK(fixes_pointwise(arrangement_sys(coxeter_type::B, 2), e1, s0));
  lattice_element a12;  // block {1,2}: t1 = t2
  a12.data = {{}, {1, 2}};
  CHECK(!fixes_pointwise(arrangement_sys(coxeter_type::B, 2), a12, s0));
  signed_perm s1b{{2, 1}};
  CHECK(fixes_pointwise(arrangement_sys(coxeter_type::B, 2), a12, s1b));

  // octahedron: the face f_K needs K fixed pointwise with signs
  CHECK(!fixes_pointwise(octa_sys(coxeter_type::B, 2), one_row({-1, -2}),
                         s0));
  CHECK(fixes_pointwise(octa_sys(coxeter_type::B, 2), one_row({2}), s0));
  lattice_element whole;
  whole.extreme = true;
  CHECK(!fixes_pointwise(octa_sys(coxeter_type::B, 2), whole, s0));
  CHECK(fixes_pointwise(octa_sys(coxeter_type::B, 2), whole,
                        sp_identity(2)));

  // permutohedron: only the top has reflections in its isotropy
  monoid_system perm(perm_sys(3));
  auto          s = generators(coxeter_type::A, 3);
  for (auto const& e : perm.lattice_elements()) {
    bool expect = e.extreme;
    CHECK(fixes_pointwise(perm_sys(3), e, s[0]) == expect);
  }
}

TEST_CASE("reflections") {
  CHECK(reflections(coxeter_type::A, 4).size() == 6);
  CHECK(reflections(coxeter_type::B, 3).size() == 9);
  CHECK(reflections(coxeter_type::D, 4).size() == 12);
  for (auto type : {coxeter_type::A, coxeter_type::B, coxeter_type::D}) {
    int  n     = type == coxeter_type::D ? 4 : 3;
    auto group = enumerate_group(type, n);
    for (auto const& t : reflections(type, n)) {
      CHECK(sp_multiply(t, t) == sp_identity(n));  // involution
      CHECK(group.index.count(t) == 1);            // lies in W
    }
  }
}

TEST_CASE("multiplication basics") {
  monoid_system sys(boolean_sys(coxeter_type::A, 2));
  auto          a1 = sys.idempotent(one_row({2}));
  auto          a2 = sys.idempotent(one_row({1}));
  // idempotent times idempotent is the idempotent of the join
  auto z = sys.multiply(a1, a2);
  CHECK(z == sys.idempotent(one_row({})));
  CHECK(sys.multiply(z, z) == z);
  // unit times unit is a unit on the bottom domain
  auto s = sys.unit(generators(coxeter_type::A, 2)[0]);
  CHECK(sys.multiply(s, s) == sys.one());
  // the zero absorbs
  CHECK(sys.multiply(z, s) == z);
}

TEST_CASE("enumerate_system orders against independent oracles") {
  CHECK(enumerate_system(boolean_sys(coxeter_type::A, 2), 1000).order() == 7);
  CHECK(enumerate_system(boolean_sys(coxeter_type::A, 3), 1000).order() == 34);
  CHECK(enumerate_system(boolean_sys(coxeter_type::A, 4), 1000).order()
        == 209);
  // partial signed permutations: sum C(2,k)^2 k! 2^k = 1 + 8 + 8
  CHECK(enumerate_system(boolean_sys(coxeter_type::B, 2), 1000).order() == 17);
  // uniform block permutations of {1,2,3}: 6 + 9 + 1
  CHECK(enumerate_system(arrangement_sys(coxeter_type::A, 3), 1000).order()
        == 16);
  CHECK_THROWS_AS(enumerate_system(boolean_sys(coxeter_type::A, 4), 100),
                  cap_exceeded);
}

TEST_CASE("Boolean systems match the partial-map models") {
  // type A vs partial permutations on {1,2,3}
  {
    auto sys = enumerate_system(boolean_sys(coxeter_type::A, 3), 10000);
    ground_set               g{3, false};
    std::vector<partial_map> maps;
    for (auto const& s : generators(coxeter_type::A, 3)) {
      maps.push_back(partial_map::permutation(g, s.img));
    }
    for (auto const& a : atoms({lattice_family::boolean, 3})) {
      maps.push_back(partial_map::partial_identity(g, a.data[0]));
    }
    auto model = enumerate_closure(maps, 10000);
    CHECK(sys.order() == model.order());
    CHECK(sys.cayley == model.cayley);  // same breadth-first numbering
  }
  // type B vs partial signed permutations on +/-{1,2}
  {
    auto sys = enumerate_system(boolean_sys(coxeter_type::B, 2), 10000);
    ground_set               g{2, true};
    std::vector<partial_map> maps;
    for (auto const& s : generators(coxeter_type::B, 2)) {
      maps.push_back(partial_map::permutation(g, s.img));
    }
    for (auto const& a : atoms({lattice_family::boolean, 2})) {
      maps.push_back(partial_map::partial_identity(g, a.data[0]));
    }
    auto model = enumerate_closure(maps, 10000);
    CHECK(sys.order() == model.order());
    CHECK(sys.cayley == model.cayley);
  }
}

TEST_CASE("factorizability M = EG") {
  for (auto kind : {boolean_sys(coxeter_type::A, 3),
                    boolean_sys(coxeter_type::B, 2),
                    arrangement_sys(coxeter_type::A, 3),
                    arrangement_sys(coxeter_type::B, 2),
                    octa_sys(coxeter_type::B, 2), perm_sys(3)}) {
    monoid_system sys(kind);
    auto          monoid = enumerate_system(kind, 100000);
    for (auto const& m : monoid.elements) {
      monoid_element unit{bottom(sys.lattice()), m.unit};
      CHECK(sys.multiply(sys.idempotent(m.domain), unit) == m);
    }
  }
}

TEST_CASE("isotropy is generated by its reflections") {
  for (auto kind : {boolean_sys(coxeter_type::A, 3),
                    boolean_sys(coxeter_type::B, 2),
                    boolean_sys(coxeter_type::D, 4),
                    arrangement_sys(coxeter_type::B, 2),
                    octa_sys(coxeter_type::B, 2), perm_sys(3)}) {
    monoid_system sys(kind);
    for (auto const& e : sys.lattice_elements()) {
      auto gen = generated_subgroup(fixed_hyperplane_atoms(kind, e), kind.n);
      std::set<signed_perm> iso;
      for (int w : sys.isotropy(e)) {
        iso.insert(sys.group().elements[w]);
      }
      // Steinberg: the pointwise stabilizer is reflection-generated; for the
      // interval systems the bottom/top special cases are included
      if (kind.category == system_category::octa_sys && e.extreme) {
        CHECK(iso.size() == 1);  // whole polytope: identity only
        continue;
      }
      if (kind.category == system_category::permutohedron_sys && e.extreme) {
        CHECK(iso.size() == sys.group().elements.size());
        continue;
      }
      CHECK(gen == iso);
    }
  }
}

TEST_CASE("iso_pairs tables") {
  {
    monoid_system sys(boolean_sys(coxeter_type::A, 3));
    auto          pairs = sys.iso_pairs();
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].first == one_row({3}));  // a1 v a2 = X({3,...,n})
    CHECK(pairs[0].second == 0);            // s1
  }
  {
    monoid_system sys(boolean_sys(coxeter_type::B, 2));
    auto          pairs = sys.iso_pairs();
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].first == one_row({2}));  // a1, fixed by s0
    CHECK(pairs[0].second == 0);
    CHECK(pairs[1].first == one_row(std::vector<int>{}));  // a1 v a2
    CHECK(pairs[1].second == 1);                           // s1
  }
  {
    monoid_system sys(arrangement_sys(coxeter_type::B, 2));
    auto          pairs = sys.iso_pairs();
    REQUIRE(pairs.size() == 2);
    lattice_element e1;
    e1.data = {{1}, {2}};  // epsilon_1: Delta = {1}
    CHECK(pairs[0].first == e1);
    CHECK(pairs[0].second == 0);  // s0
    lattice_element a12;
    a12.data = {{}, {1, 2}};  // alpha_12
    CHECK(pairs[1].first == a12);
    CHECK(pairs[1].second == 1);  // s1
  }
  {
    monoid_system sys(perm_sys(3));
    auto          pairs = sys.iso_pairs();
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].first.extreme);  // the top, and nothing below it
    CHECK(pairs[0].second == 0);    // s1
  }
}

TEST_CASE("interval map equivariance for octa and permutohedron systems") {
  for (auto kind : {octa_sys(coxeter_type::B, 2), perm_sys(3)}) {
    monoid_system sys(kind);
    auto const&   lat = sys.lattice();
    for (auto const& a : sys.lattice_elements()) {
      for (auto const& g : sys.group().elements) {
        // E_{>=a} . g = E_{>= a.g}
        std::set<lattice_element> moved, target;
        for (auto const& e : sys.lattice_elements()) {
          if (leq(lat, a, e)) {
            moved.insert(act(lat, e, g));
          }
          if (leq(lat, act(lat, a, g), e)) {
            target.insert(e);
          }
        }
        CHECK(moved == target);
      }
    }
  }
}

TEST_CASE("octahedron system order by coset counting") {
  // sum over faces of [W : W_K] for B2: 8/8 + 4*(8/2) + 4*(8/1) + 8 = 57
  CHECK(enumerate_system(octa_sys(coxeter_type::B, 2), 10000).order() == 57);
  // permutohedron system: every proper face has trivial isotropy
  CHECK(enumerate_system(perm_sys(3), 10000).order() == 13 * 6 + 1);
}
