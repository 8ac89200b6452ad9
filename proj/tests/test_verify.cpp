//
// refmon - tests for the certification engine.
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "refmon/partial_map.hpp"
#include "refmon/verify.hpp"

using namespace refmon;

namespace {

  presentation free_semilattice(int g) {
    presentation p;
    for (int i = 0; i < g; ++i) {
      p.add_generator("a" + std::to_string(i + 1),
                      generator_kind::idempotent);
    }
    for (int i = 0; i < g; ++i) {
      p.add_relation(relation_family::idem1, {i, i}, {i});
      for (int j = i + 1; j < g; ++j) {
        p.add_relation(relation_family::idem2, {i, j}, {j, i});
      }
    }
    return p;
  }

  // concrete monoid over a presentation's generators from a partial-map
  // closure: generator i of p is mapped to the given concrete map
  concrete_monoid realize(std::vector<partial_map> const& images) {
    auto            closure = enumerate_closure(images, 1000000);
    concrete_monoid m;
    m.cayley = closure.cayley;
    return m;
  }

}  // namespace

TEST_CASE("todd_coxeter: tiny presentations") {
  presentation p;
  p.add_generator("a", generator_kind::idempotent);
  p.add_relation(relation_family::idem1, {0, 0}, {0});
  auto r = todd_coxeter(p, 100);
  CHECK(r.complete);
  CHECK(r.order == 2);  // 1 and a

  CHECK(todd_coxeter(free_semilattice(3), 1000).order == 8);
  CHECK(todd_coxeter(free_semilattice(4), 1000).order == 16);

  // a free idempotent generator does not terminate under a small cap
  presentation q;
  q.add_generator("x", generator_kind::unit);
  auto rq = todd_coxeter(q, 50);
  CHECK(!rq.complete);

  // x^2 = 1 gives the two-element group
  q.add_relation(relation_family::units, {0, 0}, {});
  rq = todd_coxeter(q, 50);
  CHECK(rq.complete);
  CHECK(rq.order == 2);
}

TEST_CASE("todd_coxeter: coincidences cascade") {
  // x y = 1 and y x = 1 with x^3 = 1: cyclic group of order 3
  presentation p;
  p.add_generator("x", generator_kind::unit);
  p.add_generator("y", generator_kind::unit);
  p.add_relation(relation_family::units, {0, 1}, {});
  p.add_relation(relation_family::units, {1, 0}, {});
  p.add_relation(relation_family::units, {0, 0, 0}, {});
  auto r = todd_coxeter(p, 1000);
  CHECK(r.complete);
  CHECK(r.order == 3);
}

TEST_CASE("todd_coxeter: monotone under added sound relations") {
  presentation p = free_semilattice(3);
  auto         before = todd_coxeter(p, 1000);
  p.add_relation(relation_family::idem3, {0, 1}, {0, 1, 2});
  auto after = todd_coxeter(p, 1000);
  CHECK(before.complete);
  CHECK(after.complete);
  CHECK(after.order <= before.order);
  CHECK(after.order == 7);  // a1 a2 = a1 a2 a3 collapses exactly one class
}

TEST_CASE("check_relations and certify on the rook monoid") {
  // generators: s (transposition), a (partial identity on {2})
  ground_set  g{2, false};
  partial_map s = partial_map::permutation(g, {2, 1});
  partial_map a = partial_map::partial_identity(g, {2});

  presentation p;
  p.add_generator("s1", generator_kind::unit, 0);
  p.add_generator("a", generator_kind::idempotent);
  p.add_relation(relation_family::units, {0, 0}, {});
  p.add_relation(relation_family::idem1, {1, 1}, {1});
  p.add_relation(relation_family::idem3a, {1, 0, 1}, {1, 0, 1, 0});
  p.add_relation(relation_family::iso, {1, 0, 1}, {0, 1, 0, 1});

  auto m = realize({s, a});
  CHECK(m.order() == 7);

  auto rep = check_relations(p, m);
  CHECK(rep.all_ok);
  CHECK(rep.text.find("Units 0 OK") != std::string::npos);
  CHECK(rep.text.find("Idem3a 0 OK") != std::string::npos);

  auto cert = certify(p, m, 10000);
  CHECK(cert.result == verdict::certified);
  CHECK(cert.presented_order == 7);
  CHECK(cert.concrete_order == 7);
  CHECK(cert.text.find("ORDER presented=7 concrete=7 VERDICT=Certified")
        != std::string::npos);

  // negative control: corrupt a relation
  presentation bad = p;
  bad.add_relation(relation_family::iso, {1, 0}, {1});
  auto refuted = certify(bad, m, 10000);
  CHECK(refuted.result == verdict::refuted);
  CHECK(refuted.text.find("FAIL") != std::string::npos);

  // dropping relations leaves a strictly larger presented monoid
  presentation weak;
  weak.add_generator("s1", generator_kind::unit, 0);
  weak.add_generator("a", generator_kind::idempotent);
  weak.add_relation(relation_family::units, {0, 0}, {});
  weak.add_relation(relation_family::idem1, {1, 1}, {1});
  auto weak_tc = todd_coxeter(weak, 100000);
  CHECK((!weak_tc.complete || weak_tc.order > 7));
}

TEST_CASE("certify reports inconclusive on cap") {
  presentation p;
  p.add_generator("x", generator_kind::unit);
  concrete_monoid m;
  m.cayley = {{0}};
  auto cert = certify(p, m, 10);
  CHECK(cert.result == verdict::inconclusive);
  CHECK(cert.text.find("VERDICT=Inconclusive") != std::string::npos);
}

TEST_CASE("default_cap and REFMON_CAP") {
  unsetenv("REFMON_CAP");
  CHECK(default_cap() == 1000000);
  setenv("REFMON_CAP", "1234", 1);
  CHECK(default_cap() == 1234);
  unsetenv("REFMON_CAP");
}

TEST_CASE("brute_orbits matches Burnside counts") {
  CHECK(brute_orbits(2, 2).count == 10);  // (16 + 4) / 2
  CHECK(brute_orbits(1, 1).count == 2);
  CHECK(brute_orbits(3, 1).count == 4);  // orbits of subsets by size
}

TEST_CASE("brute_independent agrees with the Boolean rule") {
  // every set of Boolean atoms is independent
  CHECK(brute_independent({lattice_family::boolean, 3}).size() == 8);
  // partition triangle is dependent
  auto indep = brute_independent({lattice_family::partition, 3});
  CHECK(indep.size() == 7);  // all 8 subsets except the full triangle
}
