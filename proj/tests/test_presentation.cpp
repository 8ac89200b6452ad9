//
// refmon - tests for presentation canonicalization and serialization.
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "refmon/presentation.hpp"

using namespace refmon;

namespace {

  presentation sample() {
    presentation p;
    p.family = "sample";
    p.params = {3};
    p.add_generator("s1", generator_kind::unit, 0);
    p.add_generator("a1", generator_kind::idempotent);
    p.add_generator("a2", generator_kind::idempotent);
    return p;
  }

}  // namespace

TEST_CASE("presentation: canonicalization and deduplication") {
  presentation p = sample();
  CHECK(p.add_relation(relation_family::idem1, {1, 1}, {1}));
  // same relation again, idempotent sides in any order
  CHECK(!p.add_relation(relation_family::idem1, {1}, {1, 1}));
  // commutation relations survive even though their sorted keys coincide
  CHECK(p.add_relation(relation_family::idem2, {1, 2}, {2, 1}));
  CHECK(!p.add_relation(relation_family::idem2, {2, 1}, {1, 2}));
  // an Idem3-style duplicate modulo commutativity is dropped
  CHECK(p.add_relation(relation_family::idem3, {1, 2}, {1, 2, 2}));
  CHECK(!p.add_relation(relation_family::idem3, {2, 1}, {2, 1, 2}));
  // literal x = x is dropped
  CHECK(!p.add_relation(relation_family::units, {0, 1}, {0, 1}));
  // mixed words are not sorted
  CHECK(p.add_relation(relation_family::ref_idem, {0, 1}, {1, 0}));
  CHECK(p.relations.size() == 4);
  CHECK_THROWS_AS(p.canonicalize({7}), std::invalid_argument);
}

TEST_CASE("presentation: text serialization") {
  presentation p = sample();
  p.add_relation(relation_family::units, {0, 0}, {});
  p.add_relation(relation_family::idem1, {1, 1}, {1});
  std::string text = to_text(p);
  CHECK(text == "generators: s1 a1 a2\n"
                "1 = s1 s1\n"
                "a1 = a1 a1\n");
  // text output depends only on generators and relations, not metadata
  presentation q = p;
  q.family       = "other";
  q.params       = {42};
  CHECK(to_text(q) == text);
}

TEST_CASE("presentation: json round trip") {
  presentation p = sample();
  p.add_relation(relation_family::units, {0, 0}, {});
  p.add_relation(relation_family::iso, {1, 0}, {1});
  presentation q = presentation_from_json(to_json(p));
  CHECK(q == p);
  CHECK(q.relations[1].family == relation_family::iso);
}

TEST_CASE("presentation: gap output") {
  presentation p = sample();
  p.add_relation(relation_family::units, {0, 0}, {});
  std::string g = to_gap(p);
  CHECK(g.find("FreeMonoid(\"s1\", \"a1\", \"a2\")") != std::string::npos);
  CHECK(g.find("[One(F), s1*s1]") != std::string::npos);
  CHECK(g.find("M := F / rels;;") != std::string::npos);
}

TEST_CASE("presentation: relation family names round trip") {
  for (auto f : {relation_family::units, relation_family::idem1,
                 relation_family::idem2, relation_family::idem3,
                 relation_family::idem3a, relation_family::ref_idem,
                 relation_family::iso, relation_family::reduced}) {
    CHECK(relation_family_from_string(to_string(f)) == f);
  }
  CHECK_THROWS_AS(relation_family_from_string("nope"), std::invalid_argument);
}
