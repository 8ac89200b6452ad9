//
// refmon - certification: relation soundness by evaluation, presented-monoid
// order by bounded congruence enumeration, and brute-force oracles.
//

#ifndef REFMON_VERIFY_HPP_
#define REFMON_VERIFY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "refmon/coxeter.hpp"
#include "refmon/lattice.hpp"
#include "refmon/presentation.hpp"

namespace refmon {

  // Default congruence/closure cap: 10^6, overridable through the
  // REFMON_CAP environment variable.
  size_t default_cap();

  // Result of a bounded monoid congruence enumeration.
  struct congruence_result {
    bool   complete = false;
    size_t order    = 0;  // number of classes, valid when complete
  };

  // Deterministic HLT-style congruence enumeration over the presentation's
  // free monoid: classes are processed in creation order, every relation is
  // traced at every class (filling the table as it goes), coincidences keep
  // the smaller class index, and passes repeat until nothing changes.  When
  // complete, order is the order of the presented monoid-with-identity.
  congruence_result todd_coxeter(presentation const& p, size_t cap);

  // A concrete monoid seen through the presentation's generators: a total
  // right-multiplication table whose columns are the presentation's
  // generators, with class 0 the identity.
  struct concrete_monoid {
    std::vector<std::vector<int>> cayley;  // cayley[element][generator]

    size_t order() const { return cayley.size(); }
    int    evaluate(word const& w) const;  // element of a word, from 1
  };

  struct relation_report {
    std::vector<bool> ok;  // per relation, in presentation order
    bool              all_ok = true;
    std::string       text;  // one line per relation: FAMILY idx OK|FAIL
  };
  relation_report check_relations(presentation const&    p,
                                  concrete_monoid const& m);

  enum class verdict { certified, refuted, inconclusive };
  std::string to_string(verdict v);

  struct certify_report {
    verdict     result = verdict::inconclusive;
    bool        presented_known = false;
    size_t      presented_order = 0;
    size_t      concrete_order  = 0;
    std::string text;  // relation lines + ORDER/VERDICT summary line
  };

  // Certified iff every relation holds in m and the presented order equals
  // the concrete order; refuted if a relation fails or the orders differ;
  // inconclusive if the congruence enumeration hits the cap.
  certify_report certify(presentation const&    p,
                         concrete_monoid const& m,
                         size_t                 cap = default_cap());

  // Oracles (test plumbing) ////////////////////////////////////////////////

  // Orbits of the symmetric group S_n on ordered k-tuples of subsets of
  // {1..n}: count plus the lexicographically minimal representative of each
  // orbit.
  struct orbit_oracle {
    size_t                                     count = 0;
    std::vector<std::vector<std::vector<int>>> reps;
  };
  orbit_oracle brute_orbits(int n, int k);

  // All independent atom subsets of a lattice kind, straight from the
  // definition.
  std::vector<std::vector<lattice_element>>
  brute_independent(lattice_kind const& kind);

}  // namespace refmon
#endif  // REFMON_VERIFY_HPP_
