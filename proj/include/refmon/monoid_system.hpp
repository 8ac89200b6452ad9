//
// refmon - concrete factorizable inverse monoids M(W, S): systems of
// subspaces/intervals acted on by a Weyl group, elements as
// (domain, canonical coset representative) pairs, multiplication,
// isotropy tests and Iso-pair computation.
//

#ifndef REFMON_MONOID_SYSTEM_HPP_
#define REFMON_MONOID_SYSTEM_HPP_

#include "refmon/coxeter.hpp"
#include "refmon/lattice.hpp"
#include "refmon/partial_map.hpp"

namespace refmon {

  enum class system_category {
    boolean_sys,        // coordinate-subspace system, Boolean lattice
    arrangement_sys,    // reflection-arrangement intersection lattice
    octa_sys,           // cross-polytope face intervals (type B or D group)
    permutohedron_sys,  // permutohedron face intervals (type A group)
  };

  struct system_kind {
    system_category category = system_category::boolean_sys;
    coxeter_type    type     = coxeter_type::A;
    int             n        = 2;

    bool operator==(system_kind const& that) const {
      return category == that.category && type == that.type && n == that.n;
    }
  };

  // The idempotent lattice of the system.
  lattice_kind system_lattice(system_kind const& kind);
  // Rank of the acting group W in the coxeter module's conventions.
  int system_group_rank(system_kind const& kind);
  std::string to_string(system_kind const& kind);

  // True iff g acts as the identity on the subspace (Boolean/arrangement
  // systems, via a symbolic generic point) or fixes every element of the
  // upward interval above x (octahedron/permutohedron systems).
  bool fixes_pointwise(system_kind const&     kind,
                       lattice_element const& x,
                       signed_perm const&     g);

  // All reflections of W as signed permutations, deterministic order.
  std::vector<signed_perm> reflections(coxeter_type type, int n);

  // The reflections t with fixes_pointwise(kind, e, t).
  std::vector<signed_perm> fixed_hyperplane_atoms(system_kind const&     kind,
                                                  lattice_element const& e);

  // An element e_X g: domain X and group part the canonical (minimal)
  // representative of the coset W_X g.
  struct monoid_element {
    lattice_element domain;
    signed_perm     unit;

    bool operator==(monoid_element const& that) const {
      return domain == that.domain && unit == that.unit;
    }
    bool operator<(monoid_element const& that) const {
      if (!(domain == that.domain)) {
        return domain < that.domain;
      }
      return unit < that.unit;
    }
  };

  // Shared context: the lattice, the group and the isotropy subgroups.
  class monoid_system {
   public:
    explicit monoid_system(system_kind const& kind);

    system_kind const&  kind() const { return _kind; }
    lattice_kind const& lattice() const { return _lattice; }
    group_data const&   group() const { return _group; }
    std::vector<lattice_element> const& lattice_elements() const {
      return _elements;
    }

    // W_X as indices into group().elements.
    std::vector<int> const& isotropy(lattice_element const& x) const;

    monoid_element one() const;
    monoid_element unit(signed_perm const& g) const;
    monoid_element idempotent(lattice_element const& x) const;
    monoid_element canonical(lattice_element const& x,
                             signed_perm const&     g) const;
    // e_X g * e_Y h = e_Z (gh) with Z = X v Y.g^{-1}.
    monoid_element multiply(monoid_element const& a,
                            monoid_element const& b) const;

    // (minimal e, generator index s) pairs: for each reflection-orbit
    // representative generator s, the minimal lattice elements e whose
    // isotropy contains s.
    std::vector<std::pair<lattice_element, int>> iso_pairs() const;

   private:
    system_kind                    _kind;
    lattice_kind                   _lattice;
    group_data                     _group;
    std::vector<lattice_element>   _elements;
    std::map<lattice_element, int> _index;
    std::vector<std::vector<int>>  _isotropy;
  };

  // Breadth-first closure of the monoid generated by the given elements,
  // with the identity adjoined; identical contract to the partial-map
  // version.
  enumerated_monoid<monoid_element>
  enumerate_closure(monoid_system const&               sys,
                    std::vector<monoid_element> const& generators,
                    size_t                             cap);

  // The full monoid M(W, S), generated by the group generators and the atom
  // idempotents.
  enumerated_monoid<monoid_element> enumerate_system(system_kind const& kind,
                                                     size_t             cap);

}  // namespace refmon
#endif  // REFMON_MONOID_SYSTEM_HPP_
