//
// refmon - presentations of the reflection and Renner monoids: the general
// six-family pipeline over any system, and the closed forms with their
// explicit word constructors.
//

#ifndef REFMON_REFMON_PRESENT_HPP_
#define REFMON_REFMON_PRESENT_HPP_

#include "refmon/monoid_system.hpp"
#include "refmon/presentation.hpp"
#include "refmon/verify.hpp"

namespace refmon {

  enum class present_mode {
    full,    // intermediate presentation: every atom a generator, relations
             // over all atoms, pairs, tuples and all (element, reflection)
             // isotropy pairs
    thinned  // orbit representatives only, conjugates written as words
  };

  // The six-family presentation of M(W, S): Units, Idem1, Idem2,
  // Idem3/Idem3a (Idem3a on the geometric arrangement lattices), RefIdem and
  // Iso.  Generator order: the Coxeter generators, then the idempotent
  // generators.
  presentation present_general(system_kind const& kind, present_mode mode);

  // Closed forms ///////////////////////////////////////////////////////////

  // Boolean reflection monoids: type A (the Popova presentation), B, D.
  // A and B need n >= 2, D needs n >= 4.
  presentation present_boolean(coxeter_type type, int n);

  // Reflection-arrangement monoids.  The boxed closed forms need n >= 4
  // for all three types; types A and B fall back to present_general
  // (thinned) for n in {2, 3}, type D throws below 4.
  presentation present_arrangement(coxeter_type type, int n);

  enum class renner_family {
    general_linear,   // rook monoid, n >= 2
    symplectic,       // ell >= 2
    orthogonal_odd,   // ell >= 2, same presentation as symplectic
    orthogonal_even,  // ell >= 4
    solomon           // n >= 3
  };
  std::string to_string(renner_family f);

  // Renner monoid presentations; param is n for general_linear/solomon and
  // ell otherwise.  general_linear is relation-for-relation the Boolean
  // type A closed form; orthogonal_odd is byte-identical to symplectic.
  presentation present_renner(renner_family f, int param);

  // The concrete system presented by each Renner family.
  system_kind renner_system(renner_family f, int param);

  // Word constructors //////////////////////////////////////////////////////
  //
  // All words use the generator indexing of the corresponding closed-form
  // presentation: Coxeter generators first (s1.. for type A, s0.. for B/D),
  // then the idempotent generators in declaration order.

  // Boolean alpha_i = (s_{i-1}..s_1) a (s_1..s_{i-1}), 1 <= i <= n.
  word boolean_alpha(coxeter_type type, int n, int i);

  // Arrangement alpha_ij (all types), delta_ij (types B and D) and
  // epsilon_i (type B), 1 <= i < j <= n.
  word arrangement_alpha(coxeter_type type, int n, int i, int j);
  word arrangement_delta(coxeter_type type, int n, int i, int j);
  word arrangement_epsilon(int n, int i);

  // alpha(I) for the symplectic / odd-orthogonal (sign-change conjugates)
  // and even-orthogonal (double-sign-change conjugates) schemes; I is a
  // subset of {1..ell}.
  word renner_alpha(renner_family f, int ell, std::vector<int> I);

  // alpha_J = w_J a_{|J|} w_J^{-1} for the Solomon family; J a proper
  // nonempty subset of {1..n}.
  word solomon_alpha(int n, std::vector<int> J);

  // Evaluation bridge //////////////////////////////////////////////////////

  // The image of each presentation generator in the concrete monoid, via
  // the unit_index / atom payloads.
  std::vector<monoid_element> generator_images(presentation const& p,
                                               monoid_system const& sys);

  // The concrete monoid seen through the presentation's generators: the
  // closure of the generator images, as a right-multiplication table.
  concrete_monoid realize(presentation const& p,
                          system_kind const&  kind,
                          size_t              cap = default_cap());

  // The atom of a lattice kind with the given lattice_atom_name.
  lattice_element atom_named(lattice_kind const& kind,
                             std::string const&  name);

}  // namespace refmon
#endif  // REFMON_REFMON_PRESENT_HPP_
