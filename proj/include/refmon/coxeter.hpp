//
// refmon - Weyl groups of types A, B, D as (signed) permutation groups:
// generators, words, actions on lattice elements, orbits with witness words,
// and characteristic-map enumeration.
//

#ifndef REFMON_COXETER_HPP_
#define REFMON_COXETER_HPP_

#include <map>
#include <string>
#include <vector>

#include "refmon/lattice.hpp"
#include "refmon/presentation.hpp"

namespace refmon {

  enum class coxeter_type { A, B, D };

  // A (signed) permutation of 1..n; img[i-1] is the image of i, in 1..n for
  // type A elements and in +/-1..+/-n otherwise.
  struct signed_perm {
    std::vector<int> img;

    int n() const { return static_cast<int>(img.size()); }
    int apply(int x) const { return x > 0 ? img[x - 1] : -img[-x - 1]; }

    bool operator==(signed_perm const& that) const { return img == that.img; }
    bool operator!=(signed_perm const& that) const { return !(*this == that); }
    // total order used for coset canonicalization: lexicographic on
    // (magnitude, sign) per position, signs after magnitudes
    bool operator<(signed_perm const& that) const;
  };

  signed_perm sp_identity(int n);
  signed_perm sp_multiply(signed_perm const& g, signed_perm const& h);
  signed_perm sp_inverse(signed_perm const& g);
  bool        sp_even_signed(signed_perm const& g);  // even # of sign changes
  std::string to_string(signed_perm const& g);

  // Coxeter generators, ordered s0 (types B and D only), s1, ..., s_{n-1}.
  std::vector<signed_perm> generators(coxeter_type type, int n);

  // m[i][j] = order of s_i s_j over the generator list above.
  std::vector<std::vector<int>> coxeter_matrix(coxeter_type type, int n);

  // Product of generators left-to-right; the empty word is the identity.
  signed_perm evaluate_word(word const& w, coxeter_type type, int n);

  // The whole group in breadth-first order with a witness word per element.
  struct group_data {
    std::vector<signed_perm>   elements;  // identity first
    std::vector<word>          words;
    std::map<signed_perm, int> index;
  };
  group_data enumerate_group(coxeter_type type, int n);

  // Action of a (signed) permutation on a lattice element; supported for
  // boolean, simplex_face, octa_face, permutohedron, partition, coupled_t
  // and coupled_to payloads.
  lattice_element act(lattice_kind const&    kind,
                      lattice_element const& x,
                      signed_perm const&     g);

  // Orbit representatives of W on the atoms, with a breadth-first witness
  // word per atom: a = act(rep_of[a], evaluate_word(witness[a])), the word
  // being empty on representatives.
  struct atom_orbit_data {
    std::vector<lattice_element>               reps;
    std::map<lattice_element, lattice_element> rep_of;
    std::map<lattice_element, word>            witness;
  };
  atom_orbit_data orbit_reps(coxeter_type        type,
                             int                 n,
                             lattice_kind const& kind);

  // Orbit representatives of W on k-element sets of atoms, each orbit
  // represented by its minimal sorted member.
  std::vector<std::vector<lattice_element>> orbit_reps_k(
      coxeter_type type, int n, lattice_kind const& kind, int k);

  // Characteristic maps //////////////////////////////////////////////////
  //
  // A characteristic map on Y = {1..k} with values in [0, ell] classifies
  // the S_ell-orbits on k-tuples of subsets of {1..ell}.  values[mask] is
  // the value on the subset of Y encoded by mask; values[0] is the value on
  // the empty set, determined by the others.

  struct char_map {
    int              k   = 0;
    int              ell = 0;
    std::vector<int> values;

    bool operator==(char_map const& that) const {
      return k == that.k && ell == that.ell && values == that.values;
    }
    bool operator<(char_map const& that) const { return values < that.values; }
  };

  // All characteristic maps, exhaustive, duplicate-free, sorted.
  std::vector<char_map> char_maps(int ell, int k);

  // A tuple (J_1..J_k) of subsets of {1..ell} whose characteristic map is f,
  // by the greedy box construction (largest index sets first, ties
  // lexicographic).
  std::vector<std::vector<int>> realize_tuple(char_map const& f);

  // The characteristic map of an arbitrary tuple.
  char_map char_map_of(std::vector<std::vector<int>> const& tuple, int ell);

  // One generator index per orbit of reflections (components of the Coxeter
  // symbol after dropping even-labeled edges); type D uses s1 as the chosen
  // representative.
  std::vector<int> hyperplane_orbit_reps(coxeter_type type, int n);

}  // namespace refmon
#endif  // REFMON_COXETER_HPP_
