//
// refmon - the classical-monoid dictionary: family metadata, the
// polytope/face-lattice correspondences, the diagonal-idempotent index
// bookkeeping behind the zeta isomorphisms, and the permutohedron vertex
// construction for the Solomon family.
//

#ifndef REFMON_RENNER_DATA_HPP_
#define REFMON_RENNER_DATA_HPP_

#include "refmon/monoid_system.hpp"
#include "refmon/refmon_present.hpp"

namespace refmon {

  // One row of the classical-monoid table: the monoid, its Weyl type, the
  // polytope whose face lattice is the idempotent lattice, and the
  // combinatorial system realizing the Renner monoid.
  struct classical_family {
    renner_family   name;
    std::string     label;     // display name of the algebraic monoid
    std::string     group;     // the underlying semisimple group
    coxeter_type    weyl;      // Weyl group type of the acting group
    lattice_family  polytope;  // face-lattice family of the polytope P
    system_category system;    // system whose M(W, S) is the Renner monoid
  };

  // The five rows, in the table's order: general linear, odd orthogonal,
  // symplectic, even orthogonal, Solomon's example.
  std::vector<classical_family> const& classical_table();
  classical_family const&              classical_row(renner_family name);

  // The system presenting the family's Renner monoid; param is n for
  // general_linear/solomon, ell otherwise.
  system_kind family_system(renner_family name, int param);

  // The face lattice F(P) of the family's polytope at this parameter.
  lattice_kind family_polytope(renner_family name, int param);

  // Index bookkeeping for zeta //////////////////////////////////////////////
  //
  // The diagonal idempotents e(K) of the orthogonal/symplectic torus
  // closures are recorded by their index sets inside {1..2*ell} (or
  // {1..2*ell+1} with the fixed middle column, odd case): positive i maps
  // to column i, negative i to column 2*ell+1+i (odd: 2*ell+2+i).

  // Sorted column set of a signed subset of +/-{1..ell}.
  std::vector<int> eta_image(std::vector<int> const& J, int ell, bool odd);

  // The signed permutation as a permutation of the columns; result[c-1] is
  // the image of column c.
  std::vector<int> theta_perm(signed_perm const& g, bool odd);

  // zeta of an octahedron-lattice element: the column set of e(K); the
  // whole-polytope bottom maps to the full column set (the identity).
  std::vector<int> octa_zeta(lattice_kind const&    lat,
                             lattice_element const& x,
                             bool                   odd);

  // Correspondence checks ///////////////////////////////////////////////////

  // zeta is a poset isomorphism: x <= y iff zeta(x) contains zeta(y),
  // checked on every pair of lattice elements.
  bool octa_zeta_isomorphism(int ell, bool odd);

  // zeta is equivariant: zeta(x . g) is the theta(g)-image of zeta(x),
  // checked on every atom against every element of W.
  bool octa_zeta_equivariant(int ell, coxeter_type type, bool odd);

  // The Boolean lattice on {1..n} and the face lattice of the
  // (n-1)-simplex coincide element-by-element (same canonical payloads,
  // same order relation).
  bool boolean_simplex_isomorphic(int n);

  // Solomon vertex construction /////////////////////////////////////////////
  //
  // Sigma is the set of tuples tau = (J_1..J_{n-1}) of subsets of {1..n}
  // with |J_i| = i; v_tau counts, per coordinate j, the number of J_i
  // containing j.  The convex hull of the v_tau is the (n-1)-permutohedron
  // with parameters 0..n-1.

  struct solomon_report {
    size_t sigma_size      = 0;      // number of tuples tau
    bool   inequalities_ok = false;  // every v_tau satisfies the descending
                                     // prefix bounds (n-1)+...+(n-k)
    bool   base_vertex_ok  = false;  // the complemented nested tuple gives
                                     // (0, 1, ..., n-1)
    bool   vertex_orbit_ok = false;  // the permutations of (0..n-1) are
                                     // exactly the realized extreme points
  };

  // Exhaustive check, 2 <= n <= 5.
  solomon_report solomon_vertex_check(int n);

}  // namespace refmon
#endif  // REFMON_RENNER_DATA_HPP_
