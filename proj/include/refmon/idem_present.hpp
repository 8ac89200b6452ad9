//
// refmon - presentations of the idempotent lattices: general graded-atomic,
// simple-polytope, geometric (minimal-dependence) and the reduced graphical
// arrangement presentations.
//

#ifndef REFMON_IDEM_PRESENT_HPP_
#define REFMON_IDEM_PRESENT_HPP_

#include "refmon/coxeter.hpp"
#include "refmon/lattice.hpp"
#include "refmon/presentation.hpp"

namespace refmon {

  // A short, serialization-friendly name for an atom ("a12", "b12", "e1",
  // "o13", "p2", ...), unique within its kind at desk scale.
  std::string lattice_atom_name(lattice_kind const&    kind,
                                lattice_element const& atom);

  // Generators = atoms; relations a^2 = a, ab = ba, and a_1...a_k =
  // a_1...a_k b for every independent set {a_1..a_k} (k <= rk E) and every
  // atom b below its join and not among the a_i.
  presentation present_graded_atomic(lattice_kind const& kind);

  // Simple polytopes only (simplex, cube, permutohedron): the Idem3
  // relations degenerate to pairs of facets joining to the empty face.
  presentation present_simple_polytope(lattice_kind const& kind);

  // Geometric kinds (partition, coupled_t, coupled_to): Idem1, Idem2 and for
  // each minimally dependent {a_1..a_k} the chain of k-1 equalities between
  // the k single-deletion products (Idem3a).
  presentation present_geometric(lattice_kind const& kind);

  // The octahedron closed form: Idem3 instances from the independent-tuple
  // construction, 2 <= k <= d.  Delegates to present_graded_atomic for
  // d < 3.
  presentation present_octahedron(int d);

  // Reduced graphical presentations of the arrangement lattices: type A on
  // Pi(n), type B on T(n), type D on T°(n).  Every emitted relation is
  // checked sound against the lattice at generation time.
  presentation present_arrangement_reduced(coxeter_type type, int n);

}  // namespace refmon
#endif  // REFMON_IDEM_PRESENT_HPP_
