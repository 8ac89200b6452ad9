//
// refmon - the nine concrete finite graded atomic join-semilattices:
// Boolean subsets, faces of the simplex / polygon / cube / octahedron /
// permutohedron, the partition lattice, and the coupled-partition models of
// the type B and D intersection lattices.
//

#ifndef REFMON_LATTICE_HPP_
#define REFMON_LATTICE_HPP_

#include <string>
#include <vector>

namespace refmon {

  enum class lattice_family {
    boolean,        // subsets of {1..n}, reverse inclusion
    simplex_face,   // faces of the d-simplex
    polygon_face,   // faces of the m-gon
    cube_face,      // faces of the d-cube (admissible subsets of +/-X)
    octa_face,      // faces of the d-octahedron
    permutohedron,  // faces of the d-permutohedron (partial orientations)
    partition,      // partition lattice Pi(n)
    coupled_t,      // coupled partitions (type B intersection lattice)
    coupled_to      // coupled partitions with |Delta| != 1 (type D)
  };

  struct lattice_kind {
    lattice_family family;
    int            param;  // n, d or m as appropriate

    bool operator==(lattice_kind const& that) const {
      return family == that.family && param == that.param;
    }
  };

  // One element of any of the families, in canonical form.  The payload is a
  // list of integer rows whose meaning depends on the family:
  //  * boolean / simplex_face / polygon_face: one row, the (vertex) subset;
  //  * cube_face / octa_face: one row, the admissible signed subset;
  //  * permutohedron: one row of length 2 per oriented edge (from, to);
  //  * partition: the blocks, sorted by minimum (singletons included);
  //  * coupled_t / coupled_to: row 0 is Delta, then the blocks of the coupled
  //    partition as signed rows (negatives = second part of a coupled block),
  //    sorted by minimum absolute value, smallest absolute value positive.
  // The extreme flag marks the formal extreme element: the empty face of the
  // cube, the whole polytope (bottom) of the octahedron, and the top 1 of the
  // permutohedron lattice.
  struct lattice_element {
    std::vector<std::vector<int>> data;
    bool                          extreme = false;

    bool operator==(lattice_element const& that) const {
      return extreme == that.extreme && data == that.data;
    }
    bool operator!=(lattice_element const& that) const {
      return !(*this == that);
    }
    bool operator<(lattice_element const& that) const {
      if (extreme != that.extreme) {
        return !extreme;  // non-extreme payloads order first
      }
      return data < that.data;
    }
  };

  // Basic lattice operations ///////////////////////////////////////////////

  lattice_element bottom(lattice_kind const& kind);
  lattice_element join(lattice_kind const&    kind,
                       lattice_element const& x,
                       lattice_element const& y);
  int             rank(lattice_kind const& kind, lattice_element const& x);
  int             max_rank(lattice_kind const& kind);

  // x <= y in the join-semilattice order (bottom is least).
  bool leq(lattice_kind const&    kind,
           lattice_element const& x,
           lattice_element const& y);

  // Meet as the join of all common lower bounds (used by rank submodularity
  // checks only).
  lattice_element meet(lattice_kind const&    kind,
                       lattice_element const& x,
                       lattice_element const& y);

  // All atoms, in lexicographic order on the canonical payload.
  std::vector<lattice_element> atoms(lattice_kind const& kind);

  // Every element, enumerated by breadth-first join closure from the bottom.
  std::vector<lattice_element> elements(lattice_kind const& kind);

  // Independence machinery /////////////////////////////////////////////////

  bool is_independent(lattice_kind const&                 kind,
                      std::vector<lattice_element> const& atom_set);

  // Graph model of an atom set of Pi(n) / T(n) / T°(n): vertices 1..n and
  // edges tagged (a) plain i-j, (b) double i-j, (c) loop at i.
  enum class edge_tag { a, b, c };
  struct atom_graph_edge {
    int      i;
    int      j;  // j == i for loops
    edge_tag tag;
  };
  struct atom_graph {
    int                          n;
    std::vector<atom_graph_edge> edges;
  };

  atom_graph make_atom_graph(lattice_kind const&                 kind,
                             std::vector<lattice_element> const& atom_set);

  // Independence read off from the graph (forest / (B1)-(B2) / (D1)-(D2)).
  bool graph_independent(lattice_kind const& kind, atom_graph const& g);

  // Structural match against the minimal-dependence classification
  // (circuits; even circuits; paths joining loops and odd circuits).
  bool graph_minimally_dependent(lattice_kind const& kind, atom_graph const& g);

  // All minimally dependent atom sets of a geometric kind, via the graph
  // classification; throws for other kinds.
  std::vector<std::vector<lattice_element>>
  minimally_dependent_sets(lattice_kind const& kind);

  // Permutohedron and octahedron specifics /////////////////////////////////

  // Ordered partition (Lambda_1,...,Lambda_p) of an admissible orientation.
  std::vector<std::vector<int>>
  orientation_to_ordered_partition(lattice_kind const&    kind,
                                   lattice_element const& o);

  // The independent k-tuples of octahedron atoms, by the base-set/option
  // construction; sorted and duplicate-free.  1 <= k <= d, d >= 3.
  std::vector<std::vector<lattice_element>> octahedron_independent_k(int d,
                                                                     int k);

  // Serialization //////////////////////////////////////////////////////////

  std::string to_string(lattice_kind const& kind, lattice_element const& x);
  std::string to_string(lattice_kind const& kind);

}  // namespace refmon
#endif  // REFMON_LATTICE_HPP_
