//
// refmon - the concrete idempotent lattices.
//

#include "refmon/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace refmon {

  namespace {

    [[noreturn]] void bad_kind(char const* where) {
      throw std::invalid_argument(std::string(where) + ": unsupported kind");
    }

    void check_params(lattice_kind const& kind) {
      int p = kind.param;
      switch (kind.family) {
        case lattice_family::boolean:
        case lattice_family::simplex_face:
        case lattice_family::cube_face:
        case lattice_family::partition:
        case lattice_family::coupled_t:
        case lattice_family::coupled_to:
          if (p < 1) {
            throw std::invalid_argument("lattice: parameter must be >= 1");
          }
          break;
        case lattice_family::octa_face:
          if (p < 1) {
            throw std::invalid_argument("lattice: parameter must be >= 1");
          }
          break;
        case lattice_family::permutohedron:
          if (p < 1) {
            throw std::invalid_argument("lattice: parameter must be >= 1");
          }
          break;
        case lattice_family::polygon_face:
          if (p < 3) {
            throw std::invalid_argument("polygon: need m >= 3");
          }
          break;
      }
    }

    std::vector<int> sorted(std::vector<int> v) {
      std::sort(v.begin(), v.end());
      return v;
    }

    std::vector<int> sorted_by_abs(std::vector<int> v) {
      std::sort(v.begin(), v.end(), [](int x, int y) {
        return std::abs(x) < std::abs(y);
      });
      return v;
    }

    bool admissible(std::vector<int> const& signed_set) {
      std::set<int> s(signed_set.begin(), signed_set.end());
      for (int x : s) {
        if (s.count(-x)) {
          return false;
        }
      }
      return true;
    }

    lattice_element one_row(std::vector<int> row) {
      lattice_element e;
      e.data.push_back(std::move(row));
      return e;
    }

    lattice_element extreme_element() {
      lattice_element e;
      e.extreme = true;
      return e;
    }

    // Permutohedron helpers //////////////////////////////////////////////
    //
    // An admissible partial orientation of the edges of the n-simplex on
    // vertices {1..d+1} is the same thing as a strict weak order, i.e. an
    // ordered partition of the vertex set.  Elements store the arc list.

    // Returns the ordered partition of an arc set, or an empty list if the
    // arc set is not admissible.
    std::vector<std::vector<int>>
    arcs_to_ordered_partition(int d, std::vector<std::vector<int>> const& arcs) {
      int                        n = d + 1;
      std::set<std::pair<int, int>> arc_set;
      for (auto const& a : arcs) {
        arc_set.emplace(a[0], a[1]);
      }
      for (auto const& [u, v] : arc_set) {
        if (arc_set.count({v, u})) {
          return {};
        }
      }
      // incomparability classes
      std::vector<int> cls(n + 1, -1);
      int              ncls = 0;
      for (int i = 1; i <= n; ++i) {
        if (cls[i] != -1) {
          continue;
        }
        cls[i] = ncls;
        for (int j = 1; j <= n; ++j) {
          if (cls[j] == -1 && !arc_set.count({i, j}) && !arc_set.count({j, i})) {
            cls[j] = ncls;
          }
        }
        ++ncls;
      }
      // all cross-class pairs must be oriented, consistently per class pair
      std::map<std::pair<int, int>, int> dir;  // (min cls, max cls) -> +1/-1
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          bool ij = arc_set.count({i, j}) > 0, ji = arc_set.count({j, i}) > 0;
          if (cls[i] == cls[j]) {
            if (ij || ji) {
              return {};
            }
            continue;
          }
          if (!ij && !ji) {
            return {};
          }
          int  a = std::min(cls[i], cls[j]), b = std::max(cls[i], cls[j]);
          int  d0 = (cls[i] < cls[j]) == ij ? 1 : -1;
          auto it = dir.find({a, b});
          if (it == dir.end()) {
            dir[{a, b}] = d0;
          } else if (it->second != d0) {
            return {};
          }
        }
      }
      // topological order of classes (tournament from arcs must be transitive)
      std::vector<std::vector<bool>> before(ncls,
                                            std::vector<bool>(ncls, false));
      for (auto const& [u, v] : arc_set) {
        before[cls[u]][cls[v]] = true;
      }
      for (int a = 0; a < ncls; ++a) {
        for (int b = 0; b < ncls; ++b) {
          if (a != b && before[a][b] && before[b][a]) {
            return {};
          }
        }
      }
      std::vector<int> score(ncls, 0);
      for (int a = 0; a < ncls; ++a) {
        for (int b = 0; b < ncls; ++b) {
          if (before[a][b]) {
            ++score[b];
          }
        }
      }
      // sort classes by in-degree and verify the order is total and transitive
      std::vector<int> order(ncls);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return score[a] < score[b]; });
      for (int x = 0; x < ncls; ++x) {
        for (int y = x + 1; y < ncls; ++y) {
          if (!before[order[x]][order[y]] || before[order[y]][order[x]]) {
            return {};
          }
        }
      }
      std::vector<std::vector<int>> blocks(ncls);
      for (int i = 1; i <= n; ++i) {
        blocks[cls[i]].push_back(i);
      }
      std::vector<std::vector<int>> result;
      for (int x = 0; x < ncls; ++x) {
        result.push_back(sorted(blocks[order[x]]));
      }
      return result;
    }

    std::vector<std::vector<int>>
    ordered_partition_to_arcs(std::vector<std::vector<int>> const& blocks) {
      std::vector<std::vector<int>> arcs;
      for (size_t x = 0; x < blocks.size(); ++x) {
        for (size_t y = x + 1; y < blocks.size(); ++y) {
          for (int u : blocks[x]) {
            for (int v : blocks[y]) {
              arcs.push_back({u, v});
            }
          }
        }
      }
      std::sort(arcs.begin(), arcs.end());
      return arcs;
    }

    // Coupled partition helpers //////////////////////////////////////////
    //
    // Joins in T(n) and T°(n) are computed with a union-find on the signed
    // literals +/-1..+/-n, where merging (x, y) always also merges (-x, -y).

    struct literal_uf {
      int              n;
      std::vector<int> parent;  // indices 0..2n-1: +1..+n then -1..-n

      explicit literal_uf(int n) : n(n), parent(2 * n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      int idx(int lit) const { return lit > 0 ? lit - 1 : n - lit - 1; }
      int lit(int i) const { return i < n ? i + 1 : -(i - n + 1); }
      int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
      void unite(int x, int y) {
        int a = find(idx(x)), b = find(idx(y));
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
        a = find(idx(-x)), b = find(idx(-y));
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }

      void absorb(lattice_element const& e) {
        for (int i : e.data[0]) {  // Delta: i ~ -i
          unite(i, -i);
        }
        for (size_t r = 1; r < e.data.size(); ++r) {
          auto const& blk = e.data[r];
          for (size_t t = 1; t < blk.size(); ++t) {
            unite(blk[0], blk[t]);
          }
        }
      }

      lattice_element element() {
        std::vector<int>              delta;
        std::vector<std::vector<int>> blocks;
        std::vector<bool>             used(2 * n, false);
        for (int i = 1; i <= n; ++i) {
          if (find(idx(i)) == find(idx(-i))) {
            delta.push_back(i);
            used[idx(i)] = used[idx(-i)] = true;
          }
        }
        for (int i = 1; i <= n; ++i) {
          if (used[idx(i)]) {
            continue;
          }
          // the block containing +i, signs normalized so that +i is positive
          std::vector<int> blk;
          int              root = find(idx(i));
          for (int j = i; j <= n; ++j) {
            if (used[idx(j)]) {
              continue;
            }
            if (find(idx(j)) == root) {
              blk.push_back(j);
              used[idx(j)] = used[idx(-j)] = true;
            } else if (find(idx(-j)) == root) {
              blk.push_back(-j);
              used[idx(j)] = used[idx(-j)] = true;
            }
          }
          blocks.push_back(sorted_by_abs(blk));
        }
        lattice_element e;
        e.data.push_back(std::move(delta));
        for (auto& b : blocks) {
          e.data.push_back(std::move(b));
        }
        return e;
      }
    };

  }  // namespace

  lattice_element bottom(lattice_kind const& kind) {
    check_params(kind);
    int p = kind.param;
    switch (kind.family) {
      case lattice_family::boolean:
      case lattice_family::simplex_face:
      case lattice_family::polygon_face: {
        // the whole ground set / polytope
        std::vector<int> all(kind.family == lattice_family::simplex_face
                                 ? p + 1
                                 : p);
        std::iota(all.begin(), all.end(), 1);
        return one_row(all);
      }
      case lattice_family::cube_face:
        return one_row({});
      case lattice_family::octa_face:
        return extreme_element();
      case lattice_family::permutohedron:
        return lattice_element{};  // no arcs
      case lattice_family::partition: {
        lattice_element e;
        for (int i = 1; i <= p; ++i) {
          e.data.push_back({i});
        }
        return e;
      }
      case lattice_family::coupled_t:
      case lattice_family::coupled_to: {
        lattice_element e;
        e.data.push_back({});  // empty Delta
        for (int i = 1; i <= p; ++i) {
          e.data.push_back({i});
        }
        return e;
      }
    }
    bad_kind("bottom");
  }

  lattice_element join(lattice_kind const&    kind,
                       lattice_element const& x,
                       lattice_element const& y) {
    check_params(kind);
    int p = kind.param;
    switch (kind.family) {
      case lattice_family::boolean:
      case lattice_family::simplex_face:
      case lattice_family::polygon_face: {
        std::vector<int> z;
        std::set_intersection(x.data[0].begin(), x.data[0].end(),
                              y.data[0].begin(), y.data[0].end(),
                              std::back_inserter(z));
        return one_row(z);
      }
      case lattice_family::cube_face: {
        if (x.extreme || y.extreme) {
          return extreme_element();
        }
        std::set<int> u(x.data[0].begin(), x.data[0].end());
        u.insert(y.data[0].begin(), y.data[0].end());
        std::vector<int> z(u.begin(), u.end());
        if (!admissible(z)) {
          return extreme_element();
        }
        return one_row(sorted_by_abs(z));
      }
      case lattice_family::octa_face: {
        if (x.extreme) {
          return y;
        }
        if (y.extreme) {
          return x;
        }
        std::set<int>    xs(x.data[0].begin(), x.data[0].end());
        std::vector<int> z;
        for (int v : y.data[0]) {
          if (xs.count(v)) {
            z.push_back(v);
          }
        }
        return one_row(sorted_by_abs(z));
      }
      case lattice_family::permutohedron: {
        if (x.extreme || y.extreme) {
          return extreme_element();
        }
        std::set<std::vector<int>> arcs(x.data.begin(), x.data.end());
        arcs.insert(y.data.begin(), y.data.end());
        std::vector<std::vector<int>> all(arcs.begin(), arcs.end());
        auto blocks = arcs_to_ordered_partition(p, all);
        if (blocks.empty()) {
          return extreme_element();
        }
        lattice_element e;
        e.data = ordered_partition_to_arcs(blocks);
        return e;
      }
      case lattice_family::partition: {
        literal_uf uf(p);
        // treat blocks as ordinary blocks of a coupled partition on +X only
        for (auto const& e : {x, y}) {
          for (auto const& blk : e.data) {
            for (size_t t = 1; t < blk.size(); ++t) {
              uf.unite(blk[0], blk[t]);
            }
          }
        }
        lattice_element coupled = uf.element();
        lattice_element result;
        for (size_t r = 1; r < coupled.data.size(); ++r) {
          result.data.push_back(coupled.data[r]);
        }
        return result;
      }
      case lattice_family::coupled_t:
      case lattice_family::coupled_to: {
        literal_uf uf(p);
        uf.absorb(x);
        uf.absorb(y);
        lattice_element z = uf.element();
        if (kind.family == lattice_family::coupled_to
            && z.data[0].size() == 1) {
          throw std::logic_error("coupled_to: join left the lattice");
        }
        return z;
      }
    }
    bad_kind("join");
  }

  int rank(lattice_kind const& kind, lattice_element const& x) {
    check_params(kind);
    int p = kind.param;
    switch (kind.family) {
      case lattice_family::boolean:
        return p - static_cast<int>(x.data[0].size());
      case lattice_family::simplex_face:
        return p + 1 - static_cast<int>(x.data[0].size());
      case lattice_family::polygon_face: {
        size_t s = x.data[0].size();
        if (s == static_cast<size_t>(p)) {
          return 0;
        }
        return s == 2 ? 1 : (s == 1 ? 2 : 3);
      }
      case lattice_family::cube_face:
        return x.extreme ? p + 1 : static_cast<int>(x.data[0].size());
      case lattice_family::octa_face:
        return x.extreme ? 0 : p + 1 - static_cast<int>(x.data[0].size());
      case lattice_family::permutohedron: {
        if (x.extreme) {
          return p + 1;
        }
        auto blocks = orientation_to_ordered_partition(kind, x);
        return static_cast<int>(blocks.size()) - 1;
      }
      case lattice_family::partition: {
        int r = 0;
        for (auto const& blk : x.data) {
          r += static_cast<int>(blk.size()) - 1;
        }
        return r;
      }
      case lattice_family::coupled_t:
      case lattice_family::coupled_to: {
        int r = static_cast<int>(x.data[0].size());
        for (size_t b = 1; b < x.data.size(); ++b) {
          r += static_cast<int>(x.data[b].size()) - 1;
        }
        return r;
      }
    }
    bad_kind("rank");
  }

  int max_rank(lattice_kind const& kind) {
    check_params(kind);
    int p = kind.param;
    switch (kind.family) {
      case lattice_family::boolean:
        return p;
      case lattice_family::simplex_face:
      case lattice_family::cube_face:
      case lattice_family::octa_face:
      case lattice_family::permutohedron:
        return p + 1;
      case lattice_family::polygon_face:
        return 3;
      case lattice_family::partition:
        return p - 1;
      case lattice_family::coupled_t:
        return p;
      case lattice_family::coupled_to:
        return p;
    }
    bad_kind("max_rank");
  }

  bool leq(lattice_kind const&    kind,
           lattice_element const& x,
           lattice_element const& y) {
    return join(kind, x, y) == y;
  }

  lattice_element meet(lattice_kind const&    kind,
                       lattice_element const& x,
                       lattice_element const& y) {
    lattice_element m = bottom(kind);
    for (auto const& z : elements(kind)) {
      if (leq(kind, z, x) && leq(kind, z, y) && leq(kind, m, z)) {
        m = z;
      }
    }
    return m;
  }

  std::vector<lattice_element> atoms(lattice_kind const& kind) {
    check_params(kind);
    int                          p = kind.param;
    std::vector<lattice_element> result;
    switch (kind.family) {
      case lattice_family::boolean:
      case lattice_family::simplex_face: {
        int n = kind.family == lattice_family::boolean ? p : p + 1;
        for (int i = 1; i <= n; ++i) {
          std::vector<int> s;
          for (int j = 1; j <= n; ++j) {
            if (j != i) {
              s.push_back(j);
            }
          }
          result.push_back(one_row(s));
        }
        break;
      }
      case lattice_family::polygon_face: {
        for (int i = 1; i <= p; ++i) {
          result.push_back(one_row(sorted({i, i % p + 1})));
        }
        break;
      }
      case lattice_family::cube_face: {
        for (int i = 1; i <= p; ++i) {
          result.push_back(one_row({i}));
          result.push_back(one_row({-i}));
        }
        break;
      }
      case lattice_family::octa_face: {
        // a(J) = J union -(X minus J), the 2^p facets
        for (int mask = 0; mask < (1 << p); ++mask) {
          std::vector<int> s;
          for (int i = 1; i <= p; ++i) {
            s.push_back((mask >> (i - 1)) & 1 ? i : -i);
          }
          result.push_back(one_row(sorted_by_abs(s)));
        }
        break;
      }
      case lattice_family::permutohedron: {
        // O_J for every proper nonempty J of {1..p+1}
        int n = p + 1;
        for (int mask = 1; mask < (1 << n) - 1; ++mask) {
          std::vector<int> j, rest;
          for (int i = 1; i <= n; ++i) {
            ((mask >> (i - 1)) & 1 ? j : rest).push_back(i);
          }
          lattice_element e;
          e.data = ordered_partition_to_arcs({rest, j});
          result.push_back(e);
        }
        break;
      }
      case lattice_family::partition: {
        for (int i = 1; i <= p; ++i) {
          for (int j = i + 1; j <= p; ++j) {
            lattice_element e = bottom(kind);
            e.data.erase(std::remove_if(e.data.begin(), e.data.end(),
                                        [&](auto const& b) {
                                          return b[0] == i || b[0] == j;
                                        }),
                         e.data.end());
            e.data.push_back({i, j});
            std::sort(e.data.begin(), e.data.end());
            result.push_back(e);
          }
        }
        break;
      }
      case lattice_family::coupled_t:
      case lattice_family::coupled_to: {
        auto make = [&](std::vector<int> delta, std::vector<int> block) {
          lattice_element e = bottom(kind);
          e.data[0]         = delta;
          e.data.erase(std::remove_if(e.data.begin() + 1, e.data.end(),
                                      [&](auto const& b) {
                                        int v = std::abs(b[0]);
                                        for (int x : delta) {
                                          if (x == v) {
                                            return true;
                                          }
                                        }
                                        for (int x : block) {
                                          if (std::abs(x) == v) {
                                            return true;
                                          }
                                        }
                                        return false;
                                      }),
                       e.data.end());
          if (!block.empty()) {
            e.data.push_back(block);
          }
          std::sort(e.data.begin() + 1, e.data.end(),
                    [](auto const& a, auto const& b) {
                      return std::abs(a[0]) < std::abs(b[0]);
                    });
          return e;
        };
        if (kind.family == lattice_family::coupled_t) {
          for (int i = 1; i <= p; ++i) {
            result.push_back(make({i}, {}));
          }
        }
        for (int i = 1; i <= p; ++i) {
          for (int j = i + 1; j <= p; ++j) {
            result.push_back(make({}, {i, j}));    // (v_i - v_j)^perp
            result.push_back(make({}, {i, -j}));   // (v_i + v_j)^perp
          }
        }
        break;
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<lattice_element> elements(lattice_kind const& kind) {
    std::vector<lattice_element> result;
    std::set<lattice_element>    seen;
    auto                         as   = atoms(kind);
    lattice_element              base = bottom(kind);
    result.push_back(base);
    seen.insert(base);
    for (size_t i = 0; i < result.size(); ++i) {
      lattice_element cur = result[i];
      for (auto const& a : as) {
        lattice_element nxt = join(kind, cur, a);
        if (seen.insert(nxt).second) {
          result.push_back(nxt);
        }
      }
    }
    return result;
  }

  bool is_independent(lattice_kind const&                 kind,
                      std::vector<lattice_element> const& atom_set) {
    auto join_all = [&](size_t skip) {
      lattice_element j = bottom(kind);
      for (size_t i = 0; i < atom_set.size(); ++i) {
        if (i != skip) {
          j = join(kind, j, atom_set[i]);
        }
      }
      return j;
    };
    lattice_element whole = join_all(atom_set.size());
    for (size_t i = 0; i < atom_set.size(); ++i) {
      if (join_all(i) == whole) {
        return false;
      }
    }
    return true;
  }

  atom_graph make_atom_graph(lattice_kind const&                 kind,
                             std::vector<lattice_element> const& atom_set) {
    atom_graph g;
    g.n = kind.param;
    for (auto const& a : atom_set) {
      if (kind.family == lattice_family::partition) {
        std::vector<int> pair;
        for (auto const& blk : a.data) {
          if (blk.size() == 2) {
            pair = blk;
          }
        }
        g.edges.push_back({pair[0], pair[1], edge_tag::a});
      } else if (kind.family == lattice_family::coupled_t
                 || kind.family == lattice_family::coupled_to) {
        if (a.data[0].size() == 1) {
          g.edges.push_back({a.data[0][0], a.data[0][0], edge_tag::c});
        } else {
          std::vector<int> blk;
          for (size_t r = 1; r < a.data.size(); ++r) {
            if (a.data[r].size() == 2) {
              blk = a.data[r];
            }
          }
          g.edges.push_back({std::abs(blk[0]), std::abs(blk[1]),
                             blk[1] > 0 ? edge_tag::a : edge_tag::b});
        }
      } else {
        bad_kind("make_atom_graph");
      }
    }
    return g;
  }

  namespace {

    struct graph_view {
      int                          n;
      std::vector<atom_graph_edge> ab;     // non-loop edges
      std::vector<int>             loops;  // loop vertices

      explicit graph_view(atom_graph const& g) : n(g.n) {
        for (auto const& e : g.edges) {
          if (e.tag == edge_tag::c) {
            loops.push_back(e.i);
          } else {
            ab.push_back(e);
          }
        }
      }

      std::set<int> vertices() const {
        std::set<int> v;
        for (auto const& e : ab) {
          v.insert(e.i);
          v.insert(e.j);
        }
        for (int u : loops) {
          v.insert(u);
        }
        return v;
      }

      // connected components of the vertex set, via ab edges
      std::vector<std::set<int>> components() const {
        std::set<int>              left = vertices();
        std::vector<std::set<int>> comps;
        while (!left.empty()) {
          std::set<int>    comp;
          std::vector<int> stack{*left.begin()};
          while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (!comp.insert(u).second) {
              continue;
            }
            left.erase(u);
            for (auto const& e : ab) {
              if (e.i == u) {
                stack.push_back(e.j);
              }
              if (e.j == u) {
                stack.push_back(e.i);
              }
            }
          }
          comps.push_back(comp);
        }
        return comps;
      }
    };

    // Is the edge subset (of view.ab, by index) a single circuit, and if so,
    // is it odd?  Circuits have length >= 2 (a parallel pair is a 2-circuit).
    bool subset_is_circuit(graph_view const&       g,
                           std::vector<int> const& edge_idx,
                           bool*                   odd) {
      if (edge_idx.size() < 2) {
        return false;
      }
      std::map<int, int> deg;
      int                b_count = 0;
      std::set<int>      verts;
      for (int k : edge_idx) {
        auto const& e = g.ab[k];
        ++deg[e.i];
        ++deg[e.j];
        verts.insert(e.i);
        verts.insert(e.j);
        if (e.tag == edge_tag::b) {
          ++b_count;
        }
      }
      if (verts.size() != edge_idx.size()) {
        return false;
      }
      for (auto const& [v, d] : deg) {
        if (d != 2) {
          return false;
        }
      }
      // connected?
      std::set<int>    comp;
      std::vector<int> stack{*verts.begin()};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (!comp.insert(u).second) {
          continue;
        }
        for (int k : edge_idx) {
          if (g.ab[k].i == u) {
            stack.push_back(g.ab[k].j);
          }
          if (g.ab[k].j == u) {
            stack.push_back(g.ab[k].i);
          }
        }
      }
      if (comp.size() != verts.size()) {
        return false;
      }
      if (odd != nullptr) {
        *odd = (b_count % 2) == 1;
      }
      return true;
    }

    std::vector<std::vector<int>> all_circuits(graph_view const& g,
                                               bool              odd_only) {
      std::vector<std::vector<int>> result;
      size_t                        m = g.ab.size();
      for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
        std::vector<int> idx;
        for (size_t k = 0; k < m; ++k) {
          if ((mask >> k) & 1) {
            idx.push_back(static_cast<int>(k));
          }
        }
        bool odd = false;
        if (subset_is_circuit(g, idx, &odd) && (!odd_only || odd)) {
          result.push_back(idx);
        }
      }
      return result;
    }

    // Is the edge subset a simple path with the given set of vertices and
    // exactly two ends?  Returns the two ends.
    bool subset_is_line(graph_view const&       g,
                        std::vector<int> const& edge_idx,
                        std::pair<int, int>*    ends) {
      if (edge_idx.empty()) {
        return false;
      }
      std::map<int, int> deg;
      std::set<int>      verts;
      for (int k : edge_idx) {
        ++deg[g.ab[k].i];
        ++deg[g.ab[k].j];
        verts.insert(g.ab[k].i);
        verts.insert(g.ab[k].j);
      }
      if (verts.size() != edge_idx.size() + 1) {
        return false;
      }
      std::vector<int> end_list;
      for (auto const& [v, d] : deg) {
        if (d > 2) {
          return false;
        }
        if (d == 1) {
          end_list.push_back(v);
        }
      }
      if (end_list.size() != 2) {
        return false;
      }
      // connectivity follows from verts = edges + 1 and max degree 2
      *ends = {end_list[0], end_list[1]};
      return true;
    }

  }  // namespace

  bool graph_independent(lattice_kind const& kind, atom_graph const& g) {
    graph_view view(g);
    if (kind.family == lattice_family::partition
        || kind.family == lattice_family::coupled_to) {
      if (!view.loops.empty()) {
        bad_kind("graph_independent");
      }
    }
    for (auto const& comp : view.components()) {
      int              edges = 0, loops = 0;
      std::vector<int> comp_edges;
      for (size_t k = 0; k < view.ab.size(); ++k) {
        if (comp.count(view.ab[k].i)) {
          ++edges;
          comp_edges.push_back(static_cast<int>(k));
        }
      }
      for (int u : view.loops) {
        if (comp.count(u)) {
          ++loops;
        }
      }
      int mu = edges - static_cast<int>(comp.size()) + 1;
      if (kind.family == lattice_family::partition) {
        if (mu != 0) {
          return false;
        }
        continue;
      }
      if (loops >= 2 || mu >= 2 || (loops == 1 && mu == 1)) {
        return false;
      }
      if (mu == 1) {
        // the unique circuit must be odd: prune leaves, count b edges left
        std::map<int, int> deg;
        std::set<int>      alive(comp_edges.begin(), comp_edges.end());
        for (int k : comp_edges) {
          ++deg[view.ab[k].i];
          ++deg[view.ab[k].j];
        }
        bool changed = true;
        while (changed) {
          changed = false;
          for (int k : std::vector<int>(alive.begin(), alive.end())) {
            if (deg[view.ab[k].i] == 1 || deg[view.ab[k].j] == 1) {
              alive.erase(k);
              --deg[view.ab[k].i];
              --deg[view.ab[k].j];
              changed = true;
            }
          }
        }
        int b_count = 0;
        for (int k : alive) {
          if (view.ab[k].tag == edge_tag::b) {
            ++b_count;
          }
        }
        if (b_count % 2 == 0) {
          return false;
        }
      }
    }
    return true;
  }

  bool graph_minimally_dependent(lattice_kind const& kind,
                                 atom_graph const&   g) {
    graph_view view(g);
    if (view.components().size() != 1) {
      return false;
    }
    size_t m = view.ab.size();

    if (kind.family == lattice_family::partition) {
      std::vector<int> all(m);
      std::iota(all.begin(), all.end(), 0);
      return view.loops.empty() && subset_is_circuit(view, all, nullptr);
    }
    if (kind.family != lattice_family::coupled_t
        && kind.family != lattice_family::coupled_to) {
      bad_kind("graph_minimally_dependent");
    }
    bool allow_c = kind.family == lattice_family::coupled_t;
    if (!allow_c && !view.loops.empty()) {
      bad_kind("graph_minimally_dependent");
    }

    // form 1: an even circuit
    {
      std::vector<int> all(m);
      std::iota(all.begin(), all.end(), 0);
      bool odd = false;
      if (view.loops.empty() && subset_is_circuit(view, all, &odd) && !odd) {
        return true;
      }
    }

    // end gadgets: a (c) loop at a vertex, or an odd circuit
    struct gadget {
      std::set<int> edge_idx;   // indices into view.ab (empty for a loop)
      std::set<int> verts;      // vertices of the gadget
      int           loop = -1;  // loop vertex, or -1
    };
    std::vector<gadget> gadgets;
    if (allow_c) {
      for (int u : view.loops) {
        gadgets.push_back({{}, {u}, u});
      }
    }
    for (auto const& c : all_circuits(view, /* odd_only = */ true)) {
      gadget gd;
      gd.edge_idx.insert(c.begin(), c.end());
      for (int k : c) {
        gd.verts.insert(view.ab[k].i);
        gd.verts.insert(view.ab[k].j);
      }
      gadgets.push_back(gd);
    }

    size_t total_loops = view.loops.size();
    for (size_t x = 0; x < gadgets.size(); ++x) {
      for (size_t y = x + 1; y < gadgets.size(); ++y) {
        auto const& gx = gadgets[x];
        auto const& gy = gadgets[y];
        // edge-disjoint
        std::vector<int> shared_e;
        std::set_intersection(gx.edge_idx.begin(), gx.edge_idx.end(),
                              gy.edge_idx.begin(), gy.edge_idx.end(),
                              std::back_inserter(shared_e));
        if (!shared_e.empty()) {
          continue;
        }
        size_t used_loops = (gx.loop != -1) + (gy.loop != -1);
        if (used_loops != total_loops) {
          continue;
        }
        std::vector<int> shared_v;
        std::set_intersection(gx.verts.begin(), gx.verts.end(),
                              gy.verts.begin(), gy.verts.end(),
                              std::back_inserter(shared_v));
        std::vector<int> rest;
        for (size_t k = 0; k < m; ++k) {
          if (!gx.edge_idx.count(static_cast<int>(k))
              && !gy.edge_idx.count(static_cast<int>(k))) {
            rest.push_back(static_cast<int>(k));
          }
        }
        if (rest.empty()) {
          // form 2: the gadgets meet in exactly one vertex; a vertex with
          // both a loop and an odd circuit, or two odd circuits, qualifies,
          // but two loops at one vertex cannot arise
          if (shared_v.size() == 1 && !(gx.loop != -1 && gy.loop != -1)) {
            return true;
          }
          continue;
        }
        // form 3: the rest is a line joining the two (disjoint) gadgets
        if (!shared_v.empty()) {
          continue;
        }
        std::pair<int, int> ends;
        if (!subset_is_line(view, rest, &ends)) {
          continue;
        }
        std::set<int> line_verts;
        for (int k : rest) {
          line_verts.insert(view.ab[k].i);
          line_verts.insert(view.ab[k].j);
        }
        auto touches = [&](gadget const& gd, int end) {
          std::vector<int> inter;
          std::set_intersection(gd.verts.begin(), gd.verts.end(),
                                line_verts.begin(), line_verts.end(),
                                std::back_inserter(inter));
          return inter.size() == 1 && inter[0] == end;
        };
        if ((touches(gx, ends.first) && touches(gy, ends.second))
            || (touches(gx, ends.second) && touches(gy, ends.first))) {
          return true;
        }
      }
    }
    return false;
  }

  std::vector<std::vector<lattice_element>>
  minimally_dependent_sets(lattice_kind const& kind) {
    if (kind.family != lattice_family::partition
        && kind.family != lattice_family::coupled_t
        && kind.family != lattice_family::coupled_to) {
      bad_kind("minimally_dependent_sets");
    }
    auto                                      as = atoms(kind);
    std::vector<std::vector<lattice_element>> result;
    size_t                                    m = as.size();
    for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
      std::vector<lattice_element> s;
      for (size_t k = 0; k < m; ++k) {
        if ((mask >> k) & 1) {
          s.push_back(as[k]);
        }
      }
      if (graph_minimally_dependent(kind, make_atom_graph(kind, s))) {
        result.push_back(s);
      }
    }
    return result;
  }

  std::vector<std::vector<int>>
  orientation_to_ordered_partition(lattice_kind const&    kind,
                                   lattice_element const& o) {
    if (kind.family != lattice_family::permutohedron) {
      bad_kind("orientation_to_ordered_partition");
    }
    if (o.extreme) {
      throw std::invalid_argument(
          "orientation_to_ordered_partition: the top 1 is not an orientation");
    }
    auto blocks = arcs_to_ordered_partition(kind.param, o.data);
    if (blocks.empty()) {
      throw std::invalid_argument(
          "orientation_to_ordered_partition: not admissible");
    }
    return blocks;
  }

  std::vector<std::vector<lattice_element>> octahedron_independent_k(int d,
                                                                     int k) {
    if (d < 3 || k < 1 || k > d) {
      throw std::invalid_argument(
          "octahedron_independent_k: need d >= 3 and 1 <= k <= d");
    }
    auto atom_of = [&](std::set<int> const& j) {
      std::vector<int> s;
      for (int i = 1; i <= d; ++i) {
        s.push_back(j.count(i) ? i : -i);
      }
      return one_row(sorted_by_abs(s));
    };

    if (k <= 2) {
      // every singleton and every pair of atoms is independent
      auto as = atoms(lattice_kind{lattice_family::octa_face, d});
      std::vector<std::vector<lattice_element>> small;
      for (size_t x = 0; x < as.size(); ++x) {
        if (k == 1) {
          small.push_back({as[x]});
          continue;
        }
        for (size_t y = x + 1; y < as.size(); ++y) {
          small.push_back({as[x], as[y]});
        }
      }
      return small;
    }

    std::set<std::vector<lattice_element>> out;
    // odometer over the ordered k-tuples (x_1..x_k) in {1..d}^k; tuples with
    // repeats are skipped below
    auto next_tuple = [&](std::vector<int>& t) {
      // advance t as a mixed-radix counter over {1..d}^k, skip non-distinct
      int pos = k - 1;
      while (pos >= 0) {
        if (t[pos] < d) {
          ++t[pos];
          for (int q = pos + 1; q < k; ++q) {
            t[q] = 1;
          }
          return true;
        }
        --pos;
      }
      return false;
    };
    std::vector<int> t(k, 1);
    bool more = true;
    // initialize t to the first tuple (1,1,..,1); loop with skip of repeats
    while (more) {
      std::set<int> distinct(t.begin(), t.end());
      if (distinct.size() == static_cast<size_t>(k)) {
        // base sets J_{j,0} inside X minus {x_1..x_k}
        std::vector<int> complement;
        for (int i = 1; i <= d; ++i) {
          if (!distinct.count(i)) {
            complement.push_back(i);
          }
        }
        int c = static_cast<int>(complement.size());
        // each of the k base sets is a subset of the complement
        std::vector<size_t> base(k, 0);
        auto next_base = [&]() {
          for (int q = 0; q < k; ++q) {
            if (base[q] + 1 < (size_t(1) << c)) {
              ++base[q];
              for (int r = 0; r < q; ++r) {
                base[r] = 0;
              }
              return true;
            }
            // overflow, continue to next digit
          }
          return false;
        };
        bool more_base = true;
        while (more_base) {
          for (int opts = 0; opts < (1 << k); ++opts) {
            // J_{i,j} evolution
            std::vector<std::set<int>> J(k);
            for (int i = 0; i < k; ++i) {
              for (int b = 0; b < c; ++b) {
                if ((base[i] >> b) & 1) {
                  J[i].insert(complement[b]);
                }
              }
            }
            for (int j = 0; j < k; ++j) {
              int xj = t[j];
              if ((opts >> j) & 1) {
                J[j].insert(xj);  // option (1)
              } else {
                for (int i = 0; i < k; ++i) {  // option (0)
                  if (i != j) {
                    J[i].insert(xj);
                  }
                }
              }
            }
            std::vector<lattice_element> tuple_atoms;
            for (int i = 0; i < k; ++i) {
              tuple_atoms.push_back(atom_of(J[i]));
            }
            std::sort(tuple_atoms.begin(), tuple_atoms.end());
            if (std::adjacent_find(tuple_atoms.begin(), tuple_atoms.end())
                == tuple_atoms.end()) {
              out.insert(tuple_atoms);
            }
          }
          more_base = next_base();
        }
      }
      more = next_tuple(t);
    }
    return std::vector<std::vector<lattice_element>>(out.begin(), out.end());
  }

  std::string to_string(lattice_kind const& kind) {
    std::string name;
    switch (kind.family) {
      case lattice_family::boolean: name = "bool"; break;
      case lattice_family::simplex_face: name = "simplex"; break;
      case lattice_family::polygon_face: name = "polygon"; break;
      case lattice_family::cube_face: name = "cube"; break;
      case lattice_family::octa_face: name = "oct"; break;
      case lattice_family::permutohedron: name = "perm"; break;
      case lattice_family::partition: name = "part"; break;
      case lattice_family::coupled_t: name = "T"; break;
      case lattice_family::coupled_to: name = "To"; break;
    }
    return name + "(" + std::to_string(kind.param) + ")";
  }

  std::string to_string(lattice_kind const& kind, lattice_element const& x) {
    std::ostringstream os;
    auto set_str = [](std::vector<int> const& s) {
      std::ostringstream o;
      o << "{";
      for (size_t i = 0; i < s.size(); ++i) {
        o << (i ? "," : "") << s[i];
      }
      o << "}";
      return o.str();
    };
    switch (kind.family) {
      case lattice_family::boolean: os << "bool:" << set_str(x.data[0]); break;
      case lattice_family::simplex_face:
        os << "simplex:" << set_str(x.data[0]);
        break;
      case lattice_family::polygon_face:
        os << "polygon:" << set_str(x.data[0]);
        break;
      case lattice_family::cube_face:
        os << "cube:" << (x.extreme ? "empty" : set_str(x.data[0]));
        break;
      case lattice_family::octa_face:
        os << "oct:" << (x.extreme ? "whole" : set_str(x.data[0]));
        break;
      case lattice_family::permutohedron: {
        os << "perm:";
        if (x.extreme) {
          os << "one";
        } else {
          for (size_t i = 0; i < x.data.size(); ++i) {
            os << (i ? "," : "") << x.data[i][0] << ">" << x.data[i][1];
          }
          if (x.data.empty()) {
            os << "id";
          }
        }
        break;
      }
      case lattice_family::partition: {
        os << "part:";
        for (size_t i = 0; i < x.data.size(); ++i) {
          os << (i ? "|" : "") << set_str(x.data[i]);
        }
        break;
      }
      case lattice_family::coupled_t:
      case lattice_family::coupled_to: {
        os << (kind.family == lattice_family::coupled_t ? "T:" : "To:");
        os << "D" << set_str(x.data[0]);
        for (size_t i = 1; i < x.data.size(); ++i) {
          std::vector<int> p1, p2;
          for (int v : x.data[i]) {
            (v > 0 ? p1 : p2).push_back(std::abs(v));
          }
          os << ";" << set_str(p1);
          if (!p2.empty()) {
            os << "+" << set_str(p2);
          }
        }
        break;
      }
    }
    return os.str();
  }

}  // namespace refmon
