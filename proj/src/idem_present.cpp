//
// refmon - presentations of the idempotent lattices.
//

#include "refmon/idem_present.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace refmon {

  namespace {

    std::string digits(std::vector<int> const& s) {
      std::string r;
      for (int i : s) {
        r += std::to_string(i);
      }
      return r;
    }

  }  // namespace

  std::string lattice_atom_name(lattice_kind const&    kind,
                                lattice_element const& atom) {
    switch (kind.family) {
      case lattice_family::boolean:
      case lattice_family::simplex_face: {
        // the facet missing vertex i is called a<i>
        int n = kind.family == lattice_family::boolean ? kind.param
                                                       : kind.param + 1;
        for (int i = 1; i <= n; ++i) {
          if (!std::binary_search(atom.data[0].begin(), atom.data[0].end(),
                                  i)) {
            return "a" + std::to_string(i);
          }
        }
        throw std::invalid_argument("lattice_atom_name: not an atom");
      }
      case lattice_family::polygon_face:
        return "a" + std::to_string(atom.data[0][0]);
      case lattice_family::cube_face: {
        int v = atom.data[0][0];
        return (v > 0 ? "cp" : "cm") + std::to_string(std::abs(v));
      }
      case lattice_family::octa_face: {
        std::vector<int> pos;
        for (int v : atom.data[0]) {
          if (v > 0) {
            pos.push_back(v);
          }
        }
        return pos.empty() ? "o0" : "o" + digits(pos);
      }
      case lattice_family::permutohedron: {
        // O_J named by J, the head set of the orientation
        std::set<int> tails;
        for (auto const& arc : atom.data) {
          tails.insert(arc[1]);
        }
        return "p" + digits(std::vector<int>(tails.begin(), tails.end()));
      }
      case lattice_family::partition: {
        for (auto const& blk : atom.data) {
          if (blk.size() == 2) {
            return "a" + digits(blk);
          }
        }
        throw std::invalid_argument("lattice_atom_name: not an atom");
      }
      case lattice_family::coupled_t:
      case lattice_family::coupled_to: {
        if (atom.data[0].size() == 1) {
          return "e" + std::to_string(atom.data[0][0]);
        }
        for (size_t b = 1; b < atom.data.size(); ++b) {
          if (atom.data[b].size() == 2) {
            int i = atom.data[b][0], j = atom.data[b][1];
            return (j > 0 ? "a" : "b") + std::to_string(i)
                   + std::to_string(std::abs(j));
          }
        }
        throw std::invalid_argument("lattice_atom_name: not an atom");
      }
    }
    throw std::invalid_argument("lattice_atom_name: bad kind");
  }

  namespace {

    struct atom_table {
      std::vector<lattice_element>  list;
      std::map<lattice_element, int> index;
    };

    atom_table install_atoms(presentation& p, lattice_kind const& kind) {
      atom_table t;
      t.list = atoms(kind);
      for (auto const& a : t.list) {
        t.index[a] = p.add_generator(lattice_atom_name(kind, a),
                                     generator_kind::idempotent, -1, a);
      }
      return t;
    }

    void add_idem12(presentation& p, atom_table const& t) {
      int m = static_cast<int>(t.list.size());
      for (int i = 0; i < m; ++i) {
        p.add_relation(relation_family::idem1, {i, i}, {i});
      }
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
          p.add_relation(relation_family::idem2, {i, j}, {j, i});
        }
      }
    }

    word word_of(atom_table const&                   t,
                 std::vector<lattice_element> const& s) {
      word w;
      for (auto const& a : s) {
        w.push_back(t.index.at(a));
      }
      std::sort(w.begin(), w.end());
      return w;
    }

    lattice_element join_set(lattice_kind const&                 kind,
                             std::vector<lattice_element> const& s) {
      lattice_element j = bottom(kind);
      for (auto const& a : s) {
        j = join(kind, j, a);
      }
      return j;
    }

    // Idem3 instances for one independent set: append every atom below the
    // join that is not a member.
    void add_idem3_for(presentation&                       p,
                       lattice_kind const&                 kind,
                       atom_table const&                   t,
                       std::vector<lattice_element> const& s,
                       relation_family                     tag) {
      lattice_element top = join_set(kind, s);
      word            base = word_of(t, s);
      for (auto const& b : t.list) {
        if (std::find(s.begin(), s.end(), b) != s.end()
            || !leq(kind, b, top)) {
          continue;
        }
        word ext = base;
        ext.push_back(t.index.at(b));
        std::sort(ext.begin(), ext.end());
        p.add_relation(tag, base, ext);
      }
    }

  }  // namespace

  presentation present_graded_atomic(lattice_kind const& kind) {
    presentation p;
    p.family = "graded-atomic " + to_string(kind);
    p.params = {kind.param};
    auto t   = install_atoms(p, kind);
    add_idem12(p, t);
    int m  = static_cast<int>(t.list.size());
    int rk = max_rank(kind);
    // subsets of atoms of size <= rk E, tested for independence
    for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
      if (__builtin_popcountll(mask) > rk) {
        continue;
      }
      std::vector<lattice_element> s;
      for (int i = 0; i < m; ++i) {
        if ((mask >> i) & 1) {
          s.push_back(t.list[i]);
        }
      }
      if (is_independent(kind, s)) {
        add_idem3_for(p, kind, t, s, relation_family::idem3);
      }
    }
    return p;
  }

  presentation present_simple_polytope(lattice_kind const& kind) {
    if (kind.family != lattice_family::simplex_face
        && kind.family != lattice_family::cube_face
        && kind.family != lattice_family::permutohedron) {
      throw std::invalid_argument("present_simple_polytope: not simple");
    }
    presentation p;
    p.family = "simple-polytope " + to_string(kind);
    p.params = {kind.param};
    auto t   = install_atoms(p, kind);
    add_idem12(p, t);
    // for a simple polytope the only Idem3 instances needed are pairs of
    // facets joining to the empty face, extended by every other facet
    int m = static_cast<int>(t.list.size());
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        std::vector<lattice_element> s{t.list[i], t.list[j]};
        if (rank(kind, join_set(kind, s)) == max_rank(kind)) {
          add_idem3_for(p, kind, t, s, relation_family::idem3);
        }
      }
    }
    return p;
  }

  presentation present_geometric(lattice_kind const& kind) {
    if (kind.family != lattice_family::partition
        && kind.family != lattice_family::coupled_t
        && kind.family != lattice_family::coupled_to) {
      throw std::invalid_argument("present_geometric: not geometric");
    }
    presentation p;
    p.family = "geometric " + to_string(kind);
    p.params = {kind.param};
    auto t   = install_atoms(p, kind);
    add_idem12(p, t);
    for (auto const& s : minimally_dependent_sets(kind)) {
      // chain the k single-deletion products in canonical order
      std::vector<word> products;
      for (size_t i = 0; i < s.size(); ++i) {
        auto del = s;
        del.erase(del.begin() + i);
        products.push_back(word_of(t, del));
      }
      std::sort(products.begin(), products.end());
      for (size_t i = 0; i + 1 < products.size(); ++i) {
        p.add_relation(relation_family::idem3a, products[i],
                       products[i + 1]);
      }
    }
    return p;
  }

  presentation present_octahedron(int d) {
    lattice_kind kind{lattice_family::octa_face, d};
    if (d < 3) {
      return present_graded_atomic(kind);
    }
    presentation p;
    p.family = "octahedron " + to_string(kind);
    p.params = {d};
    auto t   = install_atoms(p, kind);
    add_idem12(p, t);
    for (int k = 2; k <= d; ++k) {
      for (auto const& s : octahedron_independent_k(d, k)) {
        add_idem3_for(p, kind, t, s, relation_family::idem3);
      }
    }
    return p;
  }

  namespace {

    // Handles on the arrangement atoms by index pair / index.
    struct arrangement_atoms {
      lattice_kind                     kind;
      atom_table                       table;
      std::map<std::pair<int, int>, int> plain;   // a_ij
      std::map<std::pair<int, int>, int> dbl;     // b_ij
      std::map<int, int>                 loop;    // e_i
    };

    arrangement_atoms
    install_arrangement_atoms(presentation& p, lattice_kind const& kind) {
      arrangement_atoms aa{kind, install_atoms(p, kind), {}, {}, {}};
      for (auto const& a : aa.table.list) {
        auto g = make_atom_graph(kind, {a});
        auto e = g.edges[0];
        int  i = std::min(e.i, e.j), j = std::max(e.i, e.j);
        int  idx = aa.table.index.at(a);
        if (e.tag == edge_tag::a) {
          aa.plain[{i, j}] = idx;
        } else if (e.tag == edge_tag::b) {
          aa.dbl[{i, j}] = idx;
        } else {
          aa.loop[e.i] = idx;
        }
      }
      return aa;
    }

    // soundness gate: both sides must join to the same lattice element
    void add_checked(presentation& p, arrangement_atoms const& aa,
                     word lhs, word rhs) {
      auto join_word = [&](word const& w) {
        lattice_element j = bottom(aa.kind);
        for (int g : w) {
          j = join(aa.kind, j, p.generators[g].atom);
        }
        return j;
      };
      if (!(join_word(lhs) == join_word(rhs))) {
        throw std::logic_error(
            "present_arrangement_reduced: unsound relation generated");
      }
      p.add_relation(relation_family::reduced, std::move(lhs),
                     std::move(rhs));
    }

    // chain w1 = w2 = w3 as two relations
    void add_chain(presentation& p, arrangement_atoms const& aa,
                   std::vector<word> words) {
      for (size_t i = 0; i + 1 < words.size(); ++i) {
        add_checked(p, aa, words[i], words[i + 1]);
      }
    }

    // the edge generator index of type sigma (+1 plain, -1 double)
    int edge(arrangement_atoms const& aa, int i, int j, int sigma) {
      auto key = std::make_pair(std::min(i, j), std::max(i, j));
      return sigma > 0 ? aa.plain.at(key) : aa.dbl.at(key);
    }

  }  // namespace

  presentation present_arrangement_reduced(coxeter_type type, int n) {
    if ((type != coxeter_type::D && n < 2)
        || (type == coxeter_type::D && n < 4)) {
      throw std::invalid_argument(
          "present_arrangement_reduced: parameter out of range");
    }
    lattice_kind kind{type == coxeter_type::A  ? lattice_family::partition
                      : type == coxeter_type::B ? lattice_family::coupled_t
                                                : lattice_family::coupled_to,
                      n};
    presentation p;
    p.family = "arrangement-reduced " + to_string(kind);
    p.params = {n};
    auto aa  = install_arrangement_atoms(p, kind);
    add_idem12(p, aa.table);

    auto triples = [&](auto&& fn) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (int k = j + 1; k <= n; ++k) {
            fn(i, j, k);
          }
        }
      }
    };

    if (type == coxeter_type::A) {
      // (A1): the three two-edge paths on each triple agree
      triples([&](int i, int j, int k) {
        int ij = aa.plain.at({i, j}), ik = aa.plain.at({i, k}),
            jk = aa.plain.at({j, k});
        add_chain(p, aa, {{ij, ik}, {ij, jk}, {ik, jk}});
      });
      return p;
    }

    // sign patterns (s_ij, s_jk, s_ik) with s_ik = s_ij s_jk
    std::vector<std::array<int, 3>> patterns;
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        patterns.push_back({s1, s2, s1 * s2});
      }
    }

    if (type == coxeter_type::B) {
      // (B1)/(B2): the three two-edge paths of each consistent sign pattern
      triples([&](int i, int j, int k) {
        for (auto const& s : patterns) {
          int ij = edge(aa, i, j, s[0]), jk = edge(aa, j, k, s[1]),
              ik = edge(aa, i, k, s[2]);
          add_chain(p, aa, {{ij, ik}, {ij, jk}, {ik, jk}});
        }
      });
      // (B3): loops against the edges of each ordered pair
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j) {
            continue;
          }
          int ei = aa.loop.at(i), ej = aa.loop.at(j);
          int a  = edge(aa, i, j, 1), b = edge(aa, i, j, -1);
          add_chain(p, aa, {{a, b}, {a, ei}, {ei, ej}, {b, ei}});
        }
      }
      // (B4): each odd triangle equals the three loops
      triples([&](int i, int j, int k) {
        for (int s1 : {1, -1}) {
          for (int s2 : {1, -1}) {
            for (int s3 : {1, -1}) {
              if (s1 * s2 * s3 != -1) {
                continue;  // odd number of double edges
              }
              word tri{edge(aa, i, j, s1), edge(aa, j, k, s2),
                       edge(aa, i, k, s3)};
              add_checked(p, aa, tri,
                          {aa.loop.at(i), aa.loop.at(j), aa.loop.at(k)});
            }
          }
        }
      });
      return p;
    }

    // type D: (B1)/(B2) as above, then (D1)-(D3)
    triples([&](int i, int j, int k) {
      for (auto const& s : patterns) {
        int ij = edge(aa, i, j, s[0]), jk = edge(aa, j, k, s[1]),
            ik = edge(aa, i, k, s[2]);
        add_chain(p, aa, {{ij, ik}, {ij, jk}, {ik, jk}});
      }
    });
    // (D1): an odd triangle equals itself plus the mate of any of its edges
    triples([&](int i, int j, int k) {
      for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
          for (int s3 : {1, -1}) {
            if (s1 * s2 * s3 != -1) {
              continue;
            }
            word tri{edge(aa, i, j, s1), edge(aa, j, k, s2),
                     edge(aa, i, k, s3)};
            for (auto [u, v, s] : {std::tuple{i, j, s1}, {j, k, s2},
                                   {i, k, s3}}) {
              word ext = tri;
              ext.push_back(edge(aa, u, v, -s));
              add_checked(p, aa, tri, ext);
            }
          }
        }
      }
    });
    // (D2): chains of doubled edges shortcut over the middle pair
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          for (int l = 1; l <= n; ++l) {
            std::set<int> distinct{i, j, k, l};
            if (distinct.size() != 4) {
              continue;
            }
            auto dbl_pair = [&](int u, int v) {
              return word{edge(aa, u, v, 1), edge(aa, u, v, -1)};
            };
            word lhs = dbl_pair(i, j), rhs = dbl_pair(i, j);
            auto append = [](word& w, word const& x) {
              w.insert(w.end(), x.begin(), x.end());
            };
            append(lhs, dbl_pair(j, k));
            append(lhs, dbl_pair(k, l));
            append(rhs, dbl_pair(k, l));
            add_checked(p, aa, lhs, rhs);
          }
        }
      }
    }
    // (D3): single edges against doubled pairs on each ordered triple
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          std::set<int> distinct{i, j, k};
          if (distinct.size() != 3) {
            continue;
          }
          int  aij = edge(aa, i, j, 1), bij = edge(aa, i, j, -1);
          int  ajk = edge(aa, j, k, 1), bjk = edge(aa, j, k, -1);
          word w1{aij, ajk, bjk};       // a_ij dbl_jk
          word w2{aij, bij, bjk};       // dbl_ij b_jk
          word w3{aij, bij, ajk, bjk};  // dbl_ij dbl_jk
          add_chain(p, aa, {w1, w2, w3});
        }
      }
    }
    return p;
  }

}  // namespace refmon
