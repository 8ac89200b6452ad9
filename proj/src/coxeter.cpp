//
// refmon - Weyl groups, orbits and characteristic maps.
//

#include "refmon/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace refmon {

  bool signed_perm::operator<(signed_perm const& that) const {
    if (img.size() != that.img.size()) {
      return img.size() < that.img.size();
    }
    for (size_t i = 0; i < img.size(); ++i) {
      int a = std::abs(img[i]), b = std::abs(that.img[i]);
      if (a != b) {
        return a < b;
      }
      if ((img[i] < 0) != (that.img[i] < 0)) {
        return img[i] > 0;  // positive before negative
      }
    }
    return false;
  }

  signed_perm sp_identity(int n) {
    signed_perm g;
    g.img.resize(n);
    std::iota(g.img.begin(), g.img.end(), 1);
    return g;
  }

  signed_perm sp_multiply(signed_perm const& g, signed_perm const& h) {
    if (g.n() != h.n()) {
      throw std::invalid_argument("sp_multiply: size mismatch");
    }
    signed_perm r;
    r.img.resize(g.n());
    for (int i = 1; i <= g.n(); ++i) {
      r.img[i - 1] = h.apply(g.apply(i));
    }
    return r;
  }

  signed_perm sp_inverse(signed_perm const& g) {
    signed_perm r;
    r.img.resize(g.n());
    for (int i = 1; i <= g.n(); ++i) {
      int t = g.img[i - 1];
      r.img[std::abs(t) - 1] = t > 0 ? i : -i;
    }
    return r;
  }

  bool sp_even_signed(signed_perm const& g) {
    int neg = 0;
    for (int t : g.img) {
      if (t < 0) {
        ++neg;
      }
    }
    return neg % 2 == 0;
  }

  std::string to_string(signed_perm const& g) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < g.n(); ++i) {
      os << (i ? "," : "") << g.img[i];
    }
    os << "]";
    return os.str();
  }

  std::vector<signed_perm> generators(coxeter_type type, int n) {
    if ((type == coxeter_type::A && n < 2) || (type == coxeter_type::B && n < 2)
        || (type == coxeter_type::D && n < 4)) {
      throw std::invalid_argument("generators: parameter out of range");
    }
    std::vector<signed_perm> gens;
    if (type == coxeter_type::B) {
      signed_perm s0 = sp_identity(n);
      s0.img[0]      = -1;
      gens.push_back(s0);
    } else if (type == coxeter_type::D) {
      signed_perm s0 = sp_identity(n);
      s0.img[0]      = -2;
      s0.img[1]      = -1;
      gens.push_back(s0);
    }
    for (int i = 1; i < n; ++i) {
      signed_perm s = sp_identity(n);
      std::swap(s.img[i - 1], s.img[i]);
      gens.push_back(s);
    }
    return gens;
  }

  std::vector<std::vector<int>> coxeter_matrix(coxeter_type type, int n) {
    auto   gens = generators(type, n);
    size_t m    = gens.size();
    std::vector<std::vector<int>> mat(m, std::vector<int>(m, 2));
    for (size_t i = 0; i < m; ++i) {
      mat[i][i] = 1;
    }
    auto set = [&](size_t i, size_t j, int v) { mat[i][j] = mat[j][i] = v; };
    if (type == coxeter_type::A) {
      for (size_t i = 0; i + 1 < m; ++i) {
        set(i, i + 1, 3);
      }
    } else if (type == coxeter_type::B) {
      set(0, 1, 4);
      for (size_t i = 1; i + 1 < m; ++i) {
        set(i, i + 1, 3);
      }
    } else {
      // D forks at s2: s0 and s1 both attach to s2 and not to each other
      set(0, 2, 3);
      for (size_t i = 1; i + 1 < m; ++i) {
        set(i, i + 1, 3);
      }
    }
    return mat;
  }

  signed_perm evaluate_word(word const& w, coxeter_type type, int n) {
    auto        gens = generators(type, n);
    signed_perm g    = sp_identity(n);
    for (int i : w) {
      if (i < 0 || i >= static_cast<int>(gens.size())) {
        throw std::invalid_argument("evaluate_word: bad generator index");
      }
      g = sp_multiply(g, gens[i]);
    }
    return g;
  }

  group_data enumerate_group(coxeter_type type, int n) {
    auto       gens = generators(type, n);
    group_data data;
    auto       push = [&](signed_perm const& g, word const& w) {
      if (data.index.count(g)) {
        return;
      }
      data.index.emplace(g, static_cast<int>(data.elements.size()));
      data.elements.push_back(g);
      data.words.push_back(w);
    };
    push(sp_identity(n), {});
    for (size_t e = 0; e < data.elements.size(); ++e) {
      // copies: push may reallocate the vectors
      signed_perm cur = data.elements[e];
      word        w   = data.words[e];
      for (size_t i = 0; i < gens.size(); ++i) {
        word wi = w;
        wi.push_back(static_cast<int>(i));
        push(sp_multiply(cur, gens[i]), wi);
      }
    }
    return data;
  }

  lattice_element act(lattice_kind const&    kind,
                      lattice_element const& x,
                      signed_perm const&     g) {
    if (x.extreme) {
      return x;
    }
    lattice_element r;
    switch (kind.family) {
      case lattice_family::boolean:
      case lattice_family::simplex_face: {
        std::vector<int> s;
        for (int i : x.data[0]) {
          s.push_back(std::abs(g.apply(i)));
        }
        std::sort(s.begin(), s.end());
        r.data.push_back(s);
        return r;
      }
      case lattice_family::octa_face: {
        std::vector<int> s;
        for (int i : x.data[0]) {
          s.push_back(g.apply(i));
        }
        std::sort(s.begin(), s.end(), [](int a, int b) {
          return std::abs(a) < std::abs(b);
        });
        r.data.push_back(s);
        return r;
      }
      case lattice_family::permutohedron: {
        for (auto const& arc : x.data) {
          r.data.push_back({g.apply(arc[0]), g.apply(arc[1])});
        }
        std::sort(r.data.begin(), r.data.end());
        return r;
      }
      case lattice_family::partition: {
        for (auto const& blk : x.data) {
          std::vector<int> b;
          for (int i : blk) {
            b.push_back(g.apply(i));
          }
          std::sort(b.begin(), b.end());
          r.data.push_back(b);
        }
        std::sort(r.data.begin(), r.data.end());
        return r;
      }
      case lattice_family::coupled_t:
      case lattice_family::coupled_to: {
        std::vector<int> delta;
        for (int i : x.data[0]) {
          delta.push_back(std::abs(g.apply(i)));
        }
        std::sort(delta.begin(), delta.end());
        r.data.push_back(delta);
        for (size_t b = 1; b < x.data.size(); ++b) {
          std::vector<int> blk;
          for (int l : x.data[b]) {
            blk.push_back(g.apply(l));
          }
          std::sort(blk.begin(), blk.end(), [](int u, int v) {
            return std::abs(u) < std::abs(v);
          });
          if (blk[0] < 0) {  // normalize: smallest magnitude positive
            for (int& l : blk) {
              l = -l;
            }
          }
          r.data.push_back(blk);
        }
        std::sort(r.data.begin() + 1, r.data.end(),
                  [](auto const& u, auto const& v) {
                    return std::abs(u[0]) < std::abs(v[0]);
                  });
        return r;
      }
      default:
        throw std::invalid_argument("act: unsupported lattice family");
    }
  }

  atom_orbit_data orbit_reps(coxeter_type        type,
                             int                 n,
                             lattice_kind const& kind) {
    auto            gens  = generators(type, n);
    auto            as    = atoms(kind);
    atom_orbit_data data;
    std::set<lattice_element> atom_set(as.begin(), as.end()), seen;
    for (auto const& a : as) {
      if (seen.count(a)) {
        continue;
      }
      // the orbit of a: find its minimal member first
      std::vector<lattice_element> orbit{a};
      std::set<lattice_element>    in_orbit{a};
      for (size_t i = 0; i < orbit.size(); ++i) {
        lattice_element cur = orbit[i];
        for (auto const& s : gens) {
          auto nxt = act(kind, cur, s);
          if (!atom_set.count(nxt)) {
            throw std::invalid_argument(
                "orbit_reps: the action does not preserve the atoms");
          }
          if (in_orbit.insert(nxt).second) {
            orbit.push_back(nxt);
          }
        }
      }
      lattice_element rep = *std::min_element(orbit.begin(), orbit.end());
      data.reps.push_back(rep);
      // breadth-first witness words from the representative
      data.rep_of[rep]  = rep;
      data.witness[rep] = {};
      std::vector<lattice_element> queue{rep};
      for (size_t i = 0; i < queue.size(); ++i) {
        lattice_element cur = queue[i];
        word            w   = data.witness[cur];
        for (size_t s = 0; s < gens.size(); ++s) {
          auto nxt = act(kind, cur, gens[s]);
          if (!data.witness.count(nxt)) {
            word ws = w;
            ws.push_back(static_cast<int>(s));
            data.witness[nxt] = ws;
            data.rep_of[nxt]  = rep;
            queue.push_back(nxt);
          }
        }
      }
      for (auto const& b : orbit) {
        seen.insert(b);
      }
    }
    std::sort(data.reps.begin(), data.reps.end());
    return data;
  }

  std::vector<std::vector<lattice_element>> orbit_reps_k(
      coxeter_type type, int n, lattice_kind const& kind, int k) {
    auto gens = generators(type, n);
    auto as   = atoms(kind);
    if (k < 1 || k > static_cast<int>(as.size())) {
      return {};
    }
    std::set<std::vector<lattice_element>> seen, reps;
    std::vector<int>                       pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    auto advance = [&]() {
      int m = static_cast<int>(as.size());
      int i = k - 1;
      while (i >= 0 && pick[i] == m - k + i) {
        --i;
      }
      if (i < 0) {
        return false;
      }
      ++pick[i];
      for (int j = i + 1; j < k; ++j) {
        pick[j] = pick[j - 1] + 1;
      }
      return true;
    };
    bool more = true;
    while (more) {
      std::vector<lattice_element> s;
      for (int i : pick) {
        s.push_back(as[i]);
      }
      if (!seen.count(s)) {
        // sweep the whole orbit, record its minimal member
        std::vector<std::vector<lattice_element>> orbit{s};
        std::set<std::vector<lattice_element>>    in_orbit{s};
        for (size_t i = 0; i < orbit.size(); ++i) {
          auto cur = orbit[i];
          for (auto const& g : gens) {
            std::vector<lattice_element> nxt;
            for (auto const& a : cur) {
              nxt.push_back(act(kind, a, g));
            }
            std::sort(nxt.begin(), nxt.end());
            if (in_orbit.insert(nxt).second) {
              orbit.push_back(nxt);
            }
          }
        }
        reps.insert(*std::min_element(orbit.begin(), orbit.end()));
        for (auto const& t : orbit) {
          seen.insert(t);
        }
      }
      more = advance();
    }
    return std::vector<std::vector<lattice_element>>(reps.begin(), reps.end());
  }

  namespace {
    // f^*(I) for nonempty I from the values on nonempty sets
    int mobius_star(std::vector<int> const& values, int k, int mask) {
      int full = (1 << k) - 1;
      int rest = full & ~mask;
      int sum  = 0;
      // J = mask | sub over subsets sub of the complement
      for (int sub = rest;; sub = (sub - 1) & rest) {
        int bits = __builtin_popcount(sub);
        sum += (bits % 2 == 0 ? 1 : -1) * values[mask | sub];
        if (sub == 0) {
          break;
        }
      }
      return sum;
    }
  }  // namespace

  std::vector<char_map> char_maps(int ell, int k) {
    if (ell < 0 || k < 1) {
      throw std::invalid_argument("char_maps: need ell >= 0, k >= 1");
    }
    int                   masks = 1 << k;
    std::vector<char_map> result;
    // a characteristic map is exactly a choice of box sizes
    // x_I = f^*(I) >= 0 over the nonempty I with sum <= ell; recover
    // f(J) = sum of x_I over I containing J, f(empty) = sum of all x_I
    std::vector<int> x(masks, 0);
    auto emit = [&]() {
      char_map f;
      f.k   = k;
      f.ell = ell;
      f.values.assign(masks, 0);
      for (int i = 1; i < masks; ++i) {
        f.values[0] += x[i];
        for (int m = 1; m < masks; ++m) {
          if ((i & m) == m) {
            f.values[m] += x[i];
          }
        }
      }
      result.push_back(f);
    };
    // recursive composition enumeration over the nonempty masks
    auto rec = [&](auto&& self, int m, int left) -> void {
      if (m == masks) {
        emit();
        return;
      }
      for (int v = 0; v <= left; ++v) {
        x[m] = v;
        self(self, m + 1, left - v);
      }
      x[m] = 0;
    };
    rec(rec, 1, ell);
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<std::vector<int>> realize_tuple(char_map const& f) {
    int k = f.k, ell = f.ell;
    // masks ordered with Y first, then by decreasing size, ties lex on the
    // sorted element lists
    std::vector<int> order;
    for (int m = (1 << k) - 1; m >= 1; --m) {
      order.push_back(m);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
      if (ca != cb) {
        return ca > cb;
      }
      std::vector<int> ea, eb;
      for (int i = 0; i < k; ++i) {
        if ((a >> i) & 1) {
          ea.push_back(i + 1);
        }
        if ((b >> i) & 1) {
          eb.push_back(i + 1);
        }
      }
      return ea < eb;
    });
    std::vector<std::vector<int>> K(1 << k);
    int                           next = 1;
    for (int m : order) {
      int cnt = mobius_star(f.values, k, m);
      for (int t = 0; t < cnt; ++t) {
        if (next > ell) {
          throw std::invalid_argument("realize_tuple: not a characteristic map");
        }
        K[m].push_back(next++);
      }
    }
    std::vector<std::vector<int>> J(k);
    for (int m = 1; m < (1 << k); ++m) {
      for (int i = 0; i < k; ++i) {
        if ((m >> i) & 1) {
          J[i].insert(J[i].end(), K[m].begin(), K[m].end());
        }
      }
    }
    for (auto& j : J) {
      std::sort(j.begin(), j.end());
    }
    return J;
  }

  char_map char_map_of(std::vector<std::vector<int>> const& tuple, int ell) {
    int      k = static_cast<int>(tuple.size());
    char_map f;
    f.k   = k;
    f.ell = ell;
    f.values.assign(1 << k, 0);
    std::set<int> all;
    for (auto const& j : tuple) {
      all.insert(j.begin(), j.end());
    }
    f.values[0] = static_cast<int>(all.size());
    for (int m = 1; m < (1 << k); ++m) {
      std::set<int> inter;
      bool          first = true;
      for (int i = 0; i < k; ++i) {
        if (!((m >> i) & 1)) {
          continue;
        }
        std::set<int> ji(tuple[i].begin(), tuple[i].end());
        if (first) {
          inter = ji;
          first = false;
        } else {
          std::set<int> tmp;
          for (int x : inter) {
            if (ji.count(x)) {
              tmp.insert(x);
            }
          }
          inter = tmp;
        }
      }
      f.values[m] = static_cast<int>(inter.size());
    }
    return f;
  }

  std::vector<int> hyperplane_orbit_reps(coxeter_type type, int n) {
    generators(type, n);  // range check
    switch (type) {
      case coxeter_type::A:
        return {0};  // s1 heads the generator list
      case coxeter_type::B:
        return {0, 1};  // the 4-labeled edge separates s0 from the rest
      case coxeter_type::D:
        return {1};  // single component; s1 is the chosen representative
    }
    throw std::invalid_argument("hyperplane_orbit_reps: bad type");
  }

}  // namespace refmon
