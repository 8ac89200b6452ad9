//
// refmon - presentations of the reflection and Renner monoids: the general
// six-family pipeline and the closed forms.
//

#include "refmon/refmon_present.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "refmon/idem_present.hpp"

namespace refmon {

  namespace {

    word rev(word w) {
      std::reverse(w.begin(), w.end());
      return w;
    }

    word cat(std::initializer_list<word> parts) {
      word w;
      for (auto const& p : parts) {
        w.insert(w.end(), p.begin(), p.end());
      }
      return w;
    }

    lattice_element one_row(std::vector<int> row) {
      lattice_element e;
      e.data.push_back(std::move(row));
      return e;
    }

    // Presentation index of the Coxeter generator s_<label>: type A lists
    // s1..s_{n-1}, types B and D list s0..s_{n-1}.
    int s_index(coxeter_type type, int label) {
      return type == coxeter_type::A ? label - 1 : label;
    }

    int unit_count(coxeter_type type, int n) {
      return type == coxeter_type::A ? n - 1 : n;
    }

    // s_hi s_{hi-1} ... s_lo (empty when hi < lo)
    word sdesc(coxeter_type type, int hi, int lo) {
      word w;
      for (int l = hi; l >= lo; --l) {
        w.push_back(s_index(type, l));
      }
      return w;
    }

    // s_lo s_{lo+1} ... s_hi (empty when hi < lo)
    word sasc(coxeter_type type, int lo, int hi) {
      word w;
      for (int l = lo; l <= hi; ++l) {
        w.push_back(s_index(type, l));
      }
      return w;
    }

    void add_unit_generators(presentation& p, coxeter_type type, int n) {
      int first = type == coxeter_type::A ? 1 : 0;
      int m     = unit_count(type, n);
      for (int i = 0; i < m; ++i) {
        p.add_generator("s" + std::to_string(first + i), generator_kind::unit,
                        i);
      }
    }

    void add_unit_relations(presentation& p, coxeter_type type, int n) {
      auto m = coxeter_matrix(type, n);
      int  k = static_cast<int>(m.size());
      for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
          word lhs;
          for (int t = 0; t < m[i][j]; ++t) {
            lhs.push_back(i);
            lhs.push_back(j);
          }
          p.add_relation(relation_family::units, lhs, {});
        }
      }
    }

    lattice_element join_all(lattice_kind const&                 lat,
                             std::vector<lattice_element> const& xs) {
      lattice_element e = bottom(lat);
      for (auto const& x : xs) {
        e = join(lat, e, x);
      }
      return e;
    }

    // the set is dependent but every proper subset is independent
    bool is_minimally_dependent(lattice_kind const&                 lat,
                                std::vector<lattice_element> const& set) {
      if (is_independent(lat, set)) {
        return false;
      }
      for (size_t drop = 0; drop < set.size(); ++drop) {
        std::vector<lattice_element> sub;
        for (size_t i = 0; i < set.size(); ++i) {
          if (i != drop) {
            sub.push_back(set[i]);
          }
        }
        if (!is_independent(lat, sub)) {
          return false;
        }
      }
      return true;
    }

    // chain of k-1 equalities between consecutive single-deletion products
    void add_deletion_chain(presentation&                       p,
                            std::vector<lattice_element> const& set,
                            std::map<lattice_element, word> const& alpha) {
      auto deletion = [&](size_t drop) {
        word w;
        for (size_t i = 0; i < set.size(); ++i) {
          if (i != drop) {
            auto const& a = alpha.at(set[i]);
            w.insert(w.end(), a.begin(), a.end());
          }
        }
        return w;
      };
      for (size_t j = 0; j + 1 < set.size(); ++j) {
        p.add_relation(relation_family::idem3a, deletion(j), deletion(j + 1));
      }
    }

    // prod = prod * extra for every way of singling out one element whose
    // complement is independent and dominates it
    void add_idem3_instances(presentation&                       p,
                             lattice_kind const&                 lat,
                             std::vector<lattice_element> const& set,
                             std::map<lattice_element, word> const& alpha) {
      for (size_t t = 0; t < set.size(); ++t) {
        std::vector<lattice_element> rest;
        for (size_t i = 0; i < set.size(); ++i) {
          if (i != t) {
            rest.push_back(set[i]);
          }
        }
        if (!is_independent(lat, rest)
            || !leq(lat, set[t], join_all(lat, rest))) {
          continue;
        }
        word lhs;
        for (auto const& a : rest) {
          auto const& w = alpha.at(a);
          lhs.insert(lhs.end(), w.begin(), w.end());
        }
        word rhs = lhs;
        auto const& w = alpha.at(set[t]);
        rhs.insert(rhs.end(), w.begin(), w.end());
        p.add_relation(relation_family::idem3, lhs, rhs);
      }
    }

    std::vector<std::vector<lattice_element>>
    all_subsets_k(std::vector<lattice_element> const& atoms_, int k) {
      std::vector<std::vector<lattice_element>> result;
      int n = static_cast<int>(atoms_.size());
      std::vector<int> idx(k);
      for (int i = 0; i < k; ++i) {
        idx[i] = i;
      }
      if (k > n) {
        return result;
      }
      while (true) {
        std::vector<lattice_element> set;
        for (int i : idx) {
          set.push_back(atoms_[i]);
        }
        result.push_back(set);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) {
          --i;
        }
        if (i < 0) {
          break;
        }
        ++idx[i];
        for (int j = i + 1; j < k; ++j) {
          idx[j] = idx[j - 1] + 1;
        }
      }
      return result;
    }

    lattice_element octa_atom(int ell, std::set<int> const& pos) {
      std::vector<int> row;
      for (int i = 1; i <= ell; ++i) {
        row.push_back(pos.count(i) ? i : -i);
      }
      return one_row(row);
    }

    // hatted-index product for a proper face of the octahedron: with
    // missing indices i_1 < ... < i_k and positive part P, the word is
    // alpha(P)        alpha({i_1} u P)                    for k = 1 and
    // alpha without i_1, ..., alpha without i_k            for k > 1
    word octa_epsilon(int ell, lattice_element const& e,
                      std::map<lattice_element, word> const& alpha) {
      std::set<int> present, pos;
      for (int v : e.data[0]) {
        present.insert(std::abs(v));
        if (v > 0) {
          pos.insert(v);
        }
      }
      std::vector<int> missing;
      for (int i = 1; i <= ell; ++i) {
        if (!present.count(i)) {
          missing.push_back(i);
        }
      }
      if (missing.empty()) {
        return alpha.at(octa_atom(ell, pos));
      }
      if (missing.size() == 1) {
        auto with = pos;
        with.insert(missing[0]);
        return cat({alpha.at(octa_atom(ell, pos)),
                    alpha.at(octa_atom(ell, with))});
      }
      word w;
      for (size_t j = 0; j < missing.size(); ++j) {
        auto part = pos;
        for (size_t t = 0; t < missing.size(); ++t) {
          if (t != j) {
            part.insert(missing[t]);
          }
        }
        auto const& a = alpha.at(octa_atom(ell, part));
        w.insert(w.end(), a.begin(), a.end());
      }
      return w;
    }

  }  // namespace

  lattice_element atom_named(lattice_kind const& kind,
                             std::string const&  name) {
    for (auto const& a : atoms(kind)) {
      if (lattice_atom_name(kind, a) == name) {
        return a;
      }
    }
    throw std::invalid_argument("atom_named: no atom called " + name);
  }

  presentation present_general(system_kind const& kind, present_mode mode) {
    auto lat  = system_lattice(kind);
    auto gens = generators(kind.type, kind.n);
    auto all  = atoms(lat);

    presentation p;
    p.family = to_string(kind);
    p.params = {kind.n};
    add_unit_generators(p, kind.type, kind.n);

    std::map<lattice_element, word> alpha;  // atom -> word
    std::vector<int>                idem_gens;
    if (mode == present_mode::full) {
      for (auto const& a : all) {
        int g = p.add_generator(lattice_atom_name(lat, a),
                                generator_kind::idempotent, -1, a);
        idem_gens.push_back(g);
        alpha[a] = {g};
      }
    } else {
      auto orb = orbit_reps(kind.type, kind.n, lat);
      std::map<lattice_element, int> rep_gen;
      for (auto const& r : orb.reps) {
        int g = p.add_generator(lattice_atom_name(lat, r),
                                generator_kind::idempotent, -1, r);
        idem_gens.push_back(g);
        rep_gen[r] = g;
      }
      for (auto const& a : all) {
        word wit   = orb.witness.at(a);
        word w     = rev(wit);
        w.push_back(rep_gen.at(orb.rep_of.at(a)));
        w.insert(w.end(), wit.begin(), wit.end());
        alpha[a] = w;
      }
    }

    add_unit_relations(p, kind.type, kind.n);

    // Idem1
    for (int g : idem_gens) {
      p.add_relation(relation_family::idem1, {g, g}, {g});
    }

    // Idem2
    if (mode == present_mode::full) {
      for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = i + 1; j < all.size(); ++j) {
          p.add_relation(relation_family::idem2,
                         cat({alpha[all[i]], alpha[all[j]]}),
                         cat({alpha[all[j]], alpha[all[i]]}));
        }
      }
    } else {
      for (auto const& pair : orbit_reps_k(kind.type, kind.n, lat, 2)) {
        p.add_relation(relation_family::idem2,
                       cat({alpha[pair[0]], alpha[pair[1]]}),
                       cat({alpha[pair[1]], alpha[pair[0]]}));
      }
    }

    // Idem3 / Idem3a.  The Boolean lattice has no dependent atom sets.
    int kmax = std::min(max_rank(lat) + 1, static_cast<int>(all.size()));
    if (kind.category == system_category::arrangement_sys) {
      if (mode == present_mode::full) {
        for (auto const& set : minimally_dependent_sets(lat)) {
          add_deletion_chain(p, set, alpha);
        }
      } else {
        for (int k = 3; k <= kmax; ++k) {
          for (auto const& set : orbit_reps_k(kind.type, kind.n, lat, k)) {
            if (is_minimally_dependent(lat, set)) {
              add_deletion_chain(p, set, alpha);
            }
          }
        }
      }
    } else if (kind.category != system_category::boolean_sys) {
      for (int k = 3; k <= kmax; ++k) {
        auto sets = mode == present_mode::full
                        ? all_subsets_k(all, k)
                        : orbit_reps_k(kind.type, kind.n, lat, k);
        for (auto const& set : sets) {
          add_idem3_instances(p, lat, set, alpha);
        }
      }
    }

    // RefIdem: s alpha(a) = alpha(a.s) s for every generator and atom
    for (size_t s = 0; s < gens.size(); ++s) {
      for (auto const& a : all) {
        auto moved = act(lat, a, gens[s]);
        p.add_relation(relation_family::ref_idem,
                       cat({{static_cast<int>(s)}, alpha[a]}),
                       cat({alpha[moved], {static_cast<int>(s)}}));
      }
    }

    // Iso
    if (mode == present_mode::full) {
      auto group = enumerate_group(kind.type, kind.n);
      for (auto const& e : elements(lat)) {
        word eps;
        for (auto const& a : all) {
          if (leq(lat, a, e)) {
            auto const& w = alpha[a];
            eps.insert(eps.end(), w.begin(), w.end());
          }
        }
        if (eps.empty()) {
          continue;
        }
        for (auto const& t : reflections(kind.type, kind.n)) {
          if (fixes_pointwise(kind, e, t)) {
            p.add_relation(relation_family::iso,
                           cat({eps, group.words[group.index.at(t)]}), eps);
          }
        }
      }
    } else {
      monoid_system sys(kind);
      for (auto const& [e, s] : sys.iso_pairs()) {
        word eps;
        if (kind.category == system_category::octa_sys) {
          eps = octa_epsilon(kind.n, e, alpha);
        } else {
          for (auto const& a : all) {
            if (leq(lat, a, e)) {
              auto const& w = alpha[a];
              eps.insert(eps.end(), w.begin(), w.end());
            }
          }
        }
        p.add_relation(relation_family::iso, cat({eps, {s}}), eps);
      }
    }
    return p;
  }

  // Boolean closed forms /////////////////////////////////////////////////

  word boolean_alpha(coxeter_type type, int n, int i) {
    int a = unit_count(type, n);
    if (i == 1) {
      return {a};
    }
    return cat({sdesc(type, i - 1, 1), {a}, sasc(type, 1, i - 1)});
  }

  presentation present_boolean(coxeter_type type, int n) {
    if (n < (type == coxeter_type::D ? 4 : 2)) {
      throw std::invalid_argument("present_boolean: parameter out of range");
    }
    presentation p;
    p.family = type == coxeter_type::A   ? "boolean-a"
               : type == coxeter_type::B ? "boolean-b"
                                         : "boolean-d";
    p.params = {n};
    add_unit_generators(p, type, n);
    std::vector<int> row;
    for (int i = 2; i <= n; ++i) {
      row.push_back(i);
    }
    int a = p.add_generator("a", generator_kind::idempotent, -1,
                            one_row(row));
    add_unit_relations(p, type, n);
    auto s = [&](int label) { return s_index(type, label); };

    p.add_relation(relation_family::idem1, {a, a}, {a});
    if (type == coxeter_type::A) {
      for (int i = 2; i < n; ++i) {
        p.add_relation(relation_family::ref_idem, {s(i), a}, {a, s(i)});
      }
      p.add_relation(relation_family::iso, {a, s(1), a},
                     {a, s(1), a, s(1)});
      p.add_relation(relation_family::idem2, {a, s(1), a, s(1)},
                     {s(1), a, s(1), a});
    } else if (type == coxeter_type::B) {
      for (int i = 0; i < n; ++i) {
        if (i != 1) {
          p.add_relation(relation_family::ref_idem, {s(i), a}, {a, s(i)});
        }
      }
      p.add_relation(relation_family::iso, {a, s(0)}, {a});
      p.add_relation(relation_family::ref_idem, {s(0), s(1), a, s(1)},
                     {s(1), a, s(1), s(0)});
      p.add_relation(relation_family::idem2, {a, s(1), a, s(1)},
                     {s(1), a, s(1), a});
      p.add_relation(relation_family::iso, {s(1), a, s(1), a},
                     {a, s(1), a});
    } else {
      for (int i = 2; i < n; ++i) {
        p.add_relation(relation_family::ref_idem, {s(i), a}, {a, s(i)});
      }
      p.add_relation(relation_family::ref_idem, {s(0), a},
                     {s(1), a, s(1), s(0)});
      p.add_relation(relation_family::iso, {a, s(1), a},
                     {a, s(1), a, s(1)});
      p.add_relation(relation_family::idem2, {a, s(1), a, s(1)},
                     {s(1), a, s(1), a});
      p.add_relation(relation_family::ref_idem,
                     {s(0), s(2), s(1), a, s(1), s(2)},
                     {s(2), s(1), a, s(1), s(2), s(0)});
    }
    return p;
  }

  // Arrangement closed forms /////////////////////////////////////////////

  word arrangement_alpha(coxeter_type type, int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) {
      throw std::invalid_argument("arrangement_alpha: bad indices");
    }
    int a = unit_count(type, n);  // a (types A, D) or a1 (type B)
    word core{a};
    if (i == 1 && j == 2) {
      return core;
    }
    if (i == 1) {
      return cat({sdesc(type, j - 1, 2), core, sasc(type, 2, j - 1)});
    }
    return cat({sdesc(type, i - 1, 1), sdesc(type, j - 1, 2), core,
                sasc(type, 2, j - 1), sasc(type, 1, i - 1)});
  }

  word arrangement_delta(coxeter_type type, int n, int i, int j) {
    if (type == coxeter_type::A || !(1 <= i && i < j && j <= n)) {
      throw std::invalid_argument("arrangement_delta: bad indices");
    }
    int  a = unit_count(type, n);
    word core;
    if (type == coxeter_type::B) {
      core = {s_index(type, 0), a, s_index(type, 0)};
    } else {
      word g{s_index(type, 2), s_index(type, 1), s_index(type, 0),
             s_index(type, 2)};
      core = cat({rev(g), {a}, g});
    }
    if (i == 1 && j == 2) {
      return core;
    }
    if (i == 1) {
      return cat({sdesc(type, j - 1, 2), core, sasc(type, 2, j - 1)});
    }
    return cat({sdesc(type, i - 1, 1), sdesc(type, j - 1, 2), core,
                sasc(type, 2, j - 1), sasc(type, 1, i - 1)});
  }

  word arrangement_epsilon(int n, int i) {
    if (!(1 <= i && i <= n)) {
      throw std::invalid_argument("arrangement_epsilon: bad index");
    }
    auto type = coxeter_type::B;
    int  a2   = unit_count(type, n) + 1;
    if (i == 1) {
      return {a2};
    }
    return cat({sdesc(type, i - 1, 1), {a2}, sasc(type, 1, i - 1)});
  }

  presentation present_arrangement(coxeter_type type, int n) {
    if (n < 2 || (type == coxeter_type::D && n < 4)) {
      throw std::invalid_argument(
          "present_arrangement: parameter out of range");
    }
    std::string family = type == coxeter_type::A   ? "arr-a"
                         : type == coxeter_type::B ? "arr-b"
                                                   : "arr-d";
    if (n < 4) {
      auto p   = present_general({system_category::arrangement_sys, type, n},
                                 present_mode::thinned);
      p.family = family;
      p.params = {n};
      return p;
    }
    auto lat = system_lattice({system_category::arrangement_sys, type, n});

    presentation p;
    p.family = family;
    p.params = {n};
    add_unit_generators(p, type, n);
    auto s  = [&](int label) { return s_index(type, label); };
    auto al = [&](int i, int j) { return arrangement_alpha(type, n, i, j); };
    auto add = [&](relation_family f, word lhs, word rhs) {
      p.add_relation(f, std::move(lhs), std::move(rhs));
    };
    using rf = relation_family;

    if (type == coxeter_type::A) {
      int a = p.add_generator("a", generator_kind::idempotent, -1,
                              atom_named(lat, "a12"));
      add_unit_relations(p, type, n);
      add(rf::idem1, {a, a}, {a});
      add(rf::iso, {a, s(1)}, {a});
      for (int i = 1; i < n; ++i) {
        if (i != 2) {
          add(rf::ref_idem, {s(i), a}, {a, s(i)});
        }
      }
      add(rf::idem2, cat({{a}, al(2, 3)}), cat({al(2, 3), {a}}));
      add(rf::idem2, cat({{a}, al(3, 4)}), cat({al(3, 4), {a}}));
      add(rf::idem3a, cat({{a}, al(1, 3)}), cat({{a}, al(2, 3)}));
      add(rf::idem3a, cat({{a}, al(2, 3)}), cat({al(1, 3), al(2, 3)}));
      return p;
    }

    if (type == coxeter_type::B) {
      int a1 = p.add_generator("a1", generator_kind::idempotent, -1,
                               atom_named(lat, "a12"));
      int a2 = p.add_generator("a2", generator_kind::idempotent, -1,
                               atom_named(lat, "e1"));
      auto dl = [&](int i, int j) {
        return arrangement_delta(type, n, i, j);
      };
      auto ep = [&](int i) { return arrangement_epsilon(n, i); };
      add_unit_relations(p, type, n);
      add(rf::idem1, {a1, a1}, {a1});
      add(rf::idem1, {a2, a2}, {a2});
      add(rf::iso, {a1, s(1)}, {a1});
      add(rf::iso, {a2, s(0)}, {a2});
      for (int i = 1; i < n; ++i) {
        if (i != 2) {
          add(rf::ref_idem, {s(i), a1}, {a1, s(i)});
        }
      }
      for (int i = 0; i < n; ++i) {
        if (i != 1) {
          add(rf::ref_idem, {s(i), a2}, {a2, s(i)});
        }
      }
      for (int j = 3; j <= n; ++j) {
        add(rf::ref_idem, cat({{s(0)}, al(2, j)}), cat({al(2, j), {s(0)}}));
      }
      for (int j = 3; j <= n; ++j) {
        add(rf::ref_idem, cat({{s(0)}, dl(2, j)}), cat({dl(2, j), {s(0)}}));
      }
      add(rf::ref_idem, cat({{s(1)}, dl(1, 2)}), cat({dl(1, 2), {s(1)}}));
      add(rf::ref_idem, cat({{s(0)}, ep(2)}), cat({ep(2), {s(0)}}));
      add(rf::idem2, cat({{a1}, al(2, 3)}), cat({al(2, 3), {a1}}));
      add(rf::idem2, cat({{a2}, al(2, 3)}), cat({al(2, 3), {a2}}));
      add(rf::idem2, {a1, a2}, {a2, a1});
      add(rf::idem3a, {a2, a1}, cat({{a2}, ep(2)}));
      add(rf::idem2, cat({{a2}, ep(2)}), cat({ep(2), {a2}}));
      add(rf::idem3a, cat({ep(2), {a2}}), cat({dl(1, 2), {a2}}));
      add(rf::idem2, cat({{a1}, dl(1, 2)}), cat({dl(1, 2), {a1}}));
      // the dependent triple {a1, delta_12, a2} needs its third deletion
      // product identified as well; without this the presented monoid is
      // strictly larger than the concrete one already at n = 4
      add(rf::idem3a, cat({{a1}, dl(1, 2)}), {a1, a2});
      add(rf::idem3a, cat({{a1}, al(1, 3)}), cat({{a1}, al(2, 3)}));
      add(rf::idem3a, cat({{a1}, al(2, 3)}), cat({al(1, 3), al(2, 3)}));
      add(rf::idem2, cat({{a1}, al(3, 4)}), cat({al(3, 4), {a1}}));
      add(rf::idem3a, cat({{a1}, dl(1, 3)}), cat({dl(1, 3), dl(2, 3)}));
      add(rf::idem3a, cat({dl(1, 3), dl(2, 3)}), cat({{a1}, dl(2, 3)}));
      add(rf::idem3a, cat({{a1}, al(2, 3), dl(1, 3)}),
          cat({{a2}, ep(2), ep(3)}));
      return p;
    }

    // type D
    int a = p.add_generator("a", generator_kind::idempotent, -1,
                            atom_named(lat, "a12"));
    auto dl = [&](int i, int j) { return arrangement_delta(type, n, i, j); };
    add_unit_relations(p, type, n);
    add(rf::idem1, {a, a}, {a});
    add(rf::iso, {a, s(1)}, {a});
    for (int i = 0; i < n; ++i) {
      if (i != 2) {
        add(rf::ref_idem, {s(i), a}, {a, s(i)});
      }
    }
    for (int j = 4; j <= n; ++j) {
      add(rf::ref_idem, cat({{s(0)}, al(3, j)}), cat({al(3, j), {s(0)}}));
    }
    for (int j = 4; j <= n; ++j) {
      add(rf::ref_idem, cat({{s(0)}, dl(3, j)}), cat({dl(3, j), {s(0)}}));
    }
    add(rf::ref_idem, cat({{s(3)}, dl(1, 2)}), cat({dl(1, 2), {s(3)}}));
    add(rf::idem2, cat({{a}, al(3, 4)}), cat({al(3, 4), {a}}));
    add(rf::idem2, cat({{a}, dl(1, 2)}), cat({dl(1, 2), {a}}));
    add(rf::idem3a, cat({{a}, al(1, 3)}), cat({{a}, al(2, 3)}));
    add(rf::idem2, cat({{a}, al(2, 3)}), cat({al(2, 3), {a}}));
    add(rf::idem3a, cat({al(2, 3), {a}}), cat({al(1, 3), al(2, 3)}));
    add(rf::idem3a, cat({{a}, dl(1, 3)}), cat({dl(1, 3), dl(2, 3)}));
    add(rf::idem3a, cat({dl(1, 3), dl(2, 3)}), cat({{a}, dl(2, 3)}));
    add(rf::idem3a, cat({{a}, al(2, 3), dl(2, 3)}),
        cat({{a}, dl(1, 2), dl(2, 3)}));
    add(rf::idem3a, cat({{a}, dl(1, 2), dl(2, 3)}),
        cat({{a}, al(2, 3), dl(1, 2), dl(2, 3)}));
    add(rf::idem3a, cat({{a}, al(2, 3), dl(1, 3)}),
        cat({{a}, al(1, 3), al(2, 3), dl(1, 3)}));
    add(rf::idem3a, cat({{a}, al(2, 3), al(3, 4), dl(1, 2), dl(2, 3),
                         dl(3, 4)}),
        cat({{a}, al(3, 4), dl(1, 2), dl(3, 4)}));
    if (n == 4) {
      add(rf::idem2, cat({{a}, dl(3, 4)}), cat({dl(3, 4), {a}}));
    }
    return p;
  }

  // Renner closed forms //////////////////////////////////////////////////

  std::string to_string(renner_family f) {
    switch (f) {
      case renner_family::general_linear:
        return "renner-gl";
      case renner_family::symplectic:
        return "renner-sp";
      case renner_family::orthogonal_odd:
        return "renner-so-odd";
      case renner_family::orthogonal_even:
        return "renner-so-even";
      case renner_family::solomon:
        return "renner-solomon";
    }
    throw std::invalid_argument("to_string: bad renner family");
  }

  system_kind renner_system(renner_family f, int param) {
    switch (f) {
      case renner_family::general_linear:
        return {system_category::boolean_sys, coxeter_type::A, param};
      case renner_family::symplectic:
      case renner_family::orthogonal_odd:
        return {system_category::octa_sys, coxeter_type::B, param};
      case renner_family::orthogonal_even:
        return {system_category::octa_sys, coxeter_type::D, param};
      case renner_family::solomon:
        return {system_category::permutohedron_sys, coxeter_type::A, param};
    }
    throw std::invalid_argument("renner_system: bad family");
  }

  namespace {

    // omega_i = s_{i-1} .. s_1 s_0 s_1 .. s_{i-1} (type B sign change at i)
    word omega_b(int i) {
      word w;
      for (int l = i - 1; l >= 1; --l) {
        w.push_back(l);
      }
      w.push_back(0);
      for (int l = 1; l <= i - 1; ++l) {
        w.push_back(l);
      }
      return w;
    }

    // omega_ij = s_{i-1}..s_1 s_{j-1}..s_2 s_0 s_2..s_{j-1} s_1..s_{i-1}
    // (type D double sign change at i < j)
    word omega_d(int i, int j) {
      word mid;
      for (int l = j - 1; l >= 2; --l) {
        mid.push_back(l);
      }
      mid.push_back(0);
      for (int l = 2; l <= j - 1; ++l) {
        mid.push_back(l);
      }
      word w;
      for (int l = i - 1; l >= 1; --l) {
        w.push_back(l);
      }
      w.insert(w.end(), mid.begin(), mid.end());
      for (int l = 1; l <= i - 1; ++l) {
        w.push_back(l);
      }
      return w;
    }

  }  // namespace

  word renner_alpha(renner_family f, int ell, std::vector<int> I) {
    std::sort(I.begin(), I.end());
    if (f == renner_family::symplectic
        || f == renner_family::orthogonal_odd) {
      word w;
      for (int i : I) {
        auto o = omega_b(i);
        w.insert(w.end(), o.begin(), o.end());
      }
      return cat({w, {ell}, rev(w)});
    }
    if (f != renner_family::orthogonal_even) {
      throw std::invalid_argument("renner_alpha: bad family");
    }
    int  k = static_cast<int>(I.size());
    word w;
    for (int t = 0; t + 1 < k; t += 2) {
      auto o = omega_d(I[t], I[t + 1]);
      w.insert(w.end(), o.begin(), o.end());
    }
    if (k % 2 == 0) {
      return cat({w, {ell}, rev(w)});  // a1
    }
    for (int l = I[k - 1] - 1; l >= 1; --l) {
      w.push_back(l);
    }
    return cat({w, {ell + 1}, rev(w)});  // a2
  }

  namespace {

    std::vector<int> range_set(int lo, int hi) {  // {lo..hi}, empty if lo>hi
      std::vector<int> v;
      for (int i = lo; i <= hi; ++i) {
        v.push_back(i);
      }
      return v;
    }

    // positive-part substitution for the action of a generator on an atom
    std::vector<int> atom_moved(coxeter_type type, int ell,
                                std::vector<int> I, int s) {
      std::set<int> pos(I.begin(), I.end());
      if (s == 0 && type == coxeter_type::B) {
        if (pos.count(1)) {
          pos.erase(1);
        } else {
          pos.insert(1);
        }
      } else if (s == 0) {  // type D: fixed when exactly one of 1, 2 is in
        int c = static_cast<int>(pos.count(1)) + static_cast<int>(pos.count(2));
        if (c != 1) {
          for (int v : {1, 2}) {
            if (pos.count(v)) {
              pos.erase(v);
            } else {
              pos.insert(v);
            }
          }
        }
      } else {
        bool a = pos.count(s) > 0, b = pos.count(s + 1) > 0;
        if (a != b) {
          if (a) {
            pos.erase(s);
            pos.insert(s + 1);
          } else {
            pos.erase(s + 1);
            pos.insert(s);
          }
        }
      }
      (void) ell;
      return std::vector<int>(pos.begin(), pos.end());
    }

    void add_octa_idem3(presentation& p, renner_family f, int ell,
                        lattice_kind const& lat) {
      auto al = [&](std::vector<int> const& I) {
        return renner_alpha(f, ell, I);
      };
      auto atom_of = [&](std::vector<int> const& I) {
        return octa_atom(ell, std::set<int>(I.begin(), I.end()));
      };
      for (int k = 3; k <= ell + 1; ++k) {
        for (auto const& fmap : char_maps(ell, k)) {
          auto tuple = realize_tuple(fmap);
          bool dup   = false;
          for (size_t i = 0; i < tuple.size() && !dup; ++i) {
            for (size_t j = i + 1; j < tuple.size(); ++j) {
              if (tuple[i] == tuple[j]) {
                dup = true;
                break;
              }
            }
          }
          if (dup) {
            continue;
          }
          std::vector<lattice_element> first;
          for (int i = 0; i + 1 < k; ++i) {
            first.push_back(atom_of(tuple[i]));
          }
          if (!is_independent(lat, first)
              || !leq(lat, atom_of(tuple[k - 1]), join_all(lat, first))) {
            continue;
          }
          word lhs;
          for (int i = 0; i + 1 < k; ++i) {
            auto w = al(tuple[i]);
            lhs.insert(lhs.end(), w.begin(), w.end());
          }
          p.add_relation(relation_family::idem3, lhs,
                         cat({lhs, al(tuple[k - 1])}));
        }
      }
    }

    // subsets of the given ground set in increasing mask order
    std::vector<std::vector<int>>
    subsets_of(std::vector<int> const& ground) {
      std::vector<std::vector<int>> result;
      int m = static_cast<int>(ground.size());
      for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> s;
        for (int b = 0; b < m; ++b) {
          if (mask & (1 << b)) {
            s.push_back(ground[b]);
          }
        }
        result.push_back(s);
      }
      return result;
    }

    std::vector<int> with(std::vector<int> I, int extra) {
      I.push_back(extra);
      std::sort(I.begin(), I.end());
      return I;
    }

    presentation present_octa_renner(renner_family f, int ell) {
      bool even = f == renner_family::orthogonal_even;
      if (ell < (even ? 4 : 2)) {
        throw std::invalid_argument("present_renner: parameter out of range");
      }
      auto type = even ? coxeter_type::D : coxeter_type::B;
      lattice_kind lat{lattice_family::octa_face, ell};

      presentation p;
      p.family = to_string(f);
      p.params = {ell};
      add_unit_generators(p, type, ell);
      std::vector<int> neg;
      for (int i = 1; i <= ell; ++i) {
        neg.push_back(-i);
      }
      auto al = [&](std::vector<int> const& I) {
        return renner_alpha(f, ell, I);
      };
      if (even) {
        p.add_generator("a1", generator_kind::idempotent, -1, one_row(neg));
        auto a2row = neg;
        a2row[0]   = 1;
        p.add_generator("a2", generator_kind::idempotent, -1, one_row(a2row));
      } else {
        p.add_generator("a", generator_kind::idempotent, -1, one_row(neg));
      }
      add_unit_relations(p, type, ell);

      // Idem1
      if (even) {
        p.add_relation(relation_family::idem1, {ell, ell}, {ell});
        p.add_relation(relation_family::idem1, {ell + 1, ell + 1}, {ell + 1});
      } else {
        p.add_relation(relation_family::idem1, {ell, ell}, {ell});
      }

      // Idem2: initial-segment pairs
      for (int j1 = 0; j1 < ell; ++j1) {
        for (int j2 = j1 + 1; j2 <= ell; ++j2) {
          for (int eps = even ? 0 : 1; eps <= 1; ++eps) {
            if (eps == 0 && j1 == 0) {
              continue;
            }
            auto I = range_set(1, j1);
            auto K = range_set(j1 + eps, j2);
            p.add_relation(relation_family::idem2, cat({al(I), al(K)}),
                           cat({al(K), al(I)}));
          }
        }
      }

      add_octa_idem3(p, f, ell, lat);

      // RefIdem: s alpha(I) = alpha(I.s) s for every generator and subset
      auto ground = range_set(1, ell);
      for (int s = 0; s < ell; ++s) {
        for (auto const& I : subsets_of(ground)) {
          p.add_relation(relation_family::ref_idem, cat({{s}, al(I)}),
                         cat({al(atom_moved(type, ell, I, s)), {s}}));
        }
      }

      // Iso
      for (auto const& I : subsets_of(range_set(3, ell))) {
        word e = cat({al(with(I, 1)), al(with(I, 2))});
        p.add_relation(relation_family::iso, cat({e, {1}}), e);
      }
      if (!even) {
        for (auto const& I : subsets_of(range_set(2, ell))) {
          word e = cat({al(I), al(with(I, 1))});
          p.add_relation(relation_family::iso, cat({e, {0}}), e);
        }
      }
      return p;
    }

    presentation present_solomon(int n) {
      if (n < 3) {
        throw std::invalid_argument("present_renner: parameter out of range");
      }
      lattice_kind lat{lattice_family::permutohedron, n - 1};

      presentation p;
      p.family = "renner-solomon";
      p.params = {n};
      add_unit_generators(p, coxeter_type::A, n);
      auto digits = [](std::vector<int> const& v) {
        std::string s;
        for (int x : v) {
          s += std::to_string(x);
        }
        return s;
      };
      for (int i = 1; i < n; ++i) {
        p.add_generator("a" + std::to_string(i), generator_kind::idempotent,
                        -1, atom_named(lat, "p" + digits(range_set(1, i))));
      }
      add_unit_relations(p, coxeter_type::A, n);

      auto al = [&](std::vector<int> const& J) { return solomon_alpha(n, J); };

      for (int i = 1; i < n; ++i) {
        int g = n - 2 + i;
        p.add_relation(relation_family::idem1, {g, g}, {g});
      }

      // Idem2 over the initial-segment orbit parameters
      for (int n1 = 1; n1 < n; ++n1) {
        for (int n2 = 1; n2 < n; ++n2) {
          for (int n0 = 0; n0 <= std::min(n1, n2); ++n0) {
            if (n1 + n2 - n0 > n || (n0 == n1 && n0 == n2)) {
              continue;
            }
            auto J = range_set(1, n1);
            auto K = range_set(1, n0);
            for (int x : range_set(n1 + 1, n1 + n2 - n0)) {
              K.push_back(x);
            }
            p.add_relation(relation_family::idem2, cat({al(J), al(K)}),
                           cat({al(K), al(J)}));
          }
        }
      }

      // Idem3 over the three-set box parameters, incomparable leading pair
      {
        struct box {
          std::vector<int> members;  // which of J1, J2, J3 contain the box
          int              size;
        };
        for (int n0 = 0; n0 <= n; ++n0) {
          for (int n1 = n0; n1 <= n; ++n1) {
            for (int n2 = n0; n2 <= n; ++n2) {
              for (int n3 = n0; n3 <= n; ++n3) {
                for (int n12 = std::max(1, n1 + n2 - n0); n12 < n; ++n12) {
                  for (int n13 = std::max(1, n1 + n3 - n0); n13 < n; ++n13) {
                    for (int n23 = std::max(1, n2 + n3 - n0); n23 < n;
                         ++n23) {
                      int total = n12 + n13 + n23 - n1 - n2 - n3 + n0;
                      if (total > n) {
                        continue;
                      }
                      std::vector<box> boxes{
                          {{1, 2, 3}, n0},          {{2, 3}, n1 - n0},
                          {{1, 3}, n2 - n0},        {{1, 2}, n3 - n0},
                          {{3}, n12 - n1 - n2 + n0}, {{2}, n13 - n1 - n3 + n0},
                          {{1}, n23 - n2 - n3 + n0}};
                      std::vector<std::vector<int>> J(4);
                      int next = 1;
                      for (auto const& b : boxes) {
                        for (int t = 0; t < b.size; ++t, ++next) {
                          for (int m : b.members) {
                            J[m].push_back(next);
                          }
                        }
                      }
                      for (auto& j : J) {
                        std::sort(j.begin(), j.end());
                      }
                      if (J[1] == J[2] || J[1] == J[3] || J[2] == J[3]) {
                        continue;
                      }
                      // J1 and J2 incomparable
                      std::vector<int> inter;
                      std::set_intersection(J[1].begin(), J[1].end(),
                                            J[2].begin(), J[2].end(),
                                            std::back_inserter(inter));
                      if (inter == J[1] || inter == J[2]) {
                        continue;
                      }
                      p.add_relation(relation_family::idem3,
                                     cat({al(J[1]), al(J[2])}),
                                     cat({al(J[1]), al(J[2]), al(J[3])}));
                    }
                  }
                }
              }
            }
          }
        }
      }

      // RefIdem: s_i alpha_J = alpha_{J.s_i} s_i for all i and proper J
      for (int i = 1; i < n; ++i) {
        for (int mask = 1; mask < (1 << n) - 1; ++mask) {
          std::vector<int> J;
          for (int v = 1; v <= n; ++v) {
            if (mask & (1 << (v - 1))) {
              J.push_back(v);
            }
          }
          std::vector<int> moved;
          for (int v : J) {
            moved.push_back(v == i ? i + 1 : v == i + 1 ? i : v);
          }
          std::sort(moved.begin(), moved.end());
          p.add_relation(relation_family::ref_idem, cat({{i - 1}, al(J)}),
                         cat({al(moved), {i - 1}}));
        }
      }

      // Iso: the product over all proper nonempty subsets absorbs s_1
      {
        std::vector<std::vector<int>> all;
        for (int mask = 1; mask < (1 << n) - 1; ++mask) {
          std::vector<int> J;
          for (int v = 1; v <= n; ++v) {
            if (mask & (1 << (v - 1))) {
              J.push_back(v);
            }
          }
          all.push_back(J);
        }
        std::sort(all.begin(), all.end(),
                  [](std::vector<int> const& x, std::vector<int> const& y) {
                    return x.size() != y.size() ? x.size() < y.size()
                                                : x < y;
                  });
        word prod;
        for (auto const& J : all) {
          auto w = solomon_alpha(n, J);
          prod.insert(prod.end(), w.begin(), w.end());
        }
        p.add_relation(relation_family::iso, cat({prod, {0}}), prod);
      }
      return p;
    }

  }  // namespace

  word solomon_alpha(int n, std::vector<int> J) {
    std::sort(J.begin(), J.end());
    int k = static_cast<int>(J.size());
    if (k == 0 || k == n) {
      throw std::invalid_argument("solomon_alpha: J must be proper nonempty");
    }
    int a = n - 2 + k;  // a_k
    if (J.back() == k) {
      return {a};  // J = {1..k}
    }
    signed_perm g = sp_identity(n);
    int         t = 1;
    for (int j : J) {
      g.img[j - 1] = t++;
    }
    for (int r = 1; r <= n; ++r) {
      if (!std::binary_search(J.begin(), J.end(), r)) {
        g.img[r - 1] = t++;
      }
    }
    auto group = enumerate_group(coxeter_type::A, n);
    word w     = group.words[group.index.at(g)];
    return cat({w, {a}, rev(w)});
  }

  presentation present_renner(renner_family f, int param) {
    switch (f) {
      case renner_family::general_linear: {
        if (param < 2) {
          throw std::invalid_argument(
              "present_renner: parameter out of range");
        }
        auto p   = present_boolean(coxeter_type::A, param);
        p.family = "renner-gl";
        return p;
      }
      case renner_family::symplectic:
      case renner_family::orthogonal_odd:
      case renner_family::orthogonal_even:
        return present_octa_renner(f, param);
      case renner_family::solomon:
        return present_solomon(param);
    }
    throw std::invalid_argument("present_renner: bad family");
  }

  // Evaluation bridge //////////////////////////////////////////////////////

  std::vector<monoid_element> generator_images(presentation const& p,
                                               monoid_system const& sys) {
    auto gens = generators(sys.kind().type, sys.kind().n);
    std::vector<monoid_element> images;
    for (auto const& g : p.generators) {
      if (g.kind == generator_kind::unit) {
        images.push_back(sys.unit(gens.at(g.unit_index)));
      } else {
        images.push_back(sys.idempotent(g.atom));
      }
    }
    return images;
  }

  concrete_monoid realize(presentation const& p,
                          system_kind const&  kind,
                          size_t              cap) {
    monoid_system sys(kind);
    auto          closure = enumerate_closure(sys, generator_images(p, sys),
                                              cap);
    return {closure.cayley};
  }

}  // namespace refmon
