//
// refmon - concrete reflection monoids as (domain, coset representative)
// pairs over a lattice-with-group system.
//

#include "refmon/monoid_system.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace refmon {

  namespace {

    void check_kind(system_kind const& kind) {
      switch (kind.category) {
        case system_category::boolean_sys:
        case system_category::arrangement_sys:
          if (kind.type == coxeter_type::D ? kind.n < 4 : kind.n < 2) {
            throw std::invalid_argument("system_kind: parameter out of range");
          }
          return;
        case system_category::octa_sys:
          if (kind.type == coxeter_type::A
              || (kind.type == coxeter_type::B && kind.n < 2)
              || (kind.type == coxeter_type::D && kind.n < 4)) {
            throw std::invalid_argument("system_kind: bad octahedron system");
          }
          return;
        case system_category::permutohedron_sys:
          if (kind.type != coxeter_type::A || kind.n < 2) {
            throw std::invalid_argument(
                "system_kind: bad permutohedron system");
          }
          return;
      }
      throw std::invalid_argument("system_kind: bad category");
    }

  }  // namespace

  lattice_kind system_lattice(system_kind const& kind) {
    check_kind(kind);
    switch (kind.category) {
      case system_category::boolean_sys:
        return {lattice_family::boolean, kind.n};
      case system_category::arrangement_sys:
        return {kind.type == coxeter_type::A   ? lattice_family::partition
                : kind.type == coxeter_type::B ? lattice_family::coupled_t
                                               : lattice_family::coupled_to,
                kind.n};
      case system_category::octa_sys:
        return {lattice_family::octa_face, kind.n};
      case system_category::permutohedron_sys:
        return {lattice_family::permutohedron, kind.n - 1};
    }
    throw std::invalid_argument("system_lattice: bad category");
  }

  int system_group_rank(system_kind const& kind) {
    check_kind(kind);
    return kind.n;
  }

  std::string to_string(system_kind const& kind) {
    std::string t = kind.type == coxeter_type::A   ? "A"
                    : kind.type == coxeter_type::B ? "B"
                                                   : "D";
    switch (kind.category) {
      case system_category::boolean_sys:
        return "BooleanSys(" + t + "," + std::to_string(kind.n) + ")";
      case system_category::arrangement_sys:
        return "ArrangementSys(" + t + "," + std::to_string(kind.n) + ")";
      case system_category::octa_sys:
        return "OctaSys(" + t + "," + std::to_string(kind.n) + ")";
      case system_category::permutohedron_sys:
        return "PermutohedronSys(" + std::to_string(kind.n) + ")";
    }
    throw std::invalid_argument("to_string: bad category");
  }

  namespace {

    // a generic point of the subspace of an arrangement element: one value
    // per block, 0 on the coupled part, fresh values on untouched indices
    std::vector<int> generic_point(lattice_kind const&    lat,
                                   lattice_element const& x,
                                   int                    n) {
      std::vector<int> v(n + 1, 0);
      int              next = 1;
      if (lat.family == lattice_family::partition) {
        for (auto const& blk : x.data) {
          int c = next++;
          for (int i : blk) {
            v[i] = c;
          }
        }
      } else {
        // data[0] is the coupled part (value 0), later rows signed blocks
        for (size_t b = 1; b < x.data.size(); ++b) {
          int c = next++;
          for (int l : x.data[b]) {
            v[std::abs(l)] = l > 0 ? c : -c;
          }
        }
      }
      return v;
    }

    // interval rule: g fixes every lattice element above x
    bool fixes_interval(lattice_kind const&                 lat,
                        lattice_element const&              x,
                        signed_perm const&                  g,
                        std::vector<lattice_element> const& elts) {
      for (auto const& e : elts) {
        if (e.extreme || !leq(lat, x, e)) {
          continue;
        }
        if (!(act(lat, e, g) == e)) {
          return false;
        }
      }
      return true;
    }

    bool fixes_pointwise_impl(system_kind const&                  kind,
                              lattice_kind const&                 lat,
                              lattice_element const&              x,
                              signed_perm const&                  g,
                              std::vector<lattice_element> const* elts) {
      switch (kind.category) {
        case system_category::boolean_sys:
          // X(J) is spanned by the basis lines indexed by J
          for (int j : x.data[0]) {
            if (g.apply(j) != j) {
              return false;
            }
          }
          return true;
        case system_category::arrangement_sys: {
          auto v = generic_point(lat, x, kind.n);
          for (int i = 1; i <= kind.n; ++i) {
            int gi = g.apply(i);
            if ((gi > 0 ? v[gi] : -v[-gi]) != v[i]) {
              return false;
            }
          }
          return true;
        }
        case system_category::octa_sys:
          // the whole polytope's interval is everything; a proper face f_K
          // is fixed along with its whole interval iff K is fixed pointwise
          if (x.extreme) {
            return g == sp_identity(kind.n);
          }
          for (int k : x.data[0]) {
            if (g.apply(k) != k) {
              return false;
            }
          }
          return true;
        case system_category::permutohedron_sys: {
          if (x.extreme) {
            return true;  // the top's interval is just the top
          }
          if (elts != nullptr) {
            return fixes_interval(lat, x, g, *elts);
          }
          auto all = elements(lat);
          return fixes_interval(lat, x, g, all);
        }
      }
      throw std::invalid_argument("fixes_pointwise: bad category");
    }

  }  // namespace

  bool fixes_pointwise(system_kind const&     kind,
                       lattice_element const& x,
                       signed_perm const&     g) {
    auto lat = system_lattice(kind);
    if (g.n() != kind.n) {
      throw std::invalid_argument("fixes_pointwise: rank mismatch");
    }
    return fixes_pointwise_impl(kind, lat, x, g, nullptr);
  }

  std::vector<signed_perm> reflections(coxeter_type type, int n) {
    std::vector<signed_perm> result;
    auto transposition = [&](int i, int j, bool flip) {
      signed_perm g = sp_identity(n);
      g.img[i - 1]  = flip ? -j : j;
      g.img[j - 1]  = flip ? -i : i;
      return g;
    };
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        result.push_back(transposition(i, j, false));
        if (type != coxeter_type::A) {
          result.push_back(transposition(i, j, true));
        }
      }
    }
    if (type == coxeter_type::B) {
      for (int i = 1; i <= n; ++i) {
        signed_perm g = sp_identity(n);
        g.img[i - 1]  = -i;
        result.push_back(g);
      }
    }
    return result;
  }

  std::vector<signed_perm>
  fixed_hyperplane_atoms(system_kind const& kind, lattice_element const& e) {
    std::vector<signed_perm> result;
    for (auto const& t : reflections(kind.type, kind.n)) {
      if (fixes_pointwise(kind, e, t)) {
        result.push_back(t);
      }
    }
    return result;
  }

  monoid_system::monoid_system(system_kind const& kind)
      : _kind(kind),
        _lattice(system_lattice(kind)),
        _group(enumerate_group(kind.type, kind.n)),
        _elements(elements(_lattice)) {
    for (size_t i = 0; i < _elements.size(); ++i) {
      _index[_elements[i]] = static_cast<int>(i);
    }
    _isotropy.resize(_elements.size());
    for (size_t i = 0; i < _elements.size(); ++i) {
      for (size_t w = 0; w < _group.elements.size(); ++w) {
        if (fixes_pointwise_impl(_kind, _lattice, _elements[i],
                                 _group.elements[w], &_elements)) {
          _isotropy[i].push_back(static_cast<int>(w));
        }
      }
    }
  }

  std::vector<int> const&
  monoid_system::isotropy(lattice_element const& x) const {
    auto it = _index.find(x);
    if (it == _index.end()) {
      throw std::invalid_argument("isotropy: element not in the lattice");
    }
    return _isotropy[it->second];
  }

  monoid_element monoid_system::one() const {
    return {bottom(_lattice), sp_identity(_kind.n)};
  }

  monoid_element monoid_system::unit(signed_perm const& g) const {
    return canonical(bottom(_lattice), g);
  }

  monoid_element monoid_system::idempotent(lattice_element const& x) const {
    return canonical(x, sp_identity(_kind.n));
  }

  monoid_element monoid_system::canonical(lattice_element const& x,
                                          signed_perm const&     g) const {
    auto const&    iso = isotropy(x);
    monoid_element result{x, sp_multiply(_group.elements[iso[0]], g)};
    for (size_t i = 1; i < iso.size(); ++i) {
      signed_perm candidate = sp_multiply(_group.elements[iso[i]], g);
      if (candidate < result.unit) {
        result.unit = candidate;
      }
    }
    return result;
  }

  monoid_element monoid_system::multiply(monoid_element const& a,
                                         monoid_element const& b) const {
    lattice_element z = join(
        _lattice, a.domain, act(_lattice, b.domain, sp_inverse(a.unit)));
    return canonical(z, sp_multiply(a.unit, b.unit));
  }

  std::vector<std::pair<lattice_element, int>>
  monoid_system::iso_pairs() const {
    std::vector<std::pair<lattice_element, int>> result;
    auto gens = generators(_kind.type, _kind.n);
    for (int s : hyperplane_orbit_reps(_kind.type, _kind.n)) {
      std::vector<lattice_element> fixed;
      for (auto const& e : _elements) {
        if (fixes_pointwise_impl(_kind, _lattice, e, gens[s], &_elements)) {
          fixed.push_back(e);
        }
      }
      for (auto const& e : fixed) {
        bool minimal = true;
        for (auto const& f : fixed) {
          if (!(f == e) && leq(_lattice, f, e)) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          result.emplace_back(e, s);
        }
      }
    }
    return result;
  }

  enumerated_monoid<monoid_element>
  enumerate_closure(monoid_system const&               sys,
                    std::vector<monoid_element> const& generators,
                    size_t                             cap) {
    enumerated_monoid<monoid_element> result;
    std::map<monoid_element, int>     index;
    auto add = [&](monoid_element const& m) {
      auto it = index.find(m);
      if (it != index.end()) {
        return it->second;
      }
      if (result.elements.size() >= cap) {
        throw cap_exceeded("enumerate_closure: cap exceeded");
      }
      int id = static_cast<int>(result.elements.size());
      index[m] = id;
      result.elements.push_back(m);
      return id;
    };
    add(sys.one());
    for (size_t e = 0; e < result.elements.size(); ++e) {
      std::vector<int> row;
      for (auto const& g : generators) {
        row.push_back(add(sys.multiply(result.elements[e], g)));
      }
      result.cayley.push_back(row);
    }
    return result;
  }

  enumerated_monoid<monoid_element> enumerate_system(system_kind const& kind,
                                                     size_t             cap) {
    monoid_system               sys(kind);
    std::vector<monoid_element> gens;
    for (auto const& s : generators(kind.type, kind.n)) {
      gens.push_back(sys.unit(s));
    }
    for (auto const& a : atoms(sys.lattice())) {
      gens.push_back(sys.idempotent(a));
    }
    return enumerate_closure(sys, gens, cap);
  }

}  // namespace refmon
