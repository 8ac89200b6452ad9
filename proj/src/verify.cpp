//
// refmon - congruence enumeration and certification.
//

#include "refmon/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace refmon {

  size_t default_cap() {
    if (char const* env = std::getenv("REFMON_CAP")) {
      char*              end = nullptr;
      unsigned long long v   = std::strtoull(env, &end, 10);
      if (end != env && v > 0) {
        return static_cast<size_t>(v);
      }
    }
    return 1000000;
  }

  namespace {

    class tc_machine {
     public:
      tc_machine(size_t ngens, size_t cap) : _ngens(ngens), _cap(cap) {
        make_class();
      }

      int find(int c) {
        while (_parent[c] != c) {
          _parent[c] = _parent[_parent[c]];
          c          = _parent[c];
        }
        return c;
      }

      bool live(int c) { return find(c) == c; }

      int entry(int c, size_t g) {
        int t = _table[c][g];
        return t < 0 ? -1 : find(t);
      }

      // c * g, defining a new class when undefined
      int define(int c, size_t g) {
        c     = find(c);
        int t = entry(c, g);
        if (t >= 0) {
          return t;
        }
        int fresh    = make_class();
        _table[c][g] = fresh;
        _changed     = true;
        return fresh;
      }

      int trace(int c, word const& w) {
        for (int g : w) {
          c = define(c, static_cast<size_t>(g));
        }
        return c;
      }

      void coincide(int a, int b) {
        _pending.emplace_back(a, b);
        process_pending();
      }

      size_t live_count() {
        size_t n = 0;
        for (int c = 0; c < static_cast<int>(_parent.size()); ++c) {
          if (live(c)) {
            ++n;
          }
        }
        return n;
      }

      size_t class_count() const { return _parent.size(); }

      bool run(std::vector<relation> const& relations) {
        bool again = true;
        while (again) {
          again = false;
          _changed = false;
          for (int c = 0; c < static_cast<int>(_parent.size()); ++c) {
            if (!live(c)) {
              continue;
            }
            for (size_t g = 0; g < _ngens; ++g) {
              define(c, g);
            }
            for (auto const& r : relations) {
              int croot = find(c);
              int a     = trace(croot, r.lhs);
              int b     = trace(croot, r.rhs);
              if (a != b) {
                coincide(a, b);
                _changed = true;
              }
            }
            if (_parent.size() > 4 * _cap && live_count() > _cap) {
              return false;
            }
          }
          if (live_count() > _cap) {
            return false;
          }
          again = _changed;
        }
        return true;
      }

     private:
      int make_class() {
        _parent.push_back(static_cast<int>(_parent.size()));
        _table.emplace_back(_ngens, -1);
        return static_cast<int>(_parent.size()) - 1;
      }

      void process_pending() {
        while (!_pending.empty()) {
          auto [a, b] = _pending.front();
          _pending.pop_front();
          a = find(a);
          b = find(b);
          if (a == b) {
            continue;
          }
          if (b < a) {
            std::swap(a, b);
          }
          _parent[b] = a;  // the smaller index survives
          for (size_t g = 0; g < _ngens; ++g) {
            int tb = _table[b][g];
            if (tb < 0) {
              continue;
            }
            int ta = _table[a][g];
            if (ta < 0) {
              _table[a][g] = tb;
            } else if (find(ta) != find(tb)) {
              _pending.emplace_back(ta, tb);
            }
          }
        }
      }

      size_t                              _ngens;
      size_t                              _cap;
      std::vector<int>                    _parent;
      std::vector<std::vector<int>>       _table;
      std::deque<std::pair<int, int>>     _pending;
      bool                                _changed = false;
    };

  }  // namespace

  congruence_result todd_coxeter(presentation const& p, size_t cap) {
    for (auto const& r : p.relations) {
      for (word const* w : {&r.lhs, &r.rhs}) {
        for (int g : *w) {
          if (g < 0 || g >= static_cast<int>(p.generators.size())) {
            throw std::invalid_argument("todd_coxeter: bad generator index");
          }
        }
      }
    }
    tc_machine        machine(p.generators.size(), cap);
    congruence_result result;
    if (machine.run(p.relations)) {
      result.complete = true;
      result.order    = machine.live_count();
    }
    return result;
  }

  int concrete_monoid::evaluate(word const& w) const {
    int c = 0;
    for (int g : w) {
      if (c < 0 || c >= static_cast<int>(cayley.size()) || g < 0
          || g >= static_cast<int>(cayley[c].size())) {
        throw std::invalid_argument("concrete_monoid: bad index");
      }
      c = cayley[c][g];
    }
    return c;
  }

  relation_report check_relations(presentation const&    p,
                                  concrete_monoid const& m) {
    relation_report    report;
    std::ostringstream os;
    std::map<relation_family, int> idx;
    for (auto const& r : p.relations) {
      bool ok = m.evaluate(r.lhs) == m.evaluate(r.rhs);
      report.ok.push_back(ok);
      report.all_ok = report.all_ok && ok;
      os << to_string(r.family) << " " << idx[r.family]++ << " "
         << (ok ? "OK" : "FAIL") << "\n";
    }
    report.text = os.str();
    return report;
  }

  std::string to_string(verdict v) {
    switch (v) {
      case verdict::certified: return "Certified";
      case verdict::refuted: return "Refuted";
      case verdict::inconclusive: return "Inconclusive";
    }
    throw std::invalid_argument("to_string: bad verdict");
  }

  certify_report certify(presentation const&    p,
                         concrete_monoid const& m,
                         size_t                 cap) {
    certify_report report;
    auto           relations = check_relations(p, m);
    report.concrete_order    = m.order();

    auto tc = todd_coxeter(p, cap);
    report.presented_known = tc.complete;
    report.presented_order = tc.order;

    if (!relations.all_ok) {
      report.result = verdict::refuted;
    } else if (!tc.complete) {
      report.result = verdict::inconclusive;
    } else {
      report.result = tc.order == m.order() ? verdict::certified
                                            : verdict::refuted;
    }

    std::ostringstream os;
    os << relations.text;
    os << "ORDER presented=";
    if (tc.complete) {
      os << tc.order;
    } else {
      os << ">" << cap;
    }
    os << " concrete=" << m.order() << " VERDICT=" << to_string(report.result)
       << "\n";
    report.text = os.str();
    return report;
  }

  orbit_oracle brute_orbits(int n, int k) {
    if (n < 1 || k < 1 || n > 5 || k > 4) {
      throw std::invalid_argument("brute_orbits: desk scale only");
    }
    auto         group = enumerate_group(coxeter_type::A, std::max(n, 2));
    orbit_oracle oracle;
    std::set<std::vector<std::vector<int>>> seen;
    size_t                                  total = size_t(1) << (n * k);
    for (size_t code = 0; code < total; ++code) {
      std::vector<std::vector<int>> tuple(k);
      for (int i = 0; i < k; ++i) {
        for (int q = 1; q <= n; ++q) {
          if ((code >> (i * n + q - 1)) & 1) {
            tuple[i].push_back(q);
          }
        }
      }
      if (seen.count(tuple)) {
        continue;
      }
      std::set<std::vector<std::vector<int>>> orbit;
      for (auto const& g : group.elements) {
        if (n == 1 && g.img[1] != 2) {
          continue;  // the padding coordinate must stay fixed
        }
        std::vector<std::vector<int>> image(k);
        for (int i = 0; i < k; ++i) {
          for (int q : tuple[i]) {
            image[i].push_back(g.apply(q));
          }
          std::sort(image[i].begin(), image[i].end());
        }
        orbit.insert(image);
      }
      oracle.reps.push_back(*orbit.begin());
      ++oracle.count;
      for (auto const& t : orbit) {
        seen.insert(t);
      }
    }
    return oracle;
  }

  std::vector<std::vector<lattice_element>>
  brute_independent(lattice_kind const& kind) {
    auto as = atoms(kind);
    if (as.size() > 20) {
      throw std::invalid_argument("brute_independent: too many atoms");
    }
    std::vector<std::vector<lattice_element>> result;
    for (size_t mask = 0; mask < (size_t(1) << as.size()); ++mask) {
      std::vector<lattice_element> s;
      for (size_t i = 0; i < as.size(); ++i) {
        if ((mask >> i) & 1) {
          s.push_back(as[i]);
        }
      }
      if (is_independent(kind, s)) {
        result.push_back(s);
      }
    }
    return result;
  }

}  // namespace refmon
