//
// refmon - partial injections and closure enumeration.
//

#include "refmon/partial_map.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace refmon {

  namespace {
    void validate(ground_set const&                       ground,
                  std::vector<std::pair<int, int>> const& pairs) {
      auto in_range = [&ground](int p) {
        int a = p < 0 ? -p : p;
        return a >= 1 && a <= ground.size && (p > 0 || ground.is_signed);
      };
      std::vector<int> srcs, tgts;
      for (auto const& [s, t] : pairs) {
        if (!in_range(s) || !in_range(t)) {
          throw std::invalid_argument("partial_map: point out of range");
        }
        srcs.push_back(s);
        tgts.push_back(t);
      }
      std::sort(srcs.begin(), srcs.end());
      std::sort(tgts.begin(), tgts.end());
      if (std::adjacent_find(srcs.begin(), srcs.end()) != srcs.end()
          || std::adjacent_find(tgts.begin(), tgts.end()) != tgts.end()) {
        throw std::invalid_argument("partial_map: not injective");
      }
      if (ground.is_signed) {
        std::map<int, int> m(pairs.begin(), pairs.end());
        for (auto const& [s, t] : pairs) {
          auto it = m.find(-s);
          if (it == m.end() || it->second != -t) {
            throw std::invalid_argument(
                "partial_map: signed map must pair (p,q) with (-p,-q)");
          }
        }
      }
    }
  }  // namespace

  partial_map::partial_map(ground_set const&                       ground,
                           std::vector<std::pair<int, int>> const& pairs)
      : _ground(ground), _pairs(pairs) {
    if (ground.size < 1) {
      throw std::invalid_argument("partial_map: ground set must be nonempty");
    }
    validate(ground, _pairs);
    std::sort(_pairs.begin(), _pairs.end());
  }

  partial_map partial_map::identity(ground_set const& ground) {
    std::vector<std::pair<int, int>> pairs;
    for (int p = 1; p <= ground.size; ++p) {
      pairs.emplace_back(p, p);
      if (ground.is_signed) {
        pairs.emplace_back(-p, -p);
      }
    }
    return partial_map(ground, pairs);
  }

  partial_map
  partial_map::partial_identity(ground_set const&       ground,
                                std::vector<int> const& domain) {
    std::vector<std::pair<int, int>> pairs;
    for (int p : domain) {
      pairs.emplace_back(p, p);
      if (ground.is_signed) {
        pairs.emplace_back(-p, -p);
      }
    }
    return partial_map(ground, pairs);
  }

  partial_map partial_map::permutation(ground_set const&       ground,
                                       std::vector<int> const& images) {
    if (static_cast<int>(images.size()) != ground.size) {
      throw std::invalid_argument("partial_map: wrong number of images");
    }
    std::vector<std::pair<int, int>> pairs;
    for (int p = 1; p <= ground.size; ++p) {
      pairs.emplace_back(p, images[p - 1]);
      if (ground.is_signed) {
        pairs.emplace_back(-p, -images[p - 1]);
      }
    }
    return partial_map(ground, pairs);
  }

  bool partial_map::defined_on(int p) const {
    return std::binary_search(
        _pairs.begin(), _pairs.end(), std::make_pair(p, 0),
        [](auto const& x, auto const& y) { return x.first < y.first; });
  }

  int partial_map::image(int p) const {
    auto it = std::lower_bound(
        _pairs.begin(), _pairs.end(), std::make_pair(p, 0),
        [](auto const& x, auto const& y) { return x.first < y.first; });
    if (it == _pairs.end() || it->first != p) {
      throw std::invalid_argument("partial_map: image of undefined point");
    }
    return it->second;
  }

  std::string partial_map::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto const& [s, t] : _pairs) {
      if (!first) {
        os << ", ";
      }
      first = false;
      os << s << "->" << t;
    }
    os << "}";
    return os.str();
  }

  partial_map compose(partial_map const& f, partial_map const& g) {
    if (!(f.ground() == g.ground())) {
      throw std::invalid_argument("compose: ground set mismatch");
    }
    std::vector<std::pair<int, int>> pairs;
    for (auto const& [s, t] : f.pairs()) {
      if (g.defined_on(t)) {
        pairs.emplace_back(s, g.image(t));
      }
    }
    return partial_map(f.ground(), pairs);
  }

  partial_map inverse(partial_map const& f) {
    std::vector<std::pair<int, int>> pairs;
    for (auto const& [s, t] : f.pairs()) {
      pairs.emplace_back(t, s);
    }
    return partial_map(f.ground(), pairs);
  }

  enumerated_monoid<partial_map>
  enumerate_closure(std::vector<partial_map> const& generators, size_t cap) {
    if (generators.empty()) {
      throw std::invalid_argument("enumerate_closure: no generators");
    }
    for (auto const& g : generators) {
      if (!(g.ground() == generators.front().ground())) {
        throw std::invalid_argument("enumerate_closure: ground set mismatch");
      }
    }
    enumerated_monoid<partial_map> result;
    std::map<partial_map, int>     index;

    auto push = [&](partial_map const& x) -> int {
      auto it = index.find(x);
      if (it != index.end()) {
        return it->second;
      }
      if (result.elements.size() >= cap) {
        throw cap_exceeded("enumerate_closure: more than "
                           + std::to_string(cap) + " elements");
      }
      int i = static_cast<int>(result.elements.size());
      index.emplace(x, i);
      result.elements.push_back(x);
      result.cayley.emplace_back(generators.size(), -1);
      return i;
    };

    push(partial_map::identity(generators.front().ground()));
    for (size_t e = 0; e < result.elements.size(); ++e) {
      for (size_t g = 0; g < generators.size(); ++g) {
        partial_map prod   = compose(result.elements[e], generators[g]);
        result.cayley[e][g] = push(prod);
      }
    }
    return result;
  }

}  // namespace refmon
