//
// refmon - reflection monoids, their idempotent lattices and presentations
//
// Partial injections on a finite (optionally signed) ground set, and
// breadth-first closure enumeration of finitely generated monoids of them.
//

#ifndef REFMON_PARTIAL_MAP_HPP_
#define REFMON_PARTIAL_MAP_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace refmon {

  // Thrown when a closure or congruence enumeration exceeds its cap; this
  // signals the bound, not wrongness.
  struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(std::string const& what) : std::runtime_error(what) {}
  };

  // Points are 1..n, or +/-1..+/-n when signed.
  struct ground_set {
    int  size   = 1;
    bool is_signed = false;

    bool operator==(ground_set const& that) const {
      return size == that.size && is_signed == that.is_signed;
    }
  };

  // A partial injection, stored as a sorted list of (source, target) pairs.
  // On signed ground sets the pair (-p, -q) is present whenever (p, q) is.
  class partial_map {
   public:
    partial_map() = default;
    partial_map(ground_set const&                       ground,
                std::vector<std::pair<int, int>> const& pairs);

    static partial_map identity(ground_set const& ground);
    // Identity restricted to the given (positive-point) domain; on signed
    // ground sets the +/- closure of the domain is taken.
    static partial_map partial_identity(ground_set const&       ground,
                                        std::vector<int> const& domain);
    // A permutation given by images of 1..n (+/- on signed ground sets).
    static partial_map permutation(ground_set const&       ground,
                                   std::vector<int> const& images);

    ground_set const&                       ground() const { return _ground; }
    std::vector<std::pair<int, int>> const& pairs() const { return _pairs; }

    bool   defined_on(int p) const;
    int    image(int p) const;  // pre: defined_on(p)
    size_t domain_size() const { return _pairs.size(); }

    bool operator==(partial_map const& that) const {
      return _ground == that._ground && _pairs == that._pairs;
    }
    bool operator<(partial_map const& that) const {
      return _pairs < that._pairs;
    }

    std::string to_string() const;

   private:
    ground_set                       _ground;
    std::vector<std::pair<int, int>> _pairs;
  };

  // Left-to-right composition: x -> g(f(x)) on {x in dom f : f(x) in dom g}.
  partial_map compose(partial_map const& f, partial_map const& g);

  // The unique generalized inverse: pairs reversed.
  partial_map inverse(partial_map const& f);

  // Element table of a finitely generated monoid, with right Cayley graph.
  template <typename Element>
  struct enumerated_monoid {
    std::vector<Element>          elements;  // element 0 is the identity
    std::vector<std::vector<int>> cayley;    // cayley[e][g] = index of e * gen g
    size_t order() const { return elements.size(); }
  };

  // Breadth-first closure (by word length, ties by generator index) of the
  // monoid generated by the given maps, with the identity always adjoined.
  enumerated_monoid<partial_map>
  enumerate_closure(std::vector<partial_map> const& generators, size_t cap);

}  // namespace refmon
#endif  // REFMON_PARTIAL_MAP_HPP_
