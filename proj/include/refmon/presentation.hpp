//
// refmon - monoid presentations: generators, tagged relations, canonical
// forms, and text / json / gap serialization.
//

#ifndef REFMON_PRESENTATION_HPP_
#define REFMON_PRESENTATION_HPP_

#include <string>
#include <vector>

#include "refmon/lattice.hpp"

namespace refmon {

  enum class generator_kind { unit, idempotent };

  struct generator {
    std::string    name;
    generator_kind kind;
    // Evaluation payload, not serialized: units carry an index into the
    // group generator list, idempotents the lattice element of their domain.
    int             unit_index = -1;
    lattice_element atom;
  };

  enum class relation_family {
    units,
    idem1,
    idem2,
    idem3,
    idem3a,
    ref_idem,
    iso,
    reduced
  };

  std::string     to_string(relation_family f);
  relation_family relation_family_from_string(std::string const& s);

  // A word is a sequence of generator indices; the empty word is the
  // identity.
  using word = std::vector<int>;

  struct relation {
    relation_family family;
    word            lhs;
    word            rhs;

    bool operator==(relation const& that) const {
      return family == that.family && lhs == that.lhs && rhs == that.rhs;
    }
  };

  struct presentation {
    std::string            family;  // metadata: family name
    std::vector<int>       params;  // metadata: parameters
    std::vector<generator> generators;
    std::vector<relation>  relations;

    int add_generator(std::string const& name,
                      generator_kind     kind,
                      int                unit_index = -1,
                      lattice_element    atom       = {});

    // Adds lhs = rhs with the two sides ordered lexicographically.  Literal
    // x = x is dropped, and so is any relation whose canonical key (pure
    // idempotent words sorted) has been added before.  Returns whether the
    // relation was new.
    bool add_relation(relation_family family, word lhs, word rhs);

    // The dedupe key of a word: sorted if it is a pure-idempotent word
    // (idempotent generators commute), verbatim otherwise.
    word canonicalize(word w) const;

    // Serializable equality: metadata, generator names/kinds and relations
    // (evaluation payloads are ignored).
    bool operator==(presentation const& that) const;
  };

  // Text form lists only generators and relations, so two presentations with
  // the same combinatorics serialize identically whatever their metadata.
  std::string to_text(presentation const& p);

  // JSON schema:
  //   {family, params, generators: [{name, kind}],
  //    relations: [{family, lhs: [int], rhs: [int]}]}
  std::string  to_json(presentation const& p);
  presentation presentation_from_json(std::string const& text);

  // A record usable by computer-algebra presentation tooling: a free monoid
  // on the generator names and the relation pairs.
  std::string to_gap(presentation const& p);

}  // namespace refmon
#endif  // REFMON_PRESENTATION_HPP_
