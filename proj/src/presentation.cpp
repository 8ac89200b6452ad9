//
// refmon - presentation canonicalization and serialization.
//

#include "refmon/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace refmon {

  std::string to_string(relation_family f) {
    switch (f) {
      case relation_family::units: return "Units";
      case relation_family::idem1: return "Idem1";
      case relation_family::idem2: return "Idem2";
      case relation_family::idem3: return "Idem3";
      case relation_family::idem3a: return "Idem3a";
      case relation_family::ref_idem: return "RefIdem";
      case relation_family::iso: return "Iso";
      case relation_family::reduced: return "Reduced";
    }
    throw std::invalid_argument("to_string: bad relation family");
  }

  relation_family relation_family_from_string(std::string const& s) {
    for (auto f : {relation_family::units, relation_family::idem1,
                   relation_family::idem2, relation_family::idem3,
                   relation_family::idem3a, relation_family::ref_idem,
                   relation_family::iso, relation_family::reduced}) {
      if (to_string(f) == s) {
        return f;
      }
    }
    throw std::invalid_argument("relation_family_from_string: " + s);
  }

  int presentation::add_generator(std::string const& name,
                                  generator_kind     kind,
                                  int                unit_index,
                                  lattice_element    atom) {
    generators.push_back({name, kind, unit_index, std::move(atom)});
    return static_cast<int>(generators.size()) - 1;
  }

  word presentation::canonicalize(word w) const {
    for (int g : w) {
      if (g < 0 || g >= static_cast<int>(generators.size())) {
        throw std::invalid_argument("canonicalize: bad generator index");
      }
    }
    bool pure = std::all_of(w.begin(), w.end(), [this](int g) {
      return generators[g].kind == generator_kind::idempotent;
    });
    if (pure) {
      std::sort(w.begin(), w.end());
    }
    return w;
  }

  bool presentation::add_relation(relation_family family, word lhs, word rhs) {
    if (rhs < lhs) {
      std::swap(lhs, rhs);
    }
    if (lhs == rhs) {
      return false;
    }
    word klhs = canonicalize(lhs);
    word krhs = canonicalize(rhs);
    if (krhs < klhs) {
      std::swap(klhs, krhs);
    }
    // keys are only collapsing for pure-idempotent sides; a commutation
    // relation has a reflexive key and is deduped by its literal sides
    bool reflexive = klhs == krhs;
    for (auto const& r : relations) {
      if (reflexive) {
        if (r.lhs == lhs && r.rhs == rhs) {
          return false;
        }
      } else {
        word a = canonicalize(r.lhs), b = canonicalize(r.rhs);
        if (b < a) {
          std::swap(a, b);
        }
        if (a == klhs && b == krhs) {
          return false;
        }
      }
    }
    relations.push_back({family, std::move(lhs), std::move(rhs)});
    return true;
  }

  bool presentation::operator==(presentation const& that) const {
    if (family != that.family || params != that.params
        || generators.size() != that.generators.size()
        || relations.size() != that.relations.size()) {
      return false;
    }
    for (size_t i = 0; i < generators.size(); ++i) {
      if (generators[i].name != that.generators[i].name
          || generators[i].kind != that.generators[i].kind) {
        return false;
      }
    }
    return relations == that.relations;
  }

  namespace {
    std::string word_str(presentation const& p, word const& w) {
      if (w.empty()) {
        return "1";
      }
      std::string s;
      for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
          s += " ";
        }
        s += p.generators[w[i]].name;
      }
      return s;
    }
  }  // namespace

  std::string to_text(presentation const& p) {
    std::ostringstream os;
    os << "generators:";
    for (auto const& g : p.generators) {
      os << " " << g.name;
    }
    os << "\n";
    for (auto const& r : p.relations) {
      os << word_str(p, r.lhs) << " = " << word_str(p, r.rhs) << "\n";
    }
    return os.str();
  }

  std::string to_json(presentation const& p) {
    nlohmann::json j;
    j["family"] = p.family;
    j["params"] = p.params;
    j["generators"] = nlohmann::json::array();
    for (auto const& g : p.generators) {
      j["generators"].push_back(
          {{"name", g.name},
           {"kind",
            g.kind == generator_kind::unit ? "unit" : "idempotent"}});
    }
    j["relations"] = nlohmann::json::array();
    for (auto const& r : p.relations) {
      j["relations"].push_back(
          {{"family", to_string(r.family)}, {"lhs", r.lhs}, {"rhs", r.rhs}});
    }
    return j.dump(2) + "\n";
  }

  presentation presentation_from_json(std::string const& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    presentation   p;
    p.family = j.at("family").get<std::string>();
    p.params = j.at("params").get<std::vector<int>>();
    for (auto const& g : j.at("generators")) {
      p.generators.push_back(
          {g.at("name").get<std::string>(),
           g.at("kind").get<std::string>() == "unit"
               ? generator_kind::unit
               : generator_kind::idempotent,
           -1,
           {}});
    }
    for (auto const& r : j.at("relations")) {
      p.relations.push_back(
          {relation_family_from_string(r.at("family").get<std::string>()),
           r.at("lhs").get<word>(), r.at("rhs").get<word>()});
    }
    return p;
  }

  std::string to_gap(presentation const& p) {
    std::ostringstream os;
    os << "F := FreeMonoid(";
    for (size_t i = 0; i < p.generators.size(); ++i) {
      os << (i ? ", " : "") << "\"" << p.generators[i].name << "\"";
    }
    os << ");;\n";
    os << "AssignGeneratorVariables(F);;\n";
    auto gap_word = [&](word const& w) -> std::string {
      if (w.empty()) {
        return "One(F)";
      }
      std::string s;
      for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
          s += "*";
        }
        s += p.generators[w[i]].name;
      }
      return s;
    };
    os << "rels := [\n";
    for (size_t i = 0; i < p.relations.size(); ++i) {
      os << "  [" << gap_word(p.relations[i].lhs) << ", "
         << gap_word(p.relations[i].rhs) << "]"
         << (i + 1 < p.relations.size() ? "," : "") << "\n";
    }
    os << "];;\n";
    os << "M := F / rels;;\n";
    return os.str();
  }

}  // namespace refmon
