//
// refmon - command-line front end: generate, verify, enumerate and export
// presentations of reflection and Renner monoids and their idempotent
// lattices.
//

#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "refmon/idem_present.hpp"
#include "refmon/refmon_present.hpp"
#include "refmon/renner_data.hpp"

using namespace refmon;

namespace {

  constexpr int exit_ok      = 0;
  constexpr int exit_refuted = 1;
  constexpr int exit_usage   = 2;
  constexpr int exit_cap     = 3;

  std::optional<lattice_kind> parse_lattice_kind(std::string const& name,
                                                 int                param) {
    static std::map<std::string, lattice_family> const table = {
        {"boolean", lattice_family::boolean},
        {"simplex", lattice_family::simplex_face},
        {"polygon", lattice_family::polygon_face},
        {"cube", lattice_family::cube_face},
        {"octa", lattice_family::octa_face},
        {"perm", lattice_family::permutohedron},
        {"partition", lattice_family::partition},
        {"coupled-t", lattice_family::coupled_t},
        {"coupled-to", lattice_family::coupled_to},
    };
    auto it = table.find(name);
    if (it == table.end()) {
      return std::nullopt;
    }
    return lattice_kind{it->second, param};
  }

  // the canonical presentation of an idempotent lattice
  presentation present_lattice(lattice_kind const& kind) {
    switch (kind.family) {
      case lattice_family::simplex_face:
      case lattice_family::cube_face:
      case lattice_family::permutohedron:
        return present_simple_polytope(kind);
      case lattice_family::octa_face:
        return present_octahedron(kind.param);
      case lattice_family::partition:
      case lattice_family::coupled_t:
      case lattice_family::coupled_to:
        return present_geometric(kind);
      default:
        return present_graded_atomic(kind);
    }
  }

  // the lattice as a concrete monoid over a presentation whose generators
  // are its atoms (join as multiplication, bottom as identity)
  concrete_monoid lattice_monoid(lattice_kind const& kind,
                                 presentation const& p) {
    auto                           elts = elements(kind);
    std::map<lattice_element, int> index;
    for (size_t i = 0; i < elts.size(); ++i) {
      index[elts[i]] = static_cast<int>(i);
    }
    concrete_monoid m;
    for (auto const& x : elts) {
      std::vector<int> row;
      for (auto const& g : p.generators) {
        row.push_back(index.at(join(kind, x, g.atom)));
      }
      m.cayley.push_back(row);
    }
    return m;
  }

  struct family_spec {
    bool                        is_lattice = false;
    lattice_kind                lattice{lattice_family::boolean, 2};
    system_kind                 system{system_category::boolean_sys,
                                       coxeter_type::A, 2};
    std::optional<renner_family> renner;  // set for the renner-* families
    coxeter_type                type = coxeter_type::A;  // boolean-*/arr-*
    bool                        is_arrangement = false;
  };

  std::optional<family_spec> parse_family(std::string const& name, int n) {
    family_spec f;
    if (name.rfind("lattice:", 0) == 0) {
      auto kind = parse_lattice_kind(name.substr(8), n);
      if (!kind) {
        return std::nullopt;
      }
      f.is_lattice = true;
      f.lattice    = *kind;
      return f;
    }
    static std::map<std::string, renner_family> const renner = {
        {"renner-gl", renner_family::general_linear},
        {"renner-sp", renner_family::symplectic},
        {"renner-so-odd", renner_family::orthogonal_odd},
        {"renner-so-even", renner_family::orthogonal_even},
        {"renner-solomon", renner_family::solomon},
    };
    if (auto it = renner.find(name); it != renner.end()) {
      f.renner = it->second;
      f.system = renner_system(it->second, n);
      return f;
    }
    static std::map<std::string, std::pair<bool, coxeter_type>> const
        direct = {
            {"boolean-a", {false, coxeter_type::A}},
            {"boolean-b", {false, coxeter_type::B}},
            {"boolean-d", {false, coxeter_type::D}},
            {"arr-a", {true, coxeter_type::A}},
            {"arr-b", {true, coxeter_type::B}},
            {"arr-d", {true, coxeter_type::D}},
        };
    if (auto it = direct.find(name); it != direct.end()) {
      f.is_arrangement = it->second.first;
      f.type           = it->second.second;
      f.system         = {f.is_arrangement ? system_category::arrangement_sys
                                           : system_category::boolean_sys,
                          f.type, n};
      return f;
    }
    return std::nullopt;
  }

  presentation build_presentation(family_spec const& f,
                                  std::string const& family_name,
                                  int                n,
                                  std::string const& mode) {
    presentation p;
    if (f.is_lattice) {
      p = present_lattice(f.lattice);
    } else if (mode == "closed") {
      if (f.renner) {
        p = present_renner(*f.renner, n);
      } else if (f.is_arrangement) {
        p = present_arrangement(f.type, n);
      } else {
        p = present_boolean(f.type, n);
      }
    } else {
      p = present_general(f.system, mode == "full" ? present_mode::full
                                                   : present_mode::thinned);
    }
    p.family = family_name;
    p.params = {n};
    return p;
  }

  concrete_monoid realize_family(family_spec const& f,
                                 presentation const& p,
                                 size_t              cap) {
    if (f.is_lattice) {
      return lattice_monoid(f.lattice, p);
    }
    return realize(p, f.system, cap);
  }

  int write_out(std::string const& text, std::string const& out) {
    if (out.empty()) {
      std::cout << text;
      return exit_ok;
    }
    std::ofstream file(out);
    if (!file) {
      std::cerr << "refmon: cannot write " << out << "\n";
      return exit_usage;
    }
    file << text;
    return exit_ok;
  }

  struct verify_outcome {
    std::string text;
    int         code = exit_ok;
  };

  verify_outcome verify_family(std::string const& name, int n,
                               std::string const& mode, size_t cap) {
    verify_outcome out;
    auto           f = parse_family(name, n);
    if (!f) {
      out.text = "refmon: unknown family " + name + "\n";
      out.code = exit_usage;
      return out;
    }
    auto p = build_presentation(*f, name, n, mode);
    auto m = realize_family(*f, p, cap);
    auto r = certify(p, m, cap);
    out.text = "FAMILY=" + name + " N=" + std::to_string(n) + "\n" + r.text;
    out.code = r.result == verdict::certified  ? exit_ok
               : r.result == verdict::refuted ? exit_refuted
                                              : exit_cap;
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"presentations of reflection and Renner monoids"};
  app.require_subcommand(1);

  std::vector<std::string> families;
  int                      n      = 2;
  std::string              mode   = "closed";
  std::string              format = "text";
  std::string              out;
  long                     cap_opt = -1;
  unsigned                 jobs    = 1;

  auto add_family_opts = [&](CLI::App* cmd, bool multiple) {
    auto* fam = cmd->add_option("--family", families,
                                "monoid or lattice:<kind> family")
                    ->required();
    if (!multiple) {
      fam->expected(1);
    }
    cmd->add_option("--n", n, "parameter (n or ell)")->required();
    cmd->add_option("--mode", mode, "closed | full | thinned")
        ->check(CLI::IsMember({"closed", "full", "thinned"}));
  };

  auto* present = app.add_subcommand("present", "emit a presentation");
  add_family_opts(present, false);
  present->add_option("--format", format, "text | json | gap")
      ->check(CLI::IsMember({"text", "json", "gap"}));
  present->add_option("--out", out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "certify a presentation");
  add_family_opts(verify, true);
  verify->add_option("--cap", cap_opt, "enumeration cap override");
  verify->add_option("--jobs", jobs, "parallel verification jobs");

  auto* enumerate = app.add_subcommand("enumerate", "order and counts");
  add_family_opts(enumerate, false);

  std::string type_name = "a";
  int         k         = 2;
  bool        chars     = false;
  auto* orbits = app.add_subcommand("orbits", "atom-set orbits");
  orbits->add_option("--type", type_name, "a | b | d")
      ->check(CLI::IsMember({"a", "b", "d"}))
      ->required();
  orbits->add_option("--n", n, "rank")->required();
  orbits->add_option("--k", k, "set size")->required();
  orbits->add_flag("--chars", chars, "list characteristic maps instead");

  std::string kind_name, list_what = "atoms";
  int         param = 2;
  auto* lattice = app.add_subcommand("lattice", "inspect a lattice");
  lattice->add_option("--kind", kind_name, "lattice kind")->required();
  lattice->add_option("--param", param, "lattice parameter")->required();
  lattice->add_option("--list", list_what, "atoms | mindep | indep:<k>");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? exit_ok : exit_usage;
  }

  try {
    if (present->parsed()) {
      auto f = parse_family(families[0], n);
      if (!f) {
        std::cerr << "refmon: unknown family " << families[0] << "\n";
        return exit_usage;
      }
      auto p = build_presentation(*f, families[0], n, mode);
      std::string text = format == "json"  ? to_json(p)
                         : format == "gap" ? to_gap(p)
                                           : to_text(p);
      return write_out(text, out);
    }

    if (verify->parsed()) {
      size_t cap = cap_opt > 0 ? static_cast<size_t>(cap_opt)
                               : default_cap();
      int  worst = exit_ok;
      auto flush = [&](verify_outcome const& o) {
        std::cout << o.text;
        worst = std::max(worst, o.code);
      };
      if (jobs <= 1 || families.size() <= 1) {
        for (auto const& name : families) {
          flush(verify_family(name, n, mode, cap));
        }
      } else {
        std::vector<std::future<verify_outcome>> tasks;
        for (auto const& name : families) {
          tasks.push_back(std::async(std::launch::async, verify_family,
                                     name, n, mode, cap));
        }
        for (auto& t : tasks) {
          flush(t.get());
        }
      }
      return worst;
    }

    if (enumerate->parsed()) {
      auto f = parse_family(families[0], n);
      if (!f) {
        std::cerr << "refmon: unknown family " << families[0] << "\n";
        return exit_usage;
      }
      if (f->is_lattice) {
        auto elts = elements(f->lattice);
        std::cout << "FAMILY=" << families[0] << " N=" << n
                  << " ORDER=" << elts.size()
                  << " IDEMPOTENTS=" << elts.size() << " UNITS=1\n";
        return exit_ok;
      }
      monoid_system sys(f->system);
      auto em    = enumerate_system(f->system, default_cap());
      size_t idem = 0, units = 0;
      for (auto const& m : em.elements) {
        idem += m == sys.idempotent(m.domain);
        units += m.domain == bottom(sys.lattice());
      }
      std::cout << "FAMILY=" << families[0] << " N=" << n
                << " ORDER=" << em.elements.size()
                << " IDEMPOTENTS=" << idem << " UNITS=" << units << "\n";
      return exit_ok;
    }

    if (orbits->parsed()) {
      if (chars) {
        auto maps = char_maps(n, k);
        std::cout << "COUNT=" << maps.size() << "\n";
        for (auto const& f : maps) {
          auto tuple = realize_tuple(f);
          for (size_t i = 0; i < tuple.size(); ++i) {
            std::cout << (i == 0 ? "" : " ") << "{";
            for (size_t j = 0; j < tuple[i].size(); ++j) {
              std::cout << (j == 0 ? "" : ",") << tuple[i][j];
            }
            std::cout << "}";
          }
          std::cout << "\n";
        }
        return exit_ok;
      }
      coxeter_type type = type_name == "a"   ? coxeter_type::A
                          : type_name == "b" ? coxeter_type::B
                                             : coxeter_type::D;
      system_kind kind{system_category::arrangement_sys, type, n};
      auto        lat  = system_lattice(kind);
      auto        reps = orbit_reps_k(type, n, lat, k);
      std::cout << "COUNT=" << reps.size() << "\n";
      for (auto const& rep : reps) {
        for (size_t i = 0; i < rep.size(); ++i) {
          std::cout << (i == 0 ? "" : " ")
                    << lattice_atom_name(lat, rep[i]);
        }
        std::cout << "\n";
      }
      return exit_ok;
    }

    if (lattice->parsed()) {
      auto kind = parse_lattice_kind(kind_name, param);
      if (!kind) {
        std::cerr << "refmon: unknown lattice kind " << kind_name << "\n";
        return exit_usage;
      }
      if (list_what == "atoms") {
        for (auto const& a : atoms(*kind)) {
          std::cout << lattice_atom_name(*kind, a) << " "
                    << to_string(*kind, a) << "\n";
        }
        return exit_ok;
      }
      if (list_what == "mindep") {
        for (auto const& s : minimally_dependent_sets(*kind)) {
          for (size_t i = 0; i < s.size(); ++i) {
            std::cout << (i == 0 ? "" : " ")
                      << lattice_atom_name(*kind, s[i]);
          }
          std::cout << "\n";
        }
        return exit_ok;
      }
      if (list_what.rfind("indep:", 0) == 0) {
        int want = std::stoi(list_what.substr(6));
        for (auto const& s : brute_independent(*kind)) {
          if (static_cast<int>(s.size()) != want) {
            continue;
          }
          for (size_t i = 0; i < s.size(); ++i) {
            std::cout << (i == 0 ? "" : " ")
                      << lattice_atom_name(*kind, s[i]);
          }
          std::cout << "\n";
        }
        return exit_ok;
      }
      std::cerr << "refmon: unknown --list value " << list_what << "\n";
      return exit_usage;
    }
  } catch (cap_exceeded const& e) {
    std::cerr << "refmon: " << e.what() << "\n";
    return exit_cap;
  } catch (std::exception const& e) {
    std::cerr << "refmon: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
