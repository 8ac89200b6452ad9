//
// refmon - end-to-end tests driving the command-line binary.
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "refmon/refmon_present.hpp"

using namespace refmon;

namespace {

  struct run_result {
    int         code = -1;
    std::string out;
  };

  // Runs the binary with the given arguments, capturing stdout; stderr is
  // folded into the capture so usage errors are visible too.
  run_result run(std::string const& args, std::string const& env = "") {
    std::string path = "/tmp/refmon_cli_out.txt";
    std::string cmd  = env + " " + std::string(REFMON_CLI_PATH) + " " + args
                      + " > " + path + " 2>&1";
    int           status = std::system(cmd.c_str());
    run_result    r;
    r.code = WEXITSTATUS(status);
    std::ifstream     file(path);
    std::stringstream buf;
    buf << file.rdbuf();
    r.out = buf.str();
    return r;
  }

}  // namespace

TEST_CASE("present: text output matches the library byte for byte") {
  auto p        = present_boolean(coxeter_type::A, 3);
  auto expected = to_text(p);
  auto r        = run("present --family boolean-a --n 3");
  CHECK(r.code == 0);
  CHECK(r.out == expected);

  // byte-stable across runs
  auto again = run("present --family boolean-a --n 3");
  CHECK(again.out == r.out);
}

TEST_CASE("present: json round-trips through the parser") {
  auto r = run("present --family boolean-b --n 2 --format json");
  REQUIRE(r.code == 0);
  auto parsed   = presentation_from_json(r.out);
  auto expected = present_boolean(coxeter_type::B, 2);
  expected.family = "boolean-b";
  expected.params = {2};
  CHECK(parsed == expected);

  // and the reserialization is identical
  CHECK(to_json(parsed) == r.out);
}

TEST_CASE("present: gap output and --out file") {
  auto r = run("present --family boolean-a --n 2 --format gap");
  CHECK(r.code == 0);
  CHECK(r.out.find(":=") != std::string::npos);

  std::string path = "/tmp/refmon_cli_saved.txt";
  std::remove(path.c_str());
  auto w = run("present --family boolean-a --n 2 --out " + path);
  CHECK(w.code == 0);
  std::ifstream     file(path);
  std::stringstream buf;
  buf << file.rdbuf();
  CHECK(buf.str() == to_text(present_boolean(coxeter_type::A, 2)));
}

TEST_CASE("present: lattice and renner families") {
  auto r = run("present --family lattice:octa --n 3");
  CHECK(r.code == 0);
  CHECK(!r.out.empty());

  auto gl = run("present --family renner-gl --n 2");
  auto ba = run("present --family boolean-a --n 2");
  CHECK(gl.code == 0);
  CHECK(gl.out == ba.out);  // same combinatorics, metadata-free text
}

TEST_CASE("verify: certification, exit codes and batching") {
  auto r = run("verify --family boolean-a --n 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAMILY=boolean-a") != std::string::npos);

  auto batch =
      run("verify --family boolean-a --family boolean-b --n 2 --jobs 2");
  CHECK(batch.code == 0);
  CHECK(batch.out.find("FAMILY=boolean-a") != std::string::npos);
  CHECK(batch.out.find("FAMILY=boolean-b") != std::string::npos);

  auto lat = run("verify --family lattice:simplex --n 2");
  CHECK(lat.code == 0);
}

TEST_CASE("verify: cap handling") {
  auto r = run("verify --family boolean-a --n 3 --cap 5");
  CHECK(r.code == 3);

  auto env = run("verify --family boolean-a --n 3", "REFMON_CAP=5");
  CHECK(env.code == 3);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("present --family no-such-family --n 2").code == 2);
  CHECK(run("present --n 2").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("lattice --kind mystery --param 3").code == 2);
  CHECK(run("present --family renner-gl --n 1").code == 2);
}

TEST_CASE("enumerate: order, idempotent and unit counts") {
  auto r = run("enumerate --family boolean-a --n 3");
  CHECK(r.code == 0);
  CHECK(r.out
        == "FAMILY=boolean-a N=3 ORDER=34 IDEMPOTENTS=8 UNITS=6\n");

  auto lat = run("enumerate --family lattice:boolean --n 3");
  CHECK(lat.code == 0);
  CHECK(lat.out.find("ORDER=8") != std::string::npos);
}

TEST_CASE("orbits: representatives and characteristic maps") {
  auto r = run("orbits --type b --n 3 --k 2");
  REQUIRE(r.code == 0);
  system_kind kind{system_category::arrangement_sys, coxeter_type::B, 3};
  auto        lat  = system_lattice(kind);
  auto        reps = orbit_reps_k(coxeter_type::B, 3, lat, 2);
  CHECK(r.out.rfind("COUNT=" + std::to_string(reps.size()) + "\n", 0) == 0);

  auto chars = run("orbits --type a --n 2 --k 1 --chars");
  CHECK(chars.code == 0);
  CHECK(chars.out.rfind("COUNT=3\n", 0) == 0);  // ell + 1 maps at k = 1
}

TEST_CASE("lattice: atoms, minimal dependencies, independent sets") {
  auto r = run("lattice --kind cube --param 3 --list atoms");
  REQUIRE(r.code == 0);
  size_t lines = 0;
  for (char c : r.out) {
    lines += c == '\n';
  }
  CHECK(lines == atoms({lattice_family::cube_face, 3}).size());

  auto dep = run("lattice --kind partition --param 3 --list mindep");
  CHECK(dep.code == 0);
  CHECK(dep.out == "a23 a12 a13\n");  // the one triangle of Pi(3)

  auto ind = run("lattice --kind boolean --param 3 --list indep:2");
  CHECK(ind.code == 0);
  lines = 0;
  for (char c : ind.out) {
    lines += c == '\n';
  }
  CHECK(lines == 3);  // the three pairs of atoms
}
