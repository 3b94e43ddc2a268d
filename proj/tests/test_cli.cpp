#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "lieamk/cli.hpp"
#include "support/fixtures.hpp"

using namespace lieamk;
using lieamk::cli::json;
namespace fx = lieamk::testing;

namespace {

std::string fixture(const std::string& name) {
  return std::string(LIEAMK_FIXTURE_DIR) + "/" + name;
}

cli::RunResult run(std::initializer_list<std::string> args) {
  return cli::run(std::vector<std::string>(args));
}

json parse_file(const std::string& name) {
  std::ifstream in(fixture(name));
  REQUIRE(in.good());
  return json::parse(in);
}

bool same_algebra(const LieAlgebra& a, const LieAlgebra& b) {
  return a.name() == b.name() && a.basis_names() == b.basis_names() &&
         a.brackets() == b.brackets();
}

}  // namespace

TEST_CASE("bundled fixtures parse to the programmatic algebras") {
  CHECK(same_algebra(cli::parse_algebra_file(fixture("sl2.json")).algebra, fx::sl2()));
  CHECK(same_algebra(cli::parse_algebra_file(fixture("gl2.json")).algebra, fx::gl2()));
  CHECK(same_algebra(cli::parse_algebra_file(fixture("heis3.json")).algebra, fx::heis3()));
  CHECK(same_algebra(cli::parse_algebra_file(fixture("abelian3.json")).algebra,
                     fx::abelian(3, "abelian3")));
  CHECK(same_algebra(cli::parse_algebra_file(fixture("sl2_semidirect_c2.json")).algebra,
                     fx::sl2_semidirect_c2()));
  CHECK(same_algebra(cli::parse_algebra_file(fixture("broken_jacobi.json")).algebra,
                     fx::broken_jacobi()));

  const auto gl2 = cli::parse_algebra_file(fixture("gl2.json"));
  REQUIRE(gl2.levi_vectors.has_value());
  CHECK(gl2.levi_vectors->size() == 3);

  const auto z2 = cli::parse_algebra_file(fixture("z2_sign.json"));
  REQUIRE(z2.group_action.has_value());
  CHECK(z2.group_action->group.order() == 2);
  CHECK(z2.group_action->group.table == fx::z2_group().table);
  CHECK(z2.group_action->generator_images == fx::z2_sign_action());

  const auto s3 = cli::parse_algebra_file(fixture("s3_perm.json"));
  REQUIRE(s3.group_action.has_value());
  CHECK(s3.group_action->group.table == fx::s3_group().table);
  CHECK(s3.group_action->generator_images == fx::s3_perm_action());
}

TEST_CASE("malformed inputs are rejected with context") {
  auto reject = [](const std::string& body, const std::string& needle) {
    try {
      cli::parse_algebra_json(json::parse(body), "inline");
      FAIL("expected InputError for: " << body);
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  // i = j breaks the antisymmetric storage convention
  reject(R"({"name":"x","dim":2,"basis":["a","b"],
            "brackets":[{"i":1,"j":1,"coeffs":{"0":"1"}}]})",
         "i < j");
  // denominator zero
  reject(R"({"name":"x","dim":2,"basis":["a","b"],
            "brackets":[{"i":0,"j":1,"coeffs":{"0":"1/0"}}]})",
         "coeffs.0");
  // duplicate (i, j) record
  reject(R"({"name":"x","dim":2,"basis":["a","b"],
            "brackets":[{"i":0,"j":1,"coeffs":{"0":"1"}},{"i":0,"j":1,"coeffs":{"0":"2"}}]})",
         "duplicate");
  // index out of range
  reject(R"({"name":"x","dim":2,"basis":["a","b"],
            "brackets":[{"i":0,"j":5,"coeffs":{"0":"1"}}]})",
         "out of range");
  // basis length mismatch
  reject(R"({"name":"x","dim":3,"basis":["a","b"],"brackets":[]})", "basis");
  // float contamination
  reject(R"({"name":"x","dim":1,"basis":["a"],"brackets":[],
            "levi_vectors":[[0.5]]})",
         "strings");
  // broken group table
  reject(R"({"name":"x","dim":1,"basis":["a"],"brackets":[],
            "group_action":{"elements":["e","g"],"table":[[0,1],[1,1]],
                            "matrices":[[["1"]],[["-1"]]]}})",
         "inverse");

  CHECK_THROWS_AS(cli::parse_algebra_file(fixture("missing.json")), InputError);
}

TEST_CASE("validate command and exit codes") {
  CHECK(run({"validate", fixture("sl2.json")}).code == 0);
  const auto broken = run({"validate", fixture("broken_jacobi.json")});
  CHECK(broken.code == 1);
  CHECK(broken.report["result"]["ok"] == false);
  CHECK(broken.report["result"]["violations"][0]["names"] == json({"f", "h", "e"}));
  CHECK(run({"validate", fixture("missing.json")}).code == 3);
}

TEST_CASE("classify command") {
  const auto r = run({"classify", fixture("sl2.json")});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["class"] == "semisimple");
  CHECK(r.report["result"]["dim_radical"] == 0);
  CHECK(r.text.find("semisimple, dim radical = 0") != std::string::npos);

  CHECK(run({"classify", fixture("heis3.json")}).report["result"]["class"] == "solvable");
  const auto gl2 = run({"classify", fixture("gl2.json")});
  CHECK(gl2.report["result"]["class"] == "mixed");
  CHECK(gl2.report["result"]["radical_basis"][0] == json({"1", "0", "0", "0"}));

  // non-validate commands refuse broken algebras
  CHECK(run({"classify", fixture("broken_jacobi.json")}).code == 1);
}

TEST_CASE("homology command") {
  const auto r = run({"homology", fixture("sl2.json")});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["betti"] == json({1, 0, 0, 1}));

  const auto h = run({"homology", fixture("heis3.json"), "--degree", "1"});
  CHECK(h.code == 0);
  CHECK(h.report["result"]["betti"] == 2);

  CHECK(run({"homology", fixture("sl2.json"), "--coeffs", "adjoint"}).code == 3);
  CHECK(run({"homology", fixture("sl2.json"), "--degree", "9"}).code == 3);
}

TEST_CASE("obstruction command") {
  const auto gl2 = run({"obstruction", fixture("gl2.json"), "--levi", "1,2,3",
                        "--truncate", "4"});
  CHECK(gl2.code == 0);
  CHECK(gl2.report["result"]["pass"] == true);
  CHECK(gl2.report["result"]["k"] == 3);
  CHECK(gl2.report["result"]["checks"]["c1_cycle"] == true);
  CHECK(gl2.report["result"]["checks"]["c2_image_killed"] == true);
  CHECK(gl2.report["result"]["checks"]["c3_detects"] == true);
  CHECK(gl2.report["result"]["checks"]["solve_no_solution"] == true);

  // levi from the file, default truncation
  CHECK(run({"obstruction", fixture("gl2.json")}).code == 0);
  CHECK(run({"obstruction", fixture("sl2_semidirect_c2.json")}).code == 0);

  // solvable: vacuous certificate, exit 0
  const auto h3 = run({"obstruction", fixture("heis3.json")});
  CHECK(h3.code == 0);
  CHECK(h3.report["result"]["vacuous"] == true);
  CHECK(h3.report["result"]["k"] == 0);
  CHECK(h3.text.find("no obstruction") != std::string::npos);

  // semisimple without a levi hint: h is the whole algebra
  const auto sl2 = run({"obstruction", fixture("sl2.json")});
  CHECK(sl2.code == 0);
  CHECK(sl2.report["result"]["k"] == 3);

  // bad levi is a validation failure
  CHECK(run({"obstruction", fixture("gl2.json"), "--levi", "0,1,3"}).code == 1);
  // malformed flag is an input error
  CHECK(run({"obstruction", fixture("gl2.json"), "--levi", "a,b"}).code == 3);
  CHECK(run({"obstruction", fixture("gl2.json"), "--levi", "1,1,2"}).code == 3);
}

TEST_CASE("smash-check command") {
  const auto gl2 = run({"smash-check", fixture("gl2.json"), "--truncate", "3"});
  CHECK(gl2.code == 0);
  CHECK(gl2.report["result"]["levi_iso"]["ok"] == true);
  CHECK(gl2.report["result"]["counit_tau"]["ok"] == true);

  CHECK(run({"smash-check", fixture("sl2_semidirect_c2.json"), "--truncate", "3"}).code == 0);
  CHECK(run({"smash-check", fixture("heis3.json")}).code == 0);

  const auto z2 = run({"smash-check", fixture("z2_sign.json"), "--truncate", "3"});
  CHECK(z2.code == 0);
  CHECK(z2.report["result"]["retraction"]["ok"] == true);
  CHECK(z2.report["result"]["retraction"]["identities"].size() == 5);
  CHECK(z2.report["result"]["counit_tau"]["ok"] == true);

  const auto s3 = run({"smash-check", fixture("s3_perm.json"), "--truncate", "3"});
  CHECK(s3.code == 0);
  CHECK(s3.report["result"]["retraction"]["ok"] == true);
}

TEST_CASE("json reports round-trip and carry the schema tag") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"classify", fixture("sl2.json")},
           {"homology", fixture("heis3.json")},
           {"obstruction", fixture("gl2.json"), "--truncate", "3"},
           {"smash-check", fixture("z2_sign.json"), "--truncate", "2"},
           {"validate", fixture("broken_jacobi.json")}}) {
    const auto r = cli::run(args);
    CHECK(r.report["schema"] == cli::kSchema);
    const json reparsed = json::parse(r.report.dump());
    CHECK(reparsed == r.report);
  }
}

TEST_CASE("json flag is surfaced to the caller") {
  CHECK(run({"--json", "classify", fixture("sl2.json")}).json_requested);
  CHECK(!run({"classify", fixture("sl2.json")}).json_requested);
}

TEST_CASE("unknown commands and missing arguments are input errors") {
  CHECK(run({"frobnicate", fixture("sl2.json")}).code == 3);
  CHECK(run({"classify"}).code == 3);
  CHECK(run({}).code == 3);
}

TEST_CASE("mixed algebra without a levi hint asks for one") {
  // strip the levi field from gl2
  json j = parse_file("gl2.json");
  j.erase("levi");
  const auto tmp = std::string("/tmp/lieamk_gl2_nolevi.json");
  std::ofstream(tmp) << j.dump();
  const auto r = run({"obstruction", tmp});
  CHECK(r.code == 3);
  CHECK(r.report["error"]["message"].get<std::string>().find("--levi") != std::string::npos);
}
