#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "xq/cli.hpp"
#include "xq/sphere.hpp"

using namespace xq;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome xq_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("xq_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("canonical files round-trip byte for byte") {
  const fs::path dir = scratch_dir("roundtrip");
  REQUIRE(xq_run({"s2xs2", "export", dir.string()}).code == 0);
  for (const char* name : {"sphere_D.json", "cylinder_Q.json", "case.json"}) {
    const std::string text = slurp(dir / name);
    CHECK(serialize_structure(parse_structure(text)) == text);
  }
}

TEST_CASE("shipped data files equal the exported ones") {
  const fs::path dir = scratch_dir("shipped");
  REQUIRE(xq_run({"s2xs2", "export", dir.string()}).code == 0);
  for (const char* name : {"sphere_D.json", "cylinder_Q.json", "case.json"})
    CHECK(slurp(dir / name) == slurp(fs::path(XQ_DATA_DIR) / name));
}

TEST_CASE("decoded structures equal the built ones") {
  const StructureFile f = parse_structure(slurp(fs::path(XQ_DATA_DIR) / "cylinder_Q.json"));
  const auto q = std::get<ReducedQuadraticComplex4>(decode_structure(f.kind, f.body, ""));
  const auto built = build_cylinder_Q();
  CHECK(encode_rqc4(q) == encode_rqc4(built));
  CHECK(rqc4_check(q, SamplingOptions{}).passed());
}

TEST_CASE("semantic diagnostics name the field") {
  try {
    parse_structure(R"({"version": "1", "kind": "group", "type": "free_nil2", "rank": -1})");
    FAIL("expected a diagnostic");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::semantic);
    CHECK(e.pointer() == "/rank");
  }
  try {
    parse_structure(R"({"version": "1", "kind": "nonsense"})");
    FAIL("expected a diagnostic");
  } catch (const ParseError& e) {
    CHECK(e.pointer() == "/kind");
  }
  try {
    parse_structure(R"({"version": "1", "kind": "group", "type": "fg_abelian", "rank": 2, "relations": [[1, 2, 3]]})");
    FAIL("expected a diagnostic");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::semantic);
    CHECK(contains(e.pointer(), "/relations"));
  }
}

TEST_CASE("syntax diagnostics carry a position") {
  try {
    parse_structure("{\n  \"version\": \"1\",\n  \"kind\": ");
    FAIL("expected a diagnostic");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::syntax);
    CHECK(e.line() == 3);
    CHECK(e.column() >= 10);
  }
}

TEST_CASE("large integers are strings, small ones numbers, both accepted") {
  const Integer big = (Integer(1) << 53) + 1;
  CHECK(encode_integer(big).is_string());
  CHECK(encode_integer(Integer(1) << 53).is_number());
  CHECK(decode_integer(encode_integer(big), "") == big);
  CHECK(decode_integer(Json("-12345678901234567890123"), "") == Integer("-12345678901234567890123"));
  CHECK_THROWS_AS(decode_integer(Json("12x"), "/x"), ParseError);
  CHECK_THROWS_AS(decode_integer(Json(1.5), "/x"), ParseError);
}

TEST_CASE("exit-code matrix") {
  const fs::path dir = scratch_dir("matrix");
  REQUIRE(xq_run({"s2xs2", "export", dir.string()}).code == 0);
  const std::string d = (dir / "sphere_D.json").string(), q = (dir / "cylinder_Q.json").string(),
                    c = (dir / "case.json").string();

  SUBCASE("count") {
    const Outcome o = xq_run({"s2xs2", "count"});
    CHECK(o.code == 0);
    CHECK(contains(o.out, "count: 16\n"));
    CHECK(contains(o.out, "pi4_S2"));
  }
  SUBCASE("check passes") {
    for (const auto& f : {d, q, c}) CHECK(xq_run({"check", f}).code == 0);
  }
  SUBCASE("check fails with exit 1") {
    const fs::path bad = dir / "bad.json";
    // pr1 with (a, b) = (1, 1) is not a morphism.
    Bundle b = case_study_bundle();
    const auto qq = build_cylinder_Q(), dd = build_sphere_D();
    b.morphisms.insert_or_assign("pr1", MorphismEntry{"Q", "D", retraction_candidate(qq, dd, 1, 1, 0)});
    spit(bad, serialize_structure(make_structure_file("bundle", encode_bundle(b))));
    const Outcome o = xq_run({"check", bad.string()});
    CHECK(o.code == 1);
    CHECK(contains(o.out, "FAIL"));
  }
  SUBCASE("homotopic: not homotopic") {
    const Outcome o = xq_run({"homotopic", c, "--f", "pr1", "--g", "pr2"});
    CHECK(o.code == 1);
    CHECK(contains(o.out, "∂₃ = 0 forces f₂ = g₂"));
  }
  SUBCASE("homotopic: witness round trip") {
    const fs::path w = dir / "w.json";
    const Outcome o = xq_run({"homotopic", c, "--f", "pr1", "--g", "pr1_r7", "--save-witness", w.string()});
    CHECK(o.code == 0);
    CHECK(contains(o.out, "α₂(e) = 0, α₂(e') = 7*ω(e⊗e), α₂(e'') = 0; α₃ = 0"));
    CHECK(xq_run({"homotopic", c, "--f", "pr1", "--g", "pr1_r7", "--check-witness", w.string()}).code == 0);
    CHECK(xq_run({"homotopic", c, "--f", "pr1_r7", "--g", "pr1", "--check-witness", w.string()}).code == 1);
    CHECK(xq_run({"check", w.string()}).code == 2);
  }
  SUBCASE("usage errors") {
    CHECK(xq_run({}).code == 2);
    CHECK(xq_run({"frobnicate"}).code == 2);
    CHECK(xq_run({"check"}).code == 2);
    CHECK(xq_run({"check", (dir / "missing.json").string()}).code == 2);
    CHECK(xq_run({"homotopic", c, "--f", "nope", "--g", "pr1"}).code == 2);
    CHECK(xq_run({"s2xs2", "classify", "--r-bound", "0"}).code == 2);
  }
  SUBCASE("invalid input") {
    const fs::path bad = dir / "truncated.json";
    spit(bad, "{\"version\": \"1\", \"kind\": ");
    const Outcome o = xq_run({"check", bad.string()});
    CHECK(o.code == 1);
    CHECK(contains(o.err, "line 1"));
  }
  SUBCASE("monoid and constraints") {
    const Outcome m = xq_run({"s2xs2", "monoid", "--table"});
    CHECK(m.code == 0);
    CHECK(contains(m.out, "(T,(1,1))"));
    const Outcome k = xq_run({"s2xs2", "constraints", "--range", "5"});
    CHECK(k.code == 0);
    CHECK(contains(k.out, "(1, 1, 0)"));
  }
}

TEST_CASE("classify report and determinism") {
  const fs::path dir = scratch_dir("classify");
  const fs::path r1 = dir / "r1.json", r2 = dir / "r2.json";
  const Outcome a = xq_run({"s2xs2", "classify", "--ab-range", "2", "--r-bound", "3", "--out", r1.string()});
  const Outcome b = xq_run({"s2xs2", "classify", "--ab-range", "2", "--r-bound", "3", "--out", r2.string()});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(slurp(r1) == slurp(r2));
  const Json report = Json::parse(slurp(r1));
  CHECK(report["count"] == 16);
  CHECK(report["classes"].size() == 2);
  CHECK(report["witnesses"].size() == 14);
  CHECK(report["axioms"].size() == 7);
  CHECK(report["consistent"] == true);
}

TEST_CASE("XQ_SEED is used and reported") {
  const fs::path dir = scratch_dir("seed");
  REQUIRE(xq_run({"s2xs2", "export", dir.string()}).code == 0);
  ::setenv("XQ_SEED", "42", 1);
  const Outcome o = xq_run({"check", (dir / "sphere_D.json").string(), "--depth", "20"});
  CHECK(o.code == 0);
  CHECK(contains(o.out, "seed 42"));
  ::setenv("XQ_SEED", "abc", 1);
  CHECK(xq_run({"check", (dir / "sphere_D.json").string()}).code == 1);
  ::unsetenv("XQ_SEED");
  CHECK(sampling_seed_from_env() == 1);
}

TEST_CASE("the installed binary behaves like run()") {
  const std::string cmd = std::string("\"") + XQ_BINARY + "\" s2xs2 count > /dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  const std::string bad = std::string("\"") + XQ_BINARY + "\" frobnicate > /dev/null 2>&1";
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}
