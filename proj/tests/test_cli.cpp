#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hsep/cli.hpp"
#include "hsep/error.hpp"
#include "hsep/io.hpp"

using namespace hsep;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HSEP_SOURCE_DIR) + "/data/" + name; }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "hsep_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("ring documents round-trip through JSON") {
  io::Context ctx;
  for (const char* doc : {R"({"kind": "matrix", "params": {"base": "Z/4", "n": 2}})",
                          R"({"kind": "group_ring", "params": {"base": "F_3", "cyclic": 3}})", R"("F_9")",
                          R"({"kind": "product", "params": {"left": "F_2", "right": "F_4"}})"}) {
    auto R = io::ring_from_json(io::Json::parse(doc), ctx);
    auto again = io::ring_from_json(io::ring_to_json(R), ctx);
    CHECK(again.moduli() == R.moduli());
    CHECK(again.mul_table() == R.mul_table());
    CHECK(again.unit() == R.unit());
    CHECK(again.label() == R.label());
  }
}

TEST_CASE("hom matrices are row-major over the target") {
  io::Context ctx;
  auto phi = io::hom_from_json(io::Json::parse(R"({"source": "F_2", "target": "F_4", "matrix": [[1], [0]]})"), ctx);
  CHECK(phi.images == std::vector<exactalg::Vec>{{1, 0}});
  auto doc = io::hom_to_json(phi);
  CHECK(doc["matrix"] == io::Json::parse("[[1], [0]]"));
  auto again = io::hom_from_json(doc, ctx);
  CHECK(again.images == phi.images);
}

TEST_CASE("document errors carry a locus") {
  io::Context ctx;
  auto kind_of = [&](const char* doc) {
    try {
      io::hom_from_json(io::Json::parse(doc), ctx);
    } catch (const Error& e) {
      return e.kind() + " | " + e.locus();
    }
    return std::string("accepted");
  };
  CHECK(kind_of(R"({"source": "F_2", "target": "F_4", "matrix": [[1]]})") ==
        "SchemaError | $.matrix: expected 2 rows");
  CHECK(kind_of(R"({"source": "F_2", "target": "F_4", "matrix": [[1], ["x"]]})") ==
        "SchemaError | $.matrix[1][0]: expected a decimal integer");
  CHECK(kind_of(R"({"source": {"kind": "nope"}, "target": "F_4", "matrix": [[1], [0]]})") ==
        "UnknownKind | $.source.kind: nope");
  CHECK(kind_of(R"({"standard": {"kind": "matrix", "params": {"base": "F_2", "n": 2}}, "hom": "x"})").rfind(
            "UnknownHom", 0) == 0);
  CHECK(kind_of(R"({"source": "missing.json", "target": "F_2", "matrix": [[1]]})").rfind("FileNotFound", 0) == 0);
}

TEST_CASE("documents are classified by their keys") {
  using io::DocumentKind;
  CHECK(io::classify(io::Json::parse(R"({"moduli": [2], "unit": [1], "mul": [[[1]]]})")) == DocumentKind::Ring);
  CHECK(io::classify(io::Json::parse(R"({"kind": "matrix", "params": {}})")) == DocumentKind::Ring);
  CHECK(io::classify(io::Json::parse(R"({"source": "a", "target": "b", "matrix": []})")) == DocumentKind::Hom);
  CHECK(io::classify(io::Json::parse(R"({"compose": ["a.json", "b.json"]})")) == DocumentKind::Hom);
  CHECK(io::classify(io::Json::parse(R"({"objects": ["a"], "identities": ["id"], "compose": []})")) ==
        DocumentKind::Category);
  CHECK(io::classify(io::Json::parse(R"({"kind": "poset", "objects": []})")) == DocumentKind::Category);
  CHECK(io::classify(io::Json::parse(R"({"source": {}, "target": {}, "objects": {}})")) == DocumentKind::Functor);
  CHECK(io::classify(io::Json::parse(R"({"example": "x"})")) == DocumentKind::Adjunction);
}

TEST_CASE("category documents with implied identities and thin functor images") {
  io::Context ctx;
  auto C = io::category_from_json(io::Json::parse(R"({
      "label": "span", "objects": ["a", "b", "c"], "identities": {"a": "1a", "b": "1b", "c": "1c"},
      "homs": [{"source": "a", "target": "b", "labels": ["f"]}, {"source": "a", "target": "c", "labels": ["g"]}]})"),
                                  ctx);
  CHECK(C->morphism_count() == 5);
  auto F = io::functor_from_json(io::Json::parse(R"({
      "source": {"kind": "chain", "n": 2}, "target": {"kind": "chain", "n": 3}, "objects": {"0": "1", "1": "2"}})"),
                                 ctx);
  CHECK(F.object_map == std::vector<fincat::Obj>{1, 2});
  CHECK_THROWS_AS(io::functor_from_json(io::Json::parse(R"({
      "source": {"kind": "example", "name": "parallel"}, "target": {"kind": "example", "name": "parallel"},
      "objects": {"0": "0", "1": "1"}})"),
                                        ctx),
                  Error);
}

TEST_CASE("reference examples from the command line") {
  auto epi = invoke({"sep", "epi", data("t2_into_m2_f2.json")});
  CHECK(epi.code == 0);
  CHECK(epi.out.find("ring epimorphism: true") != std::string::npos);

  auto m2 = invoke({"sep", "report", data("m2_f2_over_f2.json")});
  CHECK(m2.code == 1);
  CHECK(m2.out.find("h-separable: false; separable: true") != std::string::npos);

  auto garbage = invoke({"ring", "validate", data("garbage.json")});
  CHECK(garbage.code == 2);
  CHECK(garbage.err.rfind("ParseError: ", 0) == 0);
  CHECK(std::count(garbage.err.begin(), garbage.err.end(), '\n') == 1);
}

TEST_CASE("exit codes and caps") {
  CHECK(invoke({"sep", "report", data("m2_f2_over_f2.json"), "--cap", "3"}).code == 3);
  CHECK(invoke({"sep", "report", data("m2_f2_over_f2.json"), "--cap", "zero"}).code == 2);
  ::setenv("SEPKIT_CAP", "3", 1);
  CHECK(invoke({"sep", "report", data("m2_f2_over_f2.json")}).code == 3);
  CHECK(invoke({"sep", "report", data("m2_f2_over_f2.json"), "--cap", "100"}).code == 1);
  ::unsetenv("SEPKIT_CAP");
  CHECK(invoke({"sep", "idempotents", data("m2_f2_over_f2.json")}).code == 0);
  CHECK(invoke({"sep", "idempotents", data("m2_f2_over_f2.json"), "--h-only"}).code == 1);
  CHECK(invoke({"talg", "witness", "--dim", "0", "--deg", "2", "--field", "q"}).code == 2);
  CHECK(invoke({"sep"}).code == 2);
  CHECK(invoke({"sep", "report", data("f2_diagonal.json"), "--format", "yaml"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("json reports are byte-stable and sorted") {
  auto a = invoke({"sep", "report", data("f9_over_f3.json"), "--format", "json"});
  auto b = invoke({"sep", "report", data("f9_over_f3.json"), "--format", "json"});
  REQUIRE(a.code == 1);
  CHECK(a.out == b.out);
  auto j = io::Json::parse(a.out);
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(j["separability_locus"]["particular"]["formal_sum"] == "2*1 ⊗ 1 + x ⊗ x");
}

TEST_CASE("output file and standard ring emission") {
  fs::path out = scratch("report.txt");
  fs::remove(out);
  auto r = invoke({"sep", "epi", data("t2_into_m2_f2.json"), "--output", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("ring epimorphism: true") != std::string::npos);

  auto emitted = invoke({"ring", "standard", "triangular", "base=F_2", "n=2"});
  REQUIRE(emitted.code == 0);
  fs::path ring = scratch("t2.json");
  write(ring, emitted.out);
  auto validated = invoke({"ring", "validate", ring.string()});
  CHECK(validated.code == 0);
  CHECK(validated.out.find("ring: T_2(F_2)") != std::string::npos);
  CHECK(validated.out.find("order: 8") != std::string::npos);

  auto warned = invoke({"ring", "standard", "polynomial_quotient", "p=2", "f=[1,0,1]"});
  CHECK(warned.code == 0);
  CHECK(warned.err.find("warning: ") != std::string::npos);
}

TEST_CASE("corpus runner reports every mismatch") {
  fs::path dir = scratch("corpus");
  fs::remove_all(dir);
  fs::create_directories(dir / "good");
  fs::create_directories(dir / "bad");
  write(dir / "good" / "expect.json", R"({"args": ["talg", "witness", "--dim", "1", "--deg", "2", "--field", "q"],
                                          "exit": 0, "contains": ["omega omega: 0"]})");
  write(dir / "bad" / "expect.json", R"({"args": ["talg", "witness", "--dim", "1", "--deg", "2", "--field", "q"],
                                         "exit": 1, "contains": ["nothing like this"], "json": {"differ": false}})");
  auto r = invoke({"corpus", "run", dir.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("PASS good") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  CHECK(r.out.find("FAIL bad: $.differ") != std::string::npos);
  CHECK(r.out.find("corpus: 2 cases, 1 failed") != std::string::npos);
}
