#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "golden_cases.hpp"
#include "omega/io.hpp"
#include "support.hpp"

using namespace testing;
namespace fs = std::filesystem;

namespace {

const fs::path kData = OMEGA_TEST_DATA_DIR;

// Set OMEGA_UPDATE_GOLDEN=1 to rewrite the golden files from the current build.
bool updating() {
  const char* v = std::getenv("OMEGA_UPDATE_GOLDEN");
  return v != nullptr && std::string(v) == "1";
}

}  // namespace

TEST_CASE("golden JSON outputs are reproduced byte for byte") {
  for (auto c : golden_cases()) {
    CAPTURE(c.name);
    c.args.push_back("--format");
    c.args.push_back("json");
    Outcome first = invoke(c.args);
    Outcome second = invoke(c.args);
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    const fs::path golden = kGolden / (c.name + ".json");
    if (updating()) {
      std::ofstream(golden, std::ios::binary) << first.out;
      continue;
    }
    REQUIRE(fs::exists(golden));
    CHECK(first.out == read_file(golden));
  }
}

TEST_CASE("golden values") {
  auto json_of = [](std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    Outcome o = invoke(args);
    REQUIRE(o.code == 0);
    return io::Json::parse(o.out);
  };
  CHECK(json_of({"universal", fixture("m2q.json")})["dim"] == 12);
  CHECK(json_of({"universal", fixture("qs3.json")})["dim"] == 30);
  CHECK(json_of({"universal", fixture("qx2.json")})["split_identity"] == true);
  CHECK(json_of({"check", fixture("qx2.json")})["status"] == "valid");
  CHECK(json_of({"kahler", fixture("qx3.json")})["dim"] == 2);
  CHECK(json_of({"kahler", fixture("f3x3.json")})["dim"] == 3);
  auto dims = json_of({"prolong", fixture("qx3.json"), "--max-degree", "3"})["dims"];
  CHECK(dims == io::Json({3, 6, 12, 24}));
  auto h = json_of({"cohomology", fixture("qz2.json"), "--max-degree", "3"})["degrees"];
  REQUIRE(h.size() == 3);
  CHECK(h[0]["dim_H"] == 1);
  CHECK(h[1]["dim_H"] == 0);
  CHECK(h[2]["dim_H"] == 0);
  auto b = json_of({"bicovariant", fixture("qz2.json"), "--relations", fixture("qz2_rel.json")});
  CHECK(b["bicovariant"] == false);
  auto e = json_of({"extend", "--map", fixture("square_map.json"), "--calculus", fixture("calc_kahler.json")});
  CHECK(e["matches_extension"] == true);
  CHECK(e["surjective_from_universal"] == true);
}

TEST_CASE("text output flattens the report") {
  Outcome o = invoke({"check", fixture("qx2.json")});
  CHECK(o.code == 0);
  CHECK(o.out.find("status: valid\n") != std::string::npos);
  o = invoke({"universal", fixture("qx2.json")});
  CHECK(o.out.find("dim: 2\n") != std::string::npos);
  CHECK(o.out.find("kernel_basis[0]: 0 1 -1 0\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  Outcome o = invoke({"kahler", fixture("m2q.json")});
  CHECK(o.code == 2);
  CHECK(o.err.find("E11*E12 != E12*E11") != std::string::npos);

  CHECK(invoke({"cohomology", fixture("m2q.json"), "--flavor", "kahler", "--max-degree", "2"}).code == 2);
  CHECK(invoke({"hopf-check", fixture("qx2.json")}).code == 2);
  CHECK(invoke({"prolong", fixture("qs3.json"), "--max-degree", "8"}).code == 2);

  o = invoke({"check", (kData / "bad_unit.json").string()});
  CHECK(o.code == 1);
  CHECK(o.out.find("status: invalid") != std::string::npos);
  CHECK(invoke({"universal", (kData / "bad_unit.json").string()}).code == 1);
  CHECK(invoke({"check", (kData / "bad_shape.json").string()}).code == 1);
  CHECK(invoke({"check", (kData / "bad_scalar.json").string()}).code == 1);
  CHECK(invoke({"check", (kData / "bad_comult.json").string()}).code == 1);
  CHECK(invoke({"hopf-check", (kData / "bad_comult.json").string()}).code == 1);
  CHECK(invoke({"check", (kData / "missing.json").string()}).code == 1);
  CHECK(invoke({"prolong", fixture("qx2.json"), "--calculus", "bogus", "--max-degree", "2"}).code == 1);

  CHECK(invoke({}).code == 64);
  CHECK(invoke({"frobnicate"}).code == 64);
  CHECK(invoke({"prolong", fixture("qx2.json")}).code == 64);
  CHECK(invoke({"universal", fixture("qx2.json"), "--format", "yaml"}).code == 64);
  o = invoke({"prolong", "--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("--max-degree") != std::string::npos);
}

TEST_CASE("guardrail honours OMEGA_MAX_DIM and --force") {
  ::setenv("OMEGA_MAX_DIM", "10", 1);
  CHECK(invoke({"prolong", fixture("qx3.json"), "--max-degree", "3"}).code == 2);
  CHECK(invoke({"prolong", fixture("qx3.json"), "--max-degree", "3", "--force"}).code == 0);
  ::setenv("OMEGA_MAX_DIM", "lots", 1);
  CHECK(invoke({"prolong", fixture("qx3.json"), "--max-degree", "3"}).code == 1);
  ::unsetenv("OMEGA_MAX_DIM");
  CHECK(invoke({"prolong", fixture("qx3.json"), "--max-degree", "3"}).code == 0);
}

TEST_CASE("every shipped algebra fixture passes check") {
  std::size_t seen = 0;
  for (const auto& entry : fs::directory_iterator(kFixtures)) {
    const io::Json j = io::load_file(entry.path());
    if (!j.contains("mult")) continue;
    CAPTURE(entry.path().string());
    CHECK(invoke({"check", entry.path().string()}).code == 0);
    ++seen;
  }
  CHECK(seen == 10);
}

TEST_CASE("fixtures agree with the builders") {
  auto load = [](const std::string& name) { return io::parse_algebra(io::load_file(kFixtures / name)); };
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  CHECK(load("q.json") == ground_algebra(kQ));
  CHECK(load("qx2.json") == qx(2));
  CHECK(load("qx3.json") == qx(3));
  CHECK(load("qx4.json") == qx(4));
  CHECK(load("f2x2.json") == build_truncated_poly(f2, 2));
  CHECK(load("f3x3.json") == build_truncated_poly(f3, 3));
  CHECK(load("qz2.json") == build_group_algebra(kQ, cyclic_table(2)));
  CHECK(load("qz3.json") == build_group_algebra(kQ, cyclic_table(3)));
  CHECK(load("qs3.json") == build_group_algebra(kQ, s3_table()));
  CHECK(load("m2q.json") == build_matrix_algebra(kQ, 2));

  for (const char* name : {"qz2.json", "qz3.json", "qs3.json"}) {
    const io::Json j = io::load_file(kFixtures / name);
    Algebra a = io::parse_algebra(j);
    auto data = io::parse_bimonoid_data(j, a);
    REQUIRE(data.has_value());
    CHECK(data->comult == group_bimonoid(kQ, a.dim() == 6 ? s3_table() : cyclic_table(a.dim())).comult());
  }

  const io::Json m = io::load_file(kFixtures / "square_map.json");
  AlgMap f = io::parse_morphism(m, kFixtures);
  CHECK(f.matrix() == square_map().matrix());
  CHECK(f.source() == qx(2));
  CHECK(f.target() == qx(4));
}

TEST_CASE("json round trip of algebras and scalars") {
  Algebra a = build_truncated_poly(Field::prime(5), 3);
  CHECK(io::parse_algebra(io::algebra_to_json(a.data())) == a);
  const Field q = kQ;
  CHECK(io::parse_scalar(q, io::Json("-3/6")) == q.parse("-1/2"));
  CHECK(io::parse_scalar(q, io::Json(7)) == q.from_int(7));
  CHECK_THROWS_AS((void)io::parse_scalar(q, io::Json(1.5)), InvalidInput);
  CHECK_THROWS_AS((void)io::parse_field(io::Json{{"Fp", 4}}), InvalidInput);
  CHECK_THROWS_AS((void)io::parse_field(io::Json("R")), InvalidInput);
}
