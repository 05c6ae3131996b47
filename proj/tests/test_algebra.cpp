#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("truncated polynomial algebras") {
  Algebra a = qx(2);
  CHECK(a.dim() == 2);
  CHECK(check_algebra(a.data()).ok());
  CHECK(a.constant(1, 1, 0) == 0);
  CHECK(a.constant(1, 1, 1) == 0);
  CHECK(qx(1).dim() == 1);
  CHECK(is_commutative(qx(3)));
}

TEST_CASE("unit law violations are reported") {
  AlgebraData d = qx(2).data();
  d.mult(0, 3) = 1;  // x * x = 1
  d.unit = Mat::from_ints(kQ, {{0}, {1}});
  Report r = check_algebra(d);
  CHECK_FALSE(r.ok());
  bool unit_reported = false;
  for (const auto& v : r.violations) unit_reported |= v.axiom.find("unit") != std::string::npos;
  CHECK(unit_reported);
  CHECK_THROWS_AS(Algebra{d}, AxiomError);
}

TEST_CASE("associativity witness") {
  AlgebraData d = qx(3).data();
  d.mult(0, 1 * 3 + 2) = 1;  // x * x^2 = 1, breaks associativity
  Report r = check_algebra(d);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].witness.size() == 3);
}

TEST_CASE("group and matrix algebras") {
  Algebra z2 = build_group_algebra(kQ, cyclic_table(2));
  CHECK(check_algebra(z2.data()).ok());
  CHECK(is_commutative(build_group_algebra(kQ, cyclic_table(3))));
  Algebra m2 = build_matrix_algebra(kQ, 2);
  CHECK_FALSE(is_commutative(m2));
  auto pair = noncommuting_pair(m2);
  REQUIRE(pair.has_value());
  Algebra m2f5 = build_matrix_algebra(Field::prime(5), 2);
  CHECK(m2f5.dim() == 4);
  CHECK_FALSE(is_commutative(m2f5));
  CHECK_FALSE(is_commutative(build_group_algebra(kQ, s3_table())));
  CHECK_THROWS_AS(build_group_algebra(kQ, {{0, 1}, {0, 1}}), InvalidInput);
}

TEST_CASE("E12 E21 differs from E21 E12") {
  Algebra m2 = build_matrix_algebra(kQ, 2);
  Mat e12(kQ, 4, 1), e21(kQ, 4, 1);
  e12(1, 0) = 1;
  e21(2, 0) = 1;
  CHECK_FALSE(m2.product(e12, e21) == m2.product(e21, e12));
}

TEST_CASE("opposite algebras") {
  Algebra m2 = build_matrix_algebra(kQ, 2);
  Algebra op = opposite(m2);
  CHECK_FALSE(op == m2);
  CHECK(check_algebra(op.data()).ok());
  CHECK(opposite(op) == m2);
  for (const Algebra& a : {qx(3), build_group_algebra(kQ, s3_table()), m2, build_group_algebra(kQ, cyclic_table(3))}) {
    CHECK((opposite(a) == a) == is_commutative(a));
  }
}

TEST_CASE("algebra maps") {
  CHECK(check_alg_map({qx(3), qx(3), qx(3).identity()}).ok());
  AlgMap f = square_map();
  CHECK(check_alg_map({f.source(), f.target(), f.matrix()}).ok());
  // y -> x is not multiplicative: y^2 = 0 but x^2 != 0
  Mat bad(kQ, 4, 2);
  bad(0, 0) = 1;
  bad(1, 1) = 1;
  CHECK_FALSE(check_alg_map({qx(2), qx(4), bad}).ok());
  CHECK_THROWS_AS(AlgMap({qx(2), qx(4), bad}), AxiomError);
}

TEST_CASE("square-zero extension") {
  Algebra a = qx(2);
  UniversalCalculus u = universal_calculus(a);
  Algebra s = build_square_zero(a, u.calc.omega());
  CHECK(s.dim() == 4);
  CHECK(check_algebra(s.data()).ok());
  // (0, m)(0, m') = 0
  for (std::size_t i = 2; i < 4; ++i)
    for (std::size_t j = 2; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) CHECK(s.constant(i, j, k) == 0);
  Mat proj(kQ, 2, 4), incl(kQ, 4, 2);
  for (std::size_t i = 0; i < 2; ++i) proj(i, i) = incl(i, i) = 1;
  CHECK(check_alg_map({s, a, proj}).ok());
  CHECK(check_alg_map({a, s, incl}).ok());
}

TEST_CASE("property: random structure constants built from groups are algebras") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    std::size_t n = 2 + rng() % 4;
    Algebra g = build_group_algebra(kQ, cyclic_table(n));
    Mat x = random_matrix(rng, kQ, n, 1);
    Mat y = random_matrix(rng, kQ, n, 1);
    Mat z = random_matrix(rng, kQ, n, 1);
    CHECK(g.product(g.product(x, y), z) == g.product(x, g.product(y, z)));
    CHECK(g.product(x, y) == g.product(y, x));
  }
}
