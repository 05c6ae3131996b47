#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("classification of candidate calculi") {
  Algebra a = qx(2);
  FirstOrderCalculus zero = zero_calculus(a);
  CHECK(check_fodc(a, zero.omega(), zero.d()).kind == CalculusKind::fodc);
  UniversalCalculus u = universal_calculus(a);
  FodcCheck cu = check_fodc(a, u.calc.omega(), u.calc.d());
  CHECK(cu.kind == CalculusKind::fodc);
  CHECK(cu.kills_unit);
  // A (x) A itself with d = 1 (x) a - a (x) 1: Leibniz holds, 1.d has rank 2 < 4
  Bimodule free = free_bimodule(a, 1, a);
  Mat d = kronecker(a.unit(), a.identity()) - kronecker(a.identity(), a.unit());
  FodcCheck cf = check_fodc(a, free, d);
  CHECK(cf.kind == CalculusKind::generalized_only);
  CHECK(rank(left_d(free, d)) == 2);
  CHECK_THROWS_AS(FirstOrderCalculus(free, d), AxiomError);
  // Breaking Leibniz
  Mat bad = u.calc.d();
  bad(1, 0) = 1;
  CHECK(check_fodc(a, u.calc.omega(), bad).kind == CalculusKind::not_generalized);
}

TEST_CASE("universal calculus values") {
  CHECK(universal_calculus(ground_algebra(kQ)).calc.dim() == 0);
  UniversalCalculus u = universal_calculus(qx(2));
  CHECK(u.calc.dim() == 2);
  // d(1) = 0 and d(x) = e0 (x) e1 - e1 (x) e0 = omega_1
  CHECK(u.calc.d() == Mat::from_ints(kQ, {{0, 1}, {0, 0}}));
  CHECK(u.inclusion * u.calc.d().col_block(1, 1) == Mat::from_ints(kQ, {{0}, {1}, {-1}, {0}}));
  CHECK(universal_calculus(build_matrix_algebra(kQ, 2)).calc.dim() == 12);
}

TEST_CASE("split identity (d.1) o inclusion = -id") {
  for (const Algebra& a : {ground_algebra(kQ), qx(2), qx(3), build_group_algebra(kQ, cyclic_table(3)),
                           build_matrix_algebra(kQ, 2), build_truncated_poly(Field::prime(2), 2)}) {
    UniversalCalculus u = universal_calculus(a);
    CHECK(right_d(u.calc.omega(), u.calc.d()) * u.inclusion == -Mat::identity(a.field(), u.calc.dim()));
    CHECK(u.retraction * u.inclusion == Mat::identity(a.field(), u.calc.dim()));
  }
}

TEST_CASE("induced maps") {
  Algebra a = qx(2);
  UniversalCalculus u = universal_calculus(a);
  CHECK(induced_map(u, u.calc).matrix() == Mat::identity(kQ, 2));
  CHECK(induced_map(u, zero_calculus(a)).matrix().rows() == 0);
  QuotientCalculus k = kahler_calculus(a);
  CHECK(induced_map(u, k.calc).matrix() == k.q.projection);
  CHECK(kernel_basis(induced_map(u, k.calc).matrix()) == Mat::from_ints(kQ, {{0}, {1}}));
}

TEST_CASE("quotient calculi") {
  Algebra a = qx(2);
  UniversalCalculus u = universal_calculus(a);
  CHECK(quotient_calculus(u.calc, Mat(kQ, 2, 0)).calc.dim() == 2);
  CHECK(quotient_calculus(u.calc, Mat::identity(kQ, 2)).calc.dim() == 0);
  QuotientCalculus q = quotient_calculus(u.calc, Mat::from_ints(kQ, {{0}, {1}}));
  CHECK(q.calc.dim() == 1);
  CHECK_FALSE(q.calc.d().is_zero());
  // x . dx = 0
  Mat x = Mat::from_ints(kQ, {{0}, {1}});
  CHECK((q.calc.omega().left() * kronecker(x, q.calc.d() * x)).is_zero());
  CHECK_THROWS_AS(quotient_calculus(u.calc, Mat::from_ints(kQ, {{1}, {0}})), InvalidInput);
}

TEST_CASE("sub-bimodule correspondence round trips") {
  for (const Algebra& a : {qx(2), qx(3), build_truncated_poly(Field::prime(2), 2)}) {
    UniversalCalculus u = universal_calculus(a);
    std::vector<Mat> family = enumerate_sub_bimodules(u.calc.omega());
    auto entries = sub_calculus_correspondence(u, family);
    REQUIRE(entries.size() == family.size());
    for (const auto& e : entries) CHECK(e.round_trip);
    CHECK(entries.front().calc.dim() == u.calc.dim());
    CHECK(entries.back().calc.dim() == 0);
  }
}

TEST_CASE("universal property on enumerated families") {
  for (const Algebra& a : {qx(2), qx(3)}) {
    UniversalCalculus u = universal_calculus(a);
    for (const FirstOrderCalculus& c : quotient_family(a)) {
      BimodMap f = induced_map(u, c);
      CHECK(f.matrix() * u.calc.d() == c.d());
      CHECK(rank(f.matrix()) == c.dim());
      auto solved = calculus_morphism(u.calc, c);
      REQUIRE(solved.has_value());
      CHECK(*solved == f.matrix());
      CHECK(calculus_morphism_gauge(u.calc, c) == 0);
    }
  }
}

TEST_CASE("property: surjectivity variants agree under Leibniz") {
  for (const Algebra& a : {qx(3), build_group_algebra(kQ, cyclic_table(3)), build_matrix_algebra(kQ, 2)}) {
    UniversalCalculus u = universal_calculus(a);
    for (const Mat& n : enumerate_sub_bimodules(u.calc.omega())) {
      QuotientCalculus q = quotient_calculus(u.calc, n);
      FodcCheck c = check_fodc(a, q.calc.omega(), q.calc.d());
      CHECK(c.left_surjective == c.right_surjective);
      CHECK(c.left_surjective == c.two_sided_surjective);
    }
  }
}
