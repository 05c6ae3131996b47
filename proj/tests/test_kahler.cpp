#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("Kahler dimensions match the classical presentation") {
  for (std::size_t n = 2; n <= 5; ++n) CHECK(kahler_calculus(qx(n)).calc.dim() == classical_dim(kQ, n));
  CHECK(kahler_calculus(qx(2)).calc.dim() == 1);
  CHECK(kahler_calculus(qx(3)).calc.dim() == 2);
  CHECK(kahler_calculus(qx(4)).calc.dim() == 3);
  Field f2 = Field::prime(2), f3 = Field::prime(3);
  CHECK(kahler_calculus(build_truncated_poly(f2, 2)).calc.dim() == 2);
  CHECK(kahler_calculus(build_truncated_poly(f3, 3)).calc.dim() == 3);
  CHECK(classical_dim(f3, 3) == 3);
  CHECK(kahler_calculus(build_truncated_poly(f3, 4)).calc.dim() == classical_dim(f3, 4));
}

TEST_CASE("Kahler relation on Q[x]/(x^2)") {
  UniversalCalculus u = universal_calculus(qx(2));
  // dx.x - x.dx = -2 (x (x) x)
  Mat x = Mat::from_ints(kQ, {{0}, {1}});
  Mat dx = u.calc.d() * x;
  const Bimodule& om = u.calc.omega();
  CHECK(om.right() * kronecker(dx, x) - om.left() * kronecker(x, dx) == Mat::from_ints(kQ, {{0}, {-2}}));
  CHECK(kahler_relations(u) == Mat::from_ints(kQ, {{0}, {1}}));
}

TEST_CASE("Kahler calculus requires commutativity") {
  try {
    (void)kahler_calculus(build_matrix_algebra(kQ, 2));
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("E11*E12 != E12*E11 (basis indices 0, 1)") != std::string::npos);
  }
}

TEST_CASE("centrality") {
  for (const Algebra& a : {qx(3), build_group_algebra(kQ, cyclic_table(3))}) {
    CHECK(centrality_check(regular_bimodule(a)));
    CHECK(centrality_check(kahler_calculus(a).calc.omega()));
  }
  CHECK_FALSE(centrality_check(universal_calculus(qx(2)).calc.omega()));
  CHECK_THROWS_AS(centrality_check(regular_bimodule(build_matrix_algebra(kQ, 2))), PreconditionError);
}

TEST_CASE("property: Kahler differential is a central derivation") {
  for (const Algebra& a : {qx(4), build_group_algebra(kQ, cyclic_table(3)), build_truncated_poly(Field::prime(2), 3)}) {
    QuotientCalculus k = kahler_calculus(a);
    const Bimodule& om = k.calc.omega();
    const Mat& d = k.calc.d();
    CHECK(d * a.mult() == right_d(om, d) + left_d(om, d));
    CHECK(left_d(om, d) == right_d(om, d) * swap_matrix(a.field(), a.dim(), a.dim()));
    // the induced map from the universal calculus is exactly the quotient map
    CHECK(induced_map(universal_calculus(a), k.calc).matrix() == k.q.projection);
  }
}
