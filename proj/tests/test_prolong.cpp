#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

// The dg ideal generated by the relations of c, computed inside the Amitsur
// tensor powers: products with embedded universal forms on either side plus
// Amitsur differentials of the previous degree. Returns dims of the quotients.
std::vector<std::size_t> pushout_chain_oracle(const UniversalProlongation& u, const FirstOrderCalculus& c) {
  const Algebra& a = u.calc.alg;
  const std::size_t top = u.calc.max_degree();
  Mat onto = left_d(c.omega(), c.d()) * u.embeddings[1];
  std::vector<Mat> ideal{Mat(kQ, a.dim(), 0), u.embeddings[1] * kernel_basis(onto)};
  for (std::size_t n = 2; n <= top; ++n) {
    Mat gens = u.amitsur.diffs[n - 1] * ideal[n - 1];
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t j = n - i;
      gens = hstack(gens, amitsur_wedge(a, i, j) * kronecker(ideal[i], u.embeddings[j]));
      gens = hstack(gens, amitsur_wedge(a, i, j) * kronecker(u.embeddings[i], ideal[j]));
    }
    ideal.push_back(image_basis(gens));
  }
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= top; ++n) dims.push_back(u.calc.dims[n] - ideal[n].cols());
  return dims;
}

std::vector<std::size_t> formula_dims(std::size_t n0, std::size_t top) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= top; ++k) out.push_back(n0 * ipow(n0 - 1, k));
  return out;
}

}  // namespace

TEST_CASE("Amitsur complex") {
  AmitsurComplex k = amitsur_complex(ground_algebra(kQ), 3);
  CHECK(k.diffs[0].is_zero());
  CHECK(k.diffs[1] == Mat::identity(kQ, 1));
  CHECK(k.diffs[2].is_zero());
  for (const Algebra& a : {qx(2), build_group_algebra(kQ, cyclic_table(2))}) {
    AmitsurComplex c = amitsur_complex(a, 3);
    CHECK(c.diffs.size() == 3);
    CHECK(check_amitsur(c).ok());
  }
}

TEST_CASE("universal prolongation dimensions") {
  UniversalProlongation q = universal_prolongation(ground_algebra(kQ), 3);
  CHECK(q.calc.dims == std::vector<std::size_t>{1, 0, 0, 0});
  UniversalProlongation p2 = universal_prolongation(qx(2), 4);
  CHECK(p2.calc.dims == std::vector<std::size_t>{2, 2, 2, 2, 2});
  CHECK_MESSAGE(p2.checks.ok(), p2.checks.summary());
  UniversalProlongation p3 = universal_prolongation(qx(3), 3);
  CHECK(p3.calc.dims == formula_dims(3, 3));
  CHECK(p3.checks.ok());
  UniversalProlongation z3 = universal_prolongation(build_group_algebra(kQ, cyclic_table(3)), 2);
  CHECK(z3.calc.dims == formula_dims(3, 2));
  CHECK(z3.checks.ok());
  CHECK_THROWS_AS(universal_prolongation(qx(2), 0), InvalidInput);
}

TEST_CASE("universal prolongation of a noncommutative algebra") {
  UniversalProlongation m = universal_prolongation(build_matrix_algebra(kQ, 2), 2);
  CHECK(m.calc.dims == formula_dims(4, 2));
  CHECK(m.checks.ok());
}

TEST_CASE("maximal prolongation endpoints") {
  Algebra a = qx(3);
  UniversalProlongation u = universal_prolongation(a, 3);
  MaximalProlongation top = maximal_prolongation(u, universal_calculus(a).calc);
  CHECK(top.calc.dims == u.calc.dims);
  for (const Mat& s : top.relations) CHECK(s.cols() == 0);
  CHECK(top.checks.ok());
  MaximalProlongation bottom = maximal_prolongation(u, zero_calculus(a));
  CHECK(bottom.calc.dims == std::vector<std::size_t>{3, 0, 0, 0});
  CHECK(bottom.checks.ok());
}

TEST_CASE("maximal prolongation of Kahler calculi against the pushout chain") {
  for (const Algebra& a : {qx(2), qx(3), build_truncated_poly(Field::prime(2), 2)}) {
    UniversalProlongation u = universal_prolongation(a, 3);
    QuotientCalculus k = kahler_calculus(a);
    MaximalProlongation mp = maximal_prolongation(u, k.calc);
    CHECK_MESSAGE(mp.checks.ok(), mp.checks.summary());
    if (a.field().is_rational()) CHECK(mp.calc.dims == pushout_chain_oracle(u, k.calc));
    CHECK(mp.calc.dims[1] == k.calc.dim());
  }
}

TEST_CASE("property: maximal prolongations of enumerated calculi") {
  for (const Algebra& a : {qx(2), qx(3), build_group_algebra(kQ, cyclic_table(2))}) {
    UniversalProlongation u = universal_prolongation(a, 3);
    for (const FirstOrderCalculus& c : quotient_family(a)) {
      MaximalProlongation mp = maximal_prolongation(u, c);
      CHECK_MESSAGE(mp.checks.ok(), mp.checks.summary());
      CHECK(mp.calc.dims == pushout_chain_oracle(u, c));
      // degree <= 1 part is c itself
      FirstOrderCalculus back = degree_one(mp.calc);
      CHECK(back.omega().left() == c.omega().left());
      CHECK(back.d() == c.d());
    }
  }
}

TEST_CASE("trivial extension") {
  Algebra a = qx(3);
  GradedCalculus t = trivial_extension(kahler_calculus(a).calc, 3);
  CHECK(t.dims == std::vector<std::size_t>{3, 2, 0, 0});
  CHECK(check_graded_calculus(t).ok());
}

TEST_CASE("unique dg morphisms") {
  Algebra a = qx(2);
  UniversalProlongation u = universal_prolongation(a, 3);
  AlgMap id = AlgMap::identity(a);
  DgMorphismResult self = unique_dg_morphism(u.calc, u.calc, id);
  REQUIRE(self.morphism.has_value());
  for (std::size_t n = 0; n <= 3; ++n) CHECK(self.morphism->maps[n] == Mat::identity(kQ, u.calc.dims[n]));

  QuotientCalculus k = kahler_calculus(a);
  MaximalProlongation mk = maximal_prolongation(u, k.calc);
  DgMorphismResult onto = unique_dg_morphism(u.calc, mk.calc, id);
  REQUIRE(onto.morphism.has_value());
  CHECK(onto.morphism->maps[1] == k.q.projection);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(rank(onto.morphism->maps[n]) == mk.calc.dims[n]);

  MaximalProlongation mz = maximal_prolongation(u, zero_calculus(a));
  DgMorphismResult none = unique_dg_morphism(mz.calc, u.calc, id);
  CHECK_FALSE(none.morphism.has_value());
  CHECK_FALSE(none.reason.empty());
}

TEST_CASE("dg morphism along a nontrivial algebra map") {
  AlgMap f = square_map();
  UniversalProlongation us = universal_prolongation(f.source(), 2);
  UniversalProlongation ut = universal_prolongation(f.target(), 2);
  DgMorphismResult r = unique_dg_morphism(us.calc, ut.calc, f);
  REQUIRE(r.morphism.has_value());
  UniversalCalculus ua = universal_calculus(f.source());
  UniversalCalculus ub = universal_calculus(f.target());
  CHECK(r.morphism->maps[1] == universal_morphism(f, ua, ub));
}

TEST_CASE("truncation adjunctions") {
  for (const Algebra& a : {qx(2), qx(3)}) {
    const std::size_t top = 2;
    std::vector<FirstOrderCalculus> fodcs = quotient_family(a);
    UniversalProlongation u = universal_prolongation(a, top);
    std::vector<GradedCalculus> graded{u.calc};
    for (const auto& c : fodcs) {
      graded.push_back(maximal_prolongation(u, c).calc);
      graded.push_back(trivial_extension(c, top));
    }
    Report r = truncation_adjoints_check(a, fodcs, graded, top);
    CHECK_MESSAGE(r.ok(), r.summary());
  }
}

TEST_CASE("broken graded calculi are caught") {
  UniversalProlongation u = universal_prolongation(qx(2), 2);
  GradedCalculus g = u.calc;
  g.diffs[1] = g.diffs[1] + g.diffs[1];
  CHECK_FALSE(check_graded_calculus(g).ok());
  g = u.calc;
  g.wedges[1][1] = Mat(kQ, g.dims[2], g.dims[1] * g.dims[1]);
  CHECK_FALSE(check_graded_calculus(g).ok());
  g.wedges[1].pop_back();
  CHECK_THROWS_AS((void)check_graded_calculus(g), InvalidInput);
}
