#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

// dim H^n by brute force: ranks of the neighbouring differentials.
std::vector<std::size_t> betti_oracle(const GradedCalculus& g) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < g.max_degree(); ++n) {
    std::size_t in_rank = n == 0 ? 0 : rank(g.diff(n - 1));
    out.push_back(g.dims[n] - rank(g.diff(n)) - in_rank);
  }
  return out;
}

}  // namespace

TEST_CASE("cohomology of small complexes") {
  CochainComplex zero{kQ, {0, 0, 0}, {Mat(kQ, 0, 0), Mat(kQ, 0, 0)}};
  CHECK(cohomology(zero).dims() == std::vector<std::size_t>{0, 0});
  CochainComplex line{kQ, {1, 0}, {Mat(kQ, 0, 1)}};
  CohomologyReport h = cohomology(line);
  CHECK(h.dims() == std::vector<std::size_t>{1});
  CHECK(h.degrees[0].representatives == Mat::identity(kQ, 1));
  CochainComplex bad{kQ, {1, 1, 1}, {Mat::identity(kQ, 1), Mat::identity(kQ, 1)}};
  CHECK_THROWS_AS(cohomology(bad), InvalidInput);
}

TEST_CASE("universal de Rham cohomology is concentrated in degree 0") {
  DeRham q = de_rham(ground_algebra(kQ), Flavor::universal, 3);
  CHECK(q.cohomology.dims() == std::vector<std::size_t>{1, 0, 0});
  CHECK(de_rham(ground_algebra(kQ), Flavor::kahler, 2).cohomology.dims() == std::vector<std::size_t>{1, 0});
  DeRham x2 = de_rham(qx(2), Flavor::universal, 4);
  CHECK(x2.cohomology.dims() == std::vector<std::size_t>{1, 0, 0, 0});
  DeRham z2 = de_rham(build_group_algebra(kQ, cyclic_table(2)), Flavor::universal, 3);
  CHECK(z2.cohomology.dims() == std::vector<std::size_t>{1, 0, 0});
  // the unit spans H^0
  CHECK(x2.cohomology.degrees[0].representatives == qx(2).unit());
}

TEST_CASE("Kahler de Rham of Q[x]/(x^2)") {
  DeRham k = de_rham(qx(2), Flavor::kahler, 3);
  CHECK(k.cohomology.dims() == betti_oracle(k.calc));
  CHECK(k.cohomology.dims()[0] == 1);
  CHECK_THROWS_AS(de_rham(build_matrix_algebra(kQ, 2), Flavor::kahler, 2), PreconditionError);
}

TEST_CASE("rank identity at every degree") {
  for (const Algebra& a : {qx(2), qx(3)}) {
    for (Flavor flavor : {Flavor::universal, Flavor::kahler}) {
      DeRham d = de_rham(a, flavor, 3);
      for (const auto& deg : d.cohomology.degrees) {
        CHECK(deg.dim_cochains == rank(d.calc.diff(deg.n)) + deg.boundary_rank + deg.dim);
        CHECK(deg.representatives.cols() == deg.dim);
      }
      CHECK(d.cohomology.dims() == betti_oracle(d.calc));
    }
  }
}

TEST_CASE("comparison between universal and Kahler de Rham") {
  DeRhamComparison q = de_rham_comparison(ground_algebra(kQ), 2);
  CHECK(q.on_cohomology[0] == Mat::identity(kQ, 1));
  DeRhamComparison x2 = de_rham_comparison(qx(2), 3);
  CHECK(x2.checks.ok());
  CHECK(x2.on_cohomology[0] == Mat::identity(kQ, 1));
  Field f2 = Field::prime(2);
  DeRhamComparison c2 = de_rham_comparison(build_truncated_poly(f2, 2), 2);
  CHECK(c2.checks.ok());
  CHECK(is_invertible(c2.map.maps[1]));
  CHECK_THROWS_AS(de_rham_comparison(build_matrix_algebra(kQ, 2), 2), PreconditionError);
}

TEST_CASE("cohomology is functorial on composable dg morphisms") {
  Algebra a = qx(3);
  const std::size_t top = 3;
  UniversalProlongation u = universal_prolongation(a, top);
  MaximalProlongation k = maximal_prolongation(u, kahler_calculus(a).calc);
  MaximalProlongation z = maximal_prolongation(u, zero_calculus(a));
  AlgMap id = AlgMap::identity(a);
  auto f = unique_dg_morphism(u.calc, k.calc, id);
  auto g = unique_dg_morphism(k.calc, z.calc, id);
  auto gf = unique_dg_morphism(u.calc, z.calc, id);
  REQUIRE(f.morphism);
  REQUIRE(g.morphism);
  REQUIRE(gf.morphism);
  CohomologyReport hu = cohomology(underlying_complex(u.calc));
  CohomologyReport hk = cohomology(underlying_complex(k.calc));
  CohomologyReport hz = cohomology(underlying_complex(z.calc));
  for (std::size_t n = 0; n < top; ++n) {
    Mat hf = induced_on_cohomology(hu.degrees[n], hk.degrees[n], f.morphism->maps[n]);
    Mat hg = induced_on_cohomology(hk.degrees[n], hz.degrees[n], g.morphism->maps[n]);
    Mat hgf = induced_on_cohomology(hu.degrees[n], hz.degrees[n], gf.morphism->maps[n]);
    CHECK(hgf == hg * hf);
  }
}
