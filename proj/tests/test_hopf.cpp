#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("bimonoid axioms") {
  Bimonoid z2 = group_bimonoid(kQ, cyclic_table(2));
  CHECK(check_bimonoid(z2.data()).ok());
  BimonoidData bad = z2.data();
  // delta(g) = 1 (x) g
  bad.comult = Mat(kQ, 4, 2);
  bad.comult(0, 0) = 1;
  bad.comult(1, 1) = 1;
  Report r = check_bimonoid(bad);
  CHECK_FALSE(r.ok());
  CHECK_THROWS_AS(Bimonoid{bad}, AxiomError);
  bad.comult = Mat(kQ, 3, 2);
  CHECK_THROWS_AS((void)check_bimonoid(bad), InvalidInput);
  CHECK(check_bimonoid(group_bimonoid(kQ, s3_table()).data()).ok());
}

TEST_CASE("regular and tensor square Hopf modules") {
  for (const auto& table : {cyclic_table(1), cyclic_table(2), cyclic_table(3), s3_table()}) {
    Bimonoid h = group_bimonoid(kQ, table);
    CHECK(check_hopf_module(h, regular_hopf_module(h)).ok());
    CHECK(check_hopf_module(h, tensor_square_hopf_module(h)).ok());
  }
}

TEST_CASE("universal coactions") {
  UniversalHopf trivial = universal_coactions(group_bimonoid(kQ, cyclic_table(1)));
  CHECK(trivial.module.module.dim() == 0);
  CHECK(trivial.checks.ok());
  for (std::size_t n : {2, 3}) {
    UniversalHopf uh = universal_coactions(group_bimonoid(kQ, cyclic_table(n)));
    CHECK(uh.module.module.dim() == n * n - n);
    CHECK_MESSAGE(uh.checks.ok(), uh.checks.summary());
  }
  UniversalHopf s3 = universal_coactions(group_bimonoid(kQ, s3_table()));
  CHECK(s3.checks.ok());
}

TEST_CASE("universal coactions on Z/2 by hand") {
  Bimonoid h = group_bimonoid(kQ, cyclic_table(2));
  UniversalHopf uh = universal_coactions(h);
  // omega_1 = 1 (x) g - g (x) 1 and omega_2 = g (x) g - ... : work in A (x) A
  const Mat& incl = uh.universal.inclusion;
  for (std::size_t c = 0; c < incl.cols(); ++c) {
    // rho(v) for v = sum v_ab a (x) b is sum v_ab a (x) b (x) ab
    Mat expected(kQ, 8, 1);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) expected((a * 2 + b) * 2 + (a + b) % 2, 0) = incl(a * 2 + b, c);
    CHECK(kronecker(incl, h.alg().identity()) * uh.module.right_coaction.col_block(c, 1) == expected);
  }
}

TEST_CASE("bicovariance") {
  for (std::size_t n : {2, 3}) {
    Bimonoid h = group_bimonoid(kQ, cyclic_table(n));
    const Algebra& a = h.alg();
    UniversalCalculus u = universal_calculus(a);
    CHECK(bicovariance_check(h, u.calc).bicovariant());
    CHECK(bicovariance_check(h, zero_calculus(a)).bicovariant());
    for (const Mat& sub : enumerate_sub_bimodules(u.calc.omega())) {
      QuotientCalculus q = quotient_calculus(u.calc, sub);
      Bicovariance b = bicovariance_check(h, q.calc);
      CHECK(b.bicovariant() == group_subcomodule_oracle(cyclic_table(n), u.inclusion * sub));
      if (b.bicovariant()) {
        REQUIRE(b.module.has_value());
        CHECK(check_hopf_module(h, *b.module).ok());
        CHECK(b.projection_is_hopf_map);
        CHECK(b.d_is_comodule_map);
        CHECK(b.witnesses.ok());
      }
    }
  }
}

TEST_CASE("Z/2 has exactly the trivial bicovariant calculi among its quotients") {
  Bimonoid h = group_bimonoid(kQ, cyclic_table(2));
  UniversalCalculus u = universal_calculus(h.alg());
  std::vector<Mat> family = enumerate_sub_bimodules(u.calc.omega());
  CHECK(family.size() == 4);
  std::size_t bicovariant = 0;
  for (const Mat& sub : family) bicovariant += bicovariance_check(h, quotient_calculus(u.calc, sub).calc).bicovariant();
  CHECK(bicovariant == 2);
}
