#include "omega/hopf.hpp"

namespace omega {

namespace {

void check_shapes(const BimonoidData& d) {
  const std::size_t n = d.alg.dim();
  if (d.comult.rows() != n * n || d.comult.cols() != n) throw InvalidInput("comultiplication must be n^2 x n");
  if (d.counit.rows() != 1 || d.counit.cols() != n) throw InvalidInput("counit must be 1 x n");
  require_same_field(d.comult, d.alg.mult());
  require_same_field(d.counit, d.alg.mult());
}

// Records whether f: M -> N commutes with both coactions.
void expect_comodule_map(Report& out, const std::string& tag, const Mat& f, const Mat& m_left,
                         const Mat& m_right, const Mat& n_left, const Mat& n_right, const Mat& id_a) {
  expect_equal(out, tag + " left colinear", kronecker(id_a, f) * m_left, n_left * f);
  expect_equal(out, tag + " right colinear", kronecker(f, id_a) * m_right, n_right * f);
}

}  // namespace

Mat tensor_square_mult(const Algebra& a) {
  return braid_columns(kronecker(a.mult(), a.mult()), a.dim(), a.dim(), a.dim(), a.dim());
}

Report check_bimonoid(const BimonoidData& d) {
  check_shapes(d);
  Report out;
  const Algebra& a = d.alg;
  const std::size_t n = a.dim();
  const Mat id = a.identity();
  const Mat& delta = d.comult;
  const Mat& eps = d.counit;
  expect_equal(out, "coassociativity", kronecker(delta, id) * delta, kronecker(id, delta) * delta, {n});
  expect_equal(out, "left counit", kronecker(eps, id) * delta, id, {n});
  expect_equal(out, "right counit", kronecker(id, eps) * delta, id, {n});
  expect_equal(out, "comultiplication is multiplicative", delta * a.mult(), tensor_square_mult(a) * kronecker(delta, delta),
               {n, n});
  expect_equal(out, "comultiplication is unital", delta * a.unit(), kronecker(a.unit(), a.unit()));
  expect_equal(out, "counit is multiplicative", eps * a.mult(), kronecker(eps, eps), {n, n});
  expect_equal(out, "counit is unital", eps * a.unit(), Mat::identity(a.field(), 1));
  return out;
}

Bimonoid::Bimonoid(BimonoidData data) : data_(std::move(data)) {
  Report r = check_bimonoid(data_);
  if (!r.ok()) throw AxiomError("not a bimonoid: " + r.summary());
}

Bimonoid group_bimonoid(const Field& field, const std::vector<std::vector<std::size_t>>& table) {
  Algebra a = build_group_algebra(field, table);
  const std::size_t n = a.dim();
  Mat delta(field, n * n, n);
  Mat eps(field, 1, n);
  for (std::size_t g = 0; g < n; ++g) {
    delta(g * n + g, g) = field.one();
    eps(0, g) = field.one();
  }
  return Bimonoid({a, delta, eps});
}

Report check_hopf_module(const Bimonoid& h, const HopfModule& hm) {
  const Algebra& a = h.alg();
  const Bimodule& m = hm.module;
  if (!(m.left_alg() == a) || !(m.right_alg() == a)) throw InvalidInput("check_hopf_module: module is not over the bimonoid");
  const std::size_t n = a.dim();
  const std::size_t k = m.dim();
  const Mat& lam = hm.left_coaction;
  const Mat& rho = hm.right_coaction;
  if (lam.rows() != n * k || lam.cols() != k || rho.rows() != k * n || rho.cols() != k) {
    throw InvalidInput("check_hopf_module: coaction shapes do not match the module");
  }
  const Field& f = a.field();
  const Mat id_a = a.identity();
  const Mat id_m = Mat::identity(f, k);
  const Mat& delta = h.comult();
  const Mat& eps = h.counit();
  Report out;
  expect_equal(out, "left coassociativity", kronecker(delta, id_m) * lam, kronecker(id_a, lam) * lam, {k});
  expect_equal(out, "left counit", kronecker(eps, id_m) * lam, id_m, {k});
  expect_equal(out, "right coassociativity", kronecker(rho, id_a) * rho, kronecker(id_m, delta) * rho, {k});
  expect_equal(out, "right counit", kronecker(id_m, eps) * rho, id_m, {k});
  expect_equal(out, "bicomodule", kronecker(lam, id_a) * rho, kronecker(id_a, rho) * lam, {k});

  // Diagonal actions of A (x) A on A (x) M and M (x) A: shuffle the middle
  // factors, then act factorwise.
  expect_equal(out, "left coaction is left linear", lam * m.left(),
               kronecker(a.mult(), m.left()) * braid_rows(kronecker(delta, lam), n, n, n, k), {n, k});
  expect_equal(out, "left coaction is right linear", lam * m.right(),
               kronecker(a.mult(), m.right()) * braid_rows(kronecker(lam, delta), n, k, n, n), {k, n});
  expect_equal(out, "right coaction is left linear", rho * m.left(),
               kronecker(m.left(), a.mult()) * braid_rows(kronecker(delta, rho), n, n, k, n), {n, k});
  expect_equal(out, "right coaction is right linear", rho * m.right(),
               kronecker(m.right(), a.mult()) * braid_rows(kronecker(rho, delta), k, n, n, n), {k, n});
  return out;
}

HopfModule regular_hopf_module(const Bimonoid& h) {
  return HopfModule{regular_bimodule(h.alg()), h.comult(), h.comult()};
}

HopfModule tensor_square_hopf_module(const Bimonoid& h) {
  const Algebra& a = h.alg();
  const Mat id = a.identity();
  const Mat shuffle = braid_rows(kronecker(h.comult(), h.comult()), a.dim(), a.dim(), a.dim(), a.dim());
  Mat lam = kronecker({a.mult(), id, id}) * shuffle;
  Mat rho = kronecker({id, id, a.mult()}) * shuffle;
  return HopfModule{free_bimodule(a, 1, a), std::move(lam), std::move(rho)};
}

UniversalHopf universal_coactions(const Bimonoid& h) {
  const Algebra& a = h.alg();
  UniversalCalculus u = universal_calculus(a);
  const Bimodule& omega = u.calc.omega();
  const Mat& d = u.calc.d();
  const Mat id = a.identity();
  HopfModule square = tensor_square_hopf_module(h);
  Mat rho = kronecker(left_d(omega, d), id) * square.right_coaction * u.inclusion;
  Mat lam = kronecker(id, -right_d(omega, d)) * square.left_coaction * u.inclusion;
  HopfModule module{omega, std::move(lam), std::move(rho)};
  Report checks = check_hopf_module(h, module);
  const Mat& delta = h.comult();
  expect_equal(checks, "d is left colinear", module.left_coaction * d, kronecker(id, d) * delta, {a.dim()});
  expect_equal(checks, "d is right colinear", module.right_coaction * d, kronecker(d, id) * delta, {a.dim()});
  expect_comodule_map(checks, "inclusion", u.inclusion, module.left_coaction, module.right_coaction,
                      square.left_coaction, square.right_coaction, id);
  expect_equal(checks, "multiplication kills the coaction image",
               kronecker(a.mult(), id) * square.right_coaction * u.inclusion,
               Mat(a.field(), a.dim() * a.dim(), u.calc.dim()));
  return UniversalHopf{std::move(u), std::move(module), std::move(checks)};
}

Bicovariance bicovariance_check(const Bimonoid& h, const FirstOrderCalculus& c) {
  if (!(c.alg() == h.alg())) throw InvalidInput("bicovariance_check: calculus is not over the bimonoid");
  UniversalHopf uh = universal_coactions(h);
  const Algebra& a = h.alg();
  const Mat id = a.identity();
  Bicovariance out;
  BimodMap proj = induced_map(uh.universal, c);
  out.relations = kernel_basis(proj.matrix());
  const Mat& n = out.relations;
  const Mat& lam = uh.module.left_coaction;
  const Mat& rho = uh.module.right_coaction;
  if (auto j = first_outside_span(kronecker(id, n), lam * n)) {
    out.witnesses.add("left coaction leaves the relations", {*j});
  } else {
    out.left_subcomodule = true;
  }
  if (auto j = first_outside_span(kronecker(n, id), rho * n)) {
    out.witnesses.add("right coaction leaves the relations", {*j});
  } else {
    out.right_subcomodule = true;
  }
  if (!out.bicovariant()) return out;

  const Mat& f = proj.matrix();
  Quotient q = as_quotient(f);
  auto lam_c = factor_through(kronecker(id, f) * lam, q);
  auto rho_c = factor_through(kronecker(f, id) * rho, q);
  if (!lam_c || !rho_c) throw std::logic_error("coactions do not descend although the relations are a subcomodule");
  HopfModule module{c.omega(), std::move(*lam_c), std::move(*rho_c)};
  out.witnesses.merge(check_hopf_module(h, module), "quotient: ");
  Report proj_report;
  expect_comodule_map(proj_report, "projection", f, lam, rho, module.left_coaction, module.right_coaction, id);
  out.projection_is_hopf_map = proj_report.ok();
  Report d_report;
  expect_equal(d_report, "d left colinear", module.left_coaction * c.d(), kronecker(id, c.d()) * h.comult());
  expect_equal(d_report, "d right colinear", module.right_coaction * c.d(), kronecker(c.d(), id) * h.comult());
  out.d_is_comodule_map = d_report.ok();
  out.witnesses.merge(proj_report);
  out.witnesses.merge(d_report);
  out.module = std::move(module);
  return out;
}

}  // namespace omega
