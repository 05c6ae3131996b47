#include "omega/scalars.hpp"

#include <stdexcept>

namespace omega {

Mat universal_morphism(const AlgMap& f, const UniversalCalculus& source, const UniversalCalculus& target) {
  if (!(source.calc.alg() == f.source()) || !(target.calc.alg() == f.target())) {
    throw InvalidInput("universal_morphism: calculi do not match the map");
  }
  // retraction restricted to ker(m) is the inverse of the inclusion.
  return target.retraction * kronecker(f.matrix(), f.matrix()) * source.inclusion;
}

Pushforward calc_pushforward(const AlgMap& f, const FirstOrderCalculus& c) {
  if (!(c.alg() == f.source())) throw InvalidInput("calc_pushforward: calculus is not over the source algebra");
  UniversalCalculus ua = universal_calculus(f.source());
  UniversalCalculus ub = universal_calculus(f.target());
  Mat relations_a = calculus_kernel(ua, c);
  Mat relations_b = saturate(ub.calc.omega(), universal_morphism(f, ua, ub) * relations_a);
  QuotientCalculus result = quotient_calculus(ub.calc, relations_b);
  return Pushforward{std::move(result), std::move(relations_b)};
}

Mat pushforward_relations_via_extension(const AlgMap& f, const FirstOrderCalculus& c) {
  if (!(c.alg() == f.source())) throw InvalidInput("pushforward_relations_via_extension: wrong algebra");
  UniversalCalculus ua = universal_calculus(f.source());
  UniversalCalculus ub = universal_calculus(f.target());
  const Field& fld = f.source().field();
  const Bimodule& omega_b = ub.calc.omega();
  SubBimodule relations = sub_bimodule(ua.calc.omega(), calculus_kernel(ua, c));
  if (relations.inclusion.cols() == 0) return Mat(fld, omega_b.dim(), 0);
  Extension ext = extend_bimodule(f, f, relations.module);
  Mat id_b = f.target().identity();
  Mat fu = universal_morphism(f, ua, ub) * relations.inclusion;
  // b (x) n (x) b' -> b . f_u(n) . b'
  Mat act = omega_b.left() * kronecker(id_b, omega_b.right()) * kronecker({id_b, fu, id_b});
  Mat onto_ext = ext.q_right.projection * kronecker(ext.q_left.projection, id_b);
  auto hat = factor_through(act, as_quotient(onto_ext));
  if (!hat) throw std::logic_error("extended universal morphism is not well defined");
  return image_basis(*hat);
}

Pullback calc_pullback(const AlgMap& f, const FirstOrderCalculus& t) {
  if (!(t.alg() == f.target())) throw InvalidInput("calc_pullback: calculus is not over the target algebra");
  UniversalCalculus ua = universal_calculus(f.source());
  UniversalCalculus ub = universal_calculus(f.target());
  Mat p = preimage(universal_morphism(f, ua, ub), calculus_kernel(ub, t));
  QuotientCalculus result = quotient_calculus(ua.calc, p);
  bool matches = calculus_kernel(ua, result.calc) == p;
  return Pullback{std::move(result), std::move(p), matches};
}

std::size_t AdjunctionReport::mismatches() const {
  std::size_t n = 0;
  for (const auto& p : pairs) n += p.from_pushforward != p.into_pullback ? 1 : 0;
  return n;
}

AdjunctionReport verify_poset_adjunction(const AlgMap& f, const std::vector<FirstOrderCalculus>& cs,
                                         const std::vector<FirstOrderCalculus>& ts) {
  std::vector<FirstOrderCalculus> pushed;
  std::vector<FirstOrderCalculus> pulled;
  for (const auto& c : cs) pushed.push_back(calc_pushforward(f, c).result.calc);
  for (const auto& t : ts) pulled.push_back(calc_pullback(f, t).result.calc);
  AdjunctionReport out;
  out.pairs.resize(cs.size() * ts.size());
  const long total = static_cast<long>(out.pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < total; ++k) {
    const std::size_t i = static_cast<std::size_t>(k) / ts.size();
    const std::size_t j = static_cast<std::size_t>(k) % ts.size();
    AdjunctionPair& p = out.pairs[static_cast<std::size_t>(k)];
    p.source_index = i;
    p.target_index = j;
    p.from_pushforward = calculus_morphism(pushed[i], ts[j]).has_value();
    p.into_pullback = calculus_morphism(cs[i], pulled[j]).has_value();
  }
  return out;
}

Report square_zero_unit_check(const Algebra& a, const std::vector<SquareZeroProbe>& probes) {
  Report out;
  UniversalCalculus u = universal_calculus(a);
  const Mat& d = u.calc.d();
  Algebra unit_target = build_square_zero(a, u.calc.omega());
  out.merge(check_alg_map({a, unit_target, vstack(a.identity(), d)}), "(1, d_u): ");
  // The unit corresponds to the identity of Omega^1_u.
  expect_equal(out, "unit maps to identity", left_d(u.calc.omega(), d) * u.inclusion,
               Mat::identity(a.field(), u.calc.dim()));

  for (std::size_t k = 0; k < probes.size(); ++k) {
    const SquareZeroProbe& probe = probes[k];
    const std::string tag = "probe " + std::to_string(k) + ": ";
    if (!(probe.base.source() == a)) throw InvalidInput("square_zero_unit_check: probe does not start at A");
    const Algebra& b = probe.base.target();
    const Mat& h1 = probe.base.matrix();
    const Bimodule& n = probe.module;
    Algebra target = build_square_zero(b, n);
    Report hom = check_alg_map({a, target, vstack(h1, probe.derivation)});
    out.merge(hom, tag + "h: ");
    if (!hom.ok()) continue;
    Mat g = n.left() * kronecker(h1, probe.derivation) * u.inclusion;
    out.merge(check_bimod_map({u.calc.omega(), restrict_bimodule(probe.base, probe.base, n), g}), tag + "g: ");
    Mat h2 = g * d;
    expect_equal(out, tag + "h -> g -> h", h2, probe.derivation);
    expect_equal(out, tag + "g -> h -> g", n.left() * kronecker(h1, h2) * u.inclusion, g);
  }
  return out;
}

Report calc1_category_adjoints_check(const Algebra& a, const std::vector<FirstOrderCalculus>& family) {
  Report out;
  UniversalCalculus u = universal_calculus(a);
  FirstOrderCalculus zero = zero_calculus(a);
  for (std::size_t k = 0; k < family.size(); ++k) {
    const FirstOrderCalculus& c = family[k];
    if (!calculus_morphism(u.calc, c)) out.add("no morphism from the universal calculus", {k});
    if (calculus_morphism_gauge(u.calc, c) != 0) out.add("morphism from the universal calculus not unique", {k});
    if (!calculus_morphism(c, zero)) out.add("no morphism to the zero calculus", {k});
    if (calculus_morphism_gauge(c, zero) != 0) out.add("morphism to the zero calculus not unique", {k});
  }
  return out;
}

}  // namespace omega
