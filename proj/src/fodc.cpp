#include "omega/fodc.hpp"

namespace omega {

Mat left_d(const Bimodule& m, const Mat& d) { return m.left() * kronecker(m.left_alg().identity(), d); }

Mat right_d(const Bimodule& m, const Mat& d) { return m.right() * kronecker(d, m.right_alg().identity()); }

Mat two_sided_d(const Bimodule& m, const Mat& d) {
  Mat id_a = m.left_alg().identity();
  return m.left() * kronecker(id_a, m.right()) * kronecker({id_a, d, id_a});
}

const char* to_string(CalculusKind kind) {
  switch (kind) {
    case CalculusKind::not_generalized:
      return "not_generalized";
    case CalculusKind::generalized_only:
      return "generalized_only";
    case CalculusKind::fodc:
      return "fodc";
  }
  return "?";
}

FodcCheck check_fodc(const Algebra& a, const Bimodule& omega, const Mat& d) {
  if (!(omega.left_alg() == a) || !(omega.right_alg() == a)) throw InvalidInput("check_fodc: omega is not an A-bimodule");
  if (d.rows() != omega.dim() || d.cols() != a.dim()) throw InvalidInput("check_fodc: d has wrong shape");
  require_same_field(d, a.mult());
  FodcCheck out;
  const std::size_t m = omega.dim();
  Mat ld = left_d(omega, d);
  Mat rd = right_d(omega, d);
  out.leibniz = expect_equal(out.witnesses, "Leibniz rule", d * a.mult(), rd + ld, {a.dim(), a.dim()});
  out.left_surjective = rank(ld) == m;
  out.right_surjective = rank(rd) == m;
  out.two_sided_surjective = rank(two_sided_d(omega, d)) == m;
  out.kills_unit = expect_equal(out.witnesses, "d(1) = 0", d * a.unit(), Mat(a.field(), m, 1));
  if (!out.left_surjective) out.witnesses.add("1.d not surjective");
  if (!out.leibniz) {
    out.kind = CalculusKind::not_generalized;
    return out;
  }
  if (out.left_surjective != out.right_surjective || out.left_surjective != out.two_sided_surjective) {
    out.witnesses.add("surjectivity variants disagree under Leibniz");
  }
  out.kind = out.left_surjective ? CalculusKind::fodc : CalculusKind::generalized_only;
  return out;
}

FirstOrderCalculus::FirstOrderCalculus(Bimodule omega, Mat d) : omega_(std::move(omega)), d_(std::move(d)) {
  if (!(omega_.left_alg() == omega_.right_alg())) throw InvalidInput("calculus bimodule must be an A-A bimodule");
  FodcCheck c = check_fodc(omega_.left_alg(), omega_, d_);
  if (c.kind != CalculusKind::fodc) {
    throw AxiomError(std::string("not a first order differential calculus (") + to_string(c.kind) +
                     "): " + c.witnesses.summary());
  }
}

UniversalCalculus universal_calculus(const Algebra& a) {
  const Field& f = a.field();
  Mat id = a.identity();
  SubBimodule omega = sub_bimodule(free_bimodule(a, 1, a), kernel_basis(a.mult()));
  // d = i (x) 1 - 1 (x) i, corestricted to the kernel.
  Mat d_ambient = kronecker(a.unit(), id) - kronecker(id, a.unit());
  Mat back = omega.inclusion.cols() == 0 ? Mat(f, 0, a.dim() * a.dim()) : left_inverse(omega.inclusion);
  Mat d = back * d_ambient;
  if (!(omega.inclusion * d == d_ambient)) throw std::logic_error("universal differential does not land in the kernel");
  FirstOrderCalculus calc(omega.module, d);
  Mat retraction = left_d(calc.omega(), calc.d());
  return UniversalCalculus{std::move(calc), std::move(omega.inclusion), std::move(retraction)};
}

FirstOrderCalculus zero_calculus(const Algebra& a) {
  const Field& f = a.field();
  Bimodule zero({a, a, 0, Mat(f, 0, 0), Mat(f, 0, 0)});
  return FirstOrderCalculus(zero, Mat(f, 0, a.dim()));
}

namespace {

void require_same_algebra(const FirstOrderCalculus& c, const FirstOrderCalculus& t) {
  if (!(c.alg() == t.alg())) throw InvalidInput("calculi over different algebras");
}

// Rows: g L^c_i - L^t_i g, g R^c_j - R^t_j g for all basis elements, in
// row-major vec(g) coordinates.
Mat bimodule_map_constraints(const Bimodule& src, const Bimodule& tgt) {
  const Field& f = src.field();
  Mat id_t = Mat::identity(f, tgt.dim());
  Mat id_s = Mat::identity(f, src.dim());
  Mat system(f, 0, tgt.dim() * src.dim());
  for (std::size_t i = 0; i < src.left_alg().dim(); ++i) {
    system = vstack(system, kronecker(id_t, src.left_op(i).transpose()) - kronecker(tgt.left_op(i), id_s));
    system = vstack(system, kronecker(id_t, src.right_op(i).transpose()) - kronecker(tgt.right_op(i), id_s));
  }
  return system;
}

}  // namespace

std::optional<Mat> calculus_morphism(const FirstOrderCalculus& c, const FirstOrderCalculus& t) {
  require_same_algebra(c, t);
  // A left linear g with g d_c = d_t satisfies g (1.d_c) = 1.d_t, and 1.d_c is
  // onto, so that equation pins g down; the rest is verification.
  auto g = factor_through(left_d(t.omega(), t.d()), as_quotient(left_d(c.omega(), c.d())));
  if (!g) return std::nullopt;
  if (!(*g * c.d() == t.d())) return std::nullopt;
  if (!check_bimod_map({c.omega(), t.omega(), *g}).ok()) return std::nullopt;
  return g;
}

std::size_t calculus_morphism_gauge(const FirstOrderCalculus& c, const FirstOrderCalculus& t) {
  require_same_algebra(c, t);
  const Field& f = c.alg().field();
  Mat system = vstack(kronecker(Mat::identity(f, t.dim()), c.d().transpose()), bimodule_map_constraints(c.omega(), t.omega()));
  return system.cols() - rank(system);
}

BimodMap induced_map(const UniversalCalculus& u, const FirstOrderCalculus& target) {
  if (!(u.calc.alg() == target.alg())) throw InvalidInput("induced_map: calculi over different algebras");
  Mat f = left_d(target.omega(), target.d()) * u.inclusion;
  if (!(f * u.calc.d() == target.d())) throw std::logic_error("induced map does not intertwine the differentials");
  if (rank(f) != target.dim()) throw std::logic_error("induced map is not surjective");
  return BimodMap({u.calc.omega(), target.omega(), std::move(f)});
}

Mat calculus_kernel(const UniversalCalculus& u, const FirstOrderCalculus& target) {
  return kernel_basis(induced_map(u, target).matrix());
}

QuotientCalculus quotient_calculus(const FirstOrderCalculus& c, const Mat& sub) {
  QuotientBimodule q = quotient_bimodule(c.omega(), sub);
  Mat d = q.q.projection * c.d();
  return QuotientCalculus{FirstOrderCalculus(std::move(q.module), std::move(d)), std::move(q.q)};
}

std::vector<CorrespondenceEntry> sub_calculus_correspondence(const UniversalCalculus& u, const std::vector<Mat>& family) {
  std::vector<CorrespondenceEntry> out;
  out.reserve(family.size());
  for (const Mat& n : family) {
    Mat sub = canonical_columns(n);
    QuotientCalculus qc = quotient_calculus(u.calc, sub);
    Mat kernel = calculus_kernel(u, qc.calc);
    bool ok = kernel == sub;
    out.push_back({std::move(sub), std::move(qc.calc), std::move(kernel), ok});
  }
  return out;
}

CounitKernelComparison counit_kernel_comparison(const UniversalCalculus& u, const Bimodule& m) {
  const Algebra& a = u.calc.alg();
  if (!(m.left_alg() == a)) throw InvalidInput("counit_kernel_comparison: module is not over the algebra");
  const Field& f = a.field();
  Mat kernel = kernel_basis(m.left());
  TensorProduct product = tensor_over(u.calc.omega(), m);
  Mat id_m = Mat::identity(f, m.dim());
  Mat ambient = kronecker(a.identity(), m.left()) * kronecker(u.inclusion, id_m);
  auto descended = factor_through(ambient, product.q);
  if (!descended) throw std::logic_error("comparison map is not well defined on the tensor product");
  Mat back = kernel.cols() == 0 ? Mat(f, 0, kernel.rows()) : left_inverse(kernel);
  Mat comparison = back * *descended;
  if (!(kernel * comparison == *descended)) throw std::logic_error("comparison map does not land in the kernel");
  bool invertible = is_invertible(comparison);
  return CounitKernelComparison{std::move(kernel), std::move(product), std::move(comparison), invertible};
}

}  // namespace omega
