#include "omega/bimodule.hpp"

#include <algorithm>
#include <functional>

namespace omega {

Report check_bimodule(const BimoduleData& d) {
  const std::size_t na = d.left_alg.dim();
  const std::size_t nb = d.right_alg.dim();
  const std::size_t m = d.dim;
  if (d.left.rows() != m || d.left.cols() != na * m) throw InvalidInput("left action has wrong shape");
  if (d.right.rows() != m || d.right.cols() != m * nb) throw InvalidInput("right action has wrong shape");
  if (!(d.left_alg.field() == d.right_alg.field()) || !(d.left.field() == d.left_alg.field()) ||
      !(d.right.field() == d.left_alg.field())) {
    throw InvalidInput("field mismatch in bimodule data");
  }
  const Field& f = d.left_alg.field();
  Mat id_m = Mat::identity(f, m);
  Mat id_a = d.left_alg.identity();
  Mat id_b = d.right_alg.identity();
  Report report;
  expect_equal(report, "left associativity", d.left * kronecker(d.left_alg.mult(), id_m),
               d.left * kronecker(id_a, d.left), {na, na, m});
  expect_equal(report, "left unit", d.left * kronecker(d.left_alg.unit(), id_m), id_m);
  expect_equal(report, "right associativity", d.right * kronecker(d.right, id_b),
               d.right * kronecker(id_m, d.right_alg.mult()), {m, nb, nb});
  expect_equal(report, "right unit", d.right * kronecker(id_m, d.right_alg.unit()), id_m);
  expect_equal(report, "middle associativity", d.right * kronecker(d.left, id_b), d.left * kronecker(id_a, d.right),
               {na, m, nb});
  return report;
}

Bimodule::Bimodule(BimoduleData data) : data_(std::move(data)) {
  Report r = check_bimodule(data_);
  if (!r.ok()) throw AxiomError("not a bimodule: " + r.summary());
}

Mat Bimodule::left_op(std::size_t i) const { return data_.left.col_block(i * dim(), dim()); }

Mat Bimodule::right_op(std::size_t j) const {
  std::vector<std::size_t> cols(dim());
  for (std::size_t u = 0; u < dim(); ++u) cols[u] = u * right_alg().dim() + j;
  return data_.right.select_columns(cols);
}

Report check_bimod_map(const BimodMapData& d) {
  const Bimodule& s = d.source;
  const Bimodule& t = d.target;
  if (!(s.left_alg() == t.left_alg()) || !(s.right_alg() == t.right_alg())) {
    throw InvalidInput("bimodule map between modules over different algebras");
  }
  if (d.matrix.rows() != t.dim() || d.matrix.cols() != s.dim()) throw InvalidInput("bimodule map has wrong shape");
  Report report;
  expect_equal(report, "left linearity", d.matrix * s.left(), t.left() * kronecker(s.left_alg().identity(), d.matrix),
               {s.left_alg().dim(), s.dim()});
  expect_equal(report, "right linearity", d.matrix * s.right(),
               t.right() * kronecker(d.matrix, s.right_alg().identity()), {s.dim(), s.right_alg().dim()});
  return report;
}

BimodMap::BimodMap(BimodMapData data) : data_(std::move(data)) {
  Report r = check_bimod_map(data_);
  if (!r.ok()) throw AxiomError("not a bimodule map: " + r.summary());
}

Bimodule regular_bimodule(const Algebra& a) { return Bimodule({a, a, a.dim(), a.mult(), a.mult()}); }

Bimodule free_bimodule(const Algebra& a, std::size_t d, const Algebra& b) {
  const Field& f = a.field();
  Mat id_d = Mat::identity(f, d);
  Mat id_b = b.identity();
  Mat id_a = a.identity();
  const std::size_t dim = a.dim() * d * b.dim();
  // A (x) k^d (x) B: left action m_A (x) 1 (x) 1, right action 1 (x) 1 (x) m_B.
  Mat left = kronecker({a.mult(), id_d, id_b});
  Mat right = kronecker({id_a, id_d, b.mult()});
  return Bimodule({a, b, dim, left, right});
}

Bimodule left_module(const Algebra& a, std::size_t dim, const Mat& action) {
  Algebra k = ground_algebra(a.field());
  return Bimodule({a, k, dim, action, Mat::identity(a.field(), dim)});
}

TensorProduct tensor_over(const Bimodule& m, const Bimodule& n) {
  if (!(m.right_alg() == n.left_alg())) throw InvalidInput("tensor_over: right algebra of M differs from left algebra of N");
  const Field& f = m.field();
  const Algebra& b = m.right_alg();
  Mat id_m = Mat::identity(f, m.dim());
  Mat id_n = Mat::identity(f, n.dim());
  Mat relations = kronecker(m.right(), id_n) - kronecker(id_m, n.left());
  Quotient q = cokernel_projection(relations);
  const Algebra& a = m.left_alg();
  const Algebra& c = n.right_alg();
  Mat left = q.projection * kronecker(m.left(), id_n) * kronecker(a.identity(), q.section);
  Mat right = q.projection * kronecker(id_m, n.right()) * kronecker(q.section, c.identity());
  (void)b;
  return TensorProduct{Bimodule({a, c, q.dim(), left, right}), std::move(q)};
}

std::optional<Violation> action_closure_violation(const Bimodule& m, const Mat& sub) {
  Mat basis = canonical_columns(sub);
  const std::size_t s = basis.cols();
  Mat left_images = m.left() * kronecker(m.left_alg().identity(), basis);
  if (auto j = first_outside_span(basis, left_images)) {
    return Violation{"left action leaves subspace", {*j / s, *j % s}};
  }
  Mat right_images = m.right() * kronecker(basis, m.right_alg().identity());
  if (auto j = first_outside_span(basis, right_images)) {
    return Violation{"right action leaves subspace", {*j % m.right_alg().dim(), *j / m.right_alg().dim()}};
  }
  return std::nullopt;
}

namespace {

void require_vectors_in(const Bimodule& m, const Mat& vectors) {
  if (vectors.rows() != m.dim()) {
    throw InvalidInput("vectors of length " + std::to_string(vectors.rows()) + " do not live in a module of dimension " +
                       std::to_string(m.dim()));
  }
  require_same_field(vectors, m.left());
}

}  // namespace

SubBimodule sub_bimodule(const Bimodule& m, const Mat& sub) {
  require_vectors_in(m, sub);
  if (auto v = action_closure_violation(m, sub)) {
    throw InvalidInput("subspace is not a sub-bimodule: " + v->axiom + " (basis element " +
                       std::to_string(v->witness[0]) + ", vector " + std::to_string(v->witness[1]) + ")");
  }
  Mat basis = canonical_columns(sub);
  Mat back = basis.cols() == 0 ? Mat(m.field(), 0, m.dim()) : left_inverse(basis);
  Mat left = back * m.left() * kronecker(m.left_alg().identity(), basis);
  Mat right = back * m.right() * kronecker(basis, m.right_alg().identity());
  return SubBimodule{Bimodule({m.left_alg(), m.right_alg(), basis.cols(), left, right}), basis};
}

QuotientBimodule quotient_bimodule(const Bimodule& m, const Mat& sub) {
  require_vectors_in(m, sub);
  if (auto v = action_closure_violation(m, sub)) {
    throw InvalidInput("cannot take quotient, subspace is not a sub-bimodule: " + v->axiom + " (basis element " +
                       std::to_string(v->witness[0]) + ", vector " + std::to_string(v->witness[1]) + ")");
  }
  Quotient q = cokernel_projection(sub);
  Mat left = q.projection * m.left() * kronecker(m.left_alg().identity(), q.section);
  Mat right = q.projection * m.right() * kronecker(q.section, m.right_alg().identity());
  return QuotientBimodule{Bimodule({m.left_alg(), m.right_alg(), q.dim(), left, right}), std::move(q)};
}

SubBimodule bimod_kernel(const BimodMap& f) { return sub_bimodule(f.source(), kernel_basis(f.matrix())); }

QuotientBimodule bimod_cokernel(const BimodMap& f) { return quotient_bimodule(f.target(), f.matrix()); }

Mat saturate(const Bimodule& m, const Mat& gens) {
  require_vectors_in(m, gens);
  Mat current = canonical_columns(gens);
  const Mat id_a = m.left_alg().identity();
  const Mat id_b = m.right_alg().identity();
  while (true) {
    const std::size_t before = current.cols();
    current = canonical_columns(hstack(current, m.left() * kronecker(id_a, current)));
    current = canonical_columns(hstack(current, m.right() * kronecker(current, id_b)));
    if (current.cols() == before) return current;
  }
}

SubBimodule generated_sub_bimodule(const Bimodule& m, const Mat& gens) { return sub_bimodule(m, saturate(m, gens)); }

Bimodule restrict_bimodule(const AlgMap& f, const AlgMap& g, const Bimodule& m) {
  if (!(f.target() == m.left_alg()) || !(g.target() == m.right_alg())) {
    throw InvalidInput("restrict_bimodule: maps do not land in the module's algebras");
  }
  Mat id = Mat::identity(m.field(), m.dim());
  Mat left = m.left() * kronecker(f.matrix(), id);
  Mat right = m.right() * kronecker(id, g.matrix());
  return Bimodule({f.source(), g.source(), m.dim(), left, right});
}

Bimodule as_right_module_via(const AlgMap& f) {
  const Algebra& b = f.target();
  return Bimodule({b, f.source(), b.dim(), b.mult(), b.mult() * kronecker(b.identity(), f.matrix())});
}

Bimodule as_left_module_via(const AlgMap& f) {
  const Algebra& b = f.target();
  return Bimodule({f.source(), b, b.dim(), b.mult() * kronecker(f.matrix(), b.identity()), b.mult()});
}

Extension extend_bimodule(const AlgMap& f, const AlgMap& g, const Bimodule& m) {
  if (!(f.source() == m.left_alg()) || !(g.source() == m.right_alg())) {
    throw InvalidInput("extend_bimodule: maps do not start at the module's algebras");
  }
  TensorProduct left = tensor_over(as_right_module_via(f), m);
  TensorProduct both = tensor_over(left.product, as_left_module_via(g));
  const Field& fld = m.field();
  Mat id_m = Mat::identity(fld, m.dim());
  Mat into_left = left.q.projection * kronecker(f.target().unit(), id_m);
  Mat unit = both.q.projection * kronecker(into_left, g.target().unit());
  return Extension{both.product, unit, left.q, both.q};
}

Mat hom_space(const Bimodule& m, const Bimodule& n) {
  if (!(m.left_alg() == n.left_alg()) || !(m.right_alg() == n.right_alg())) {
    throw InvalidInput("hom_space: bimodules over different algebras");
  }
  const Field& f = m.field();
  const std::size_t rows = n.dim();
  const std::size_t cols = m.dim();
  Mat id_rows = Mat::identity(f, rows);
  Mat id_cols = Mat::identity(f, cols);
  // Row-major vec: vec(gX) = (I (x) X^T) vec(g), vec(Yg) = (Y (x) I) vec(g).
  Mat system(f, 0, rows * cols);
  for (std::size_t i = 0; i < m.left_alg().dim(); ++i) {
    system = vstack(system, kronecker(id_rows, m.left_op(i).transpose()) - kronecker(n.left_op(i), id_cols));
  }
  for (std::size_t j = 0; j < m.right_alg().dim(); ++j) {
    system = vstack(system, kronecker(id_rows, m.right_op(j).transpose()) - kronecker(n.right_op(j), id_cols));
  }
  return kernel_basis(system);
}

Mat unflatten(const Mat& column, std::size_t rows, std::size_t cols) {
  if (column.rows() != rows * cols || column.cols() != 1) throw InvalidInput("unflatten: size mismatch");
  Mat g(column.field(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) g(r, c) = column(r * cols + c, 0);
  return g;
}

Algebra build_square_zero(const Algebra& a, const Bimodule& m) {
  if (!(m.left_alg() == a) || !(m.right_alg() == a)) throw InvalidInput("build_square_zero: M must be an A-A bimodule");
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const std::size_t k = m.dim();
  const std::size_t t = n + k;
  AlgebraData d{f, a.basis(), Mat(f, t, t * t), Mat(f, t, 1)};
  for (std::size_t u = 0; u < k; ++u) d.basis.push_back("m" + std::to_string(u));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) d.mult(r, i * t + j) = a.constant(i, j, r);
    for (std::size_t u = 0; u < k; ++u) {
      for (std::size_t v = 0; v < k; ++v) {
        d.mult(n + v, i * t + (n + u)) = m.left()(v, i * k + u);
        d.mult(n + v, (n + u) * t + i) = m.right()(v, u * n + i);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) d.unit(i, 0) = a.unit()(i, 0);
  return Algebra(std::move(d));
}

namespace {

// Probe vectors with first nonzero entry 1.
std::vector<Mat> probe_vectors(const Field& f, std::size_t dim, const EnumerationOptions& opt) {
  std::vector<Mat> out;
  if (dim == 0) return out;
  std::vector<long> values;
  std::size_t support_limit = opt.max_support;
  if (!f.is_rational()) {
    long p = static_cast<long>(f.characteristic());
    bool exhaustive = true;
    std::size_t total = 1;
    for (std::size_t k = 0; k < dim && exhaustive; ++k) {
      total *= static_cast<std::size_t>(p);
      exhaustive = total <= opt.exhaustive_limit;
    }
    if (exhaustive) support_limit = dim;
    for (long v = 1; v < p && (exhaustive || v <= opt.coefficient_bound); ++v) values.push_back(v);
    if (!exhaustive && opt.coefficient_bound < p - 1) {
      for (long v = 1; v <= opt.coefficient_bound; ++v) values.push_back(p - v);
    }
  } else {
    for (long v = 1; v <= opt.coefficient_bound; ++v) {
      values.push_back(v);
      values.push_back(-v);
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  // Depth-first over the positions after the leading 1.
  std::vector<long> entries(dim, 0);
  auto emit = [&]() {
    Mat v(f, dim, 1);
    for (std::size_t i = 0; i < dim; ++i) v(i, 0) = f.from_int(entries[i]);
    out.push_back(std::move(v));
  };
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t pos, std::size_t used) {
    if (pos == dim) {
      emit();
      return;
    }
    extend(pos + 1, used);
    if (used >= support_limit) return;
    for (long v : values) {
      entries[pos] = v;
      extend(pos + 1, used + 1);
    }
    entries[pos] = 0;
  };
  for (std::size_t lead = 0; lead < dim; ++lead) {
    entries.assign(dim, 0);
    entries[lead] = 1;
    extend(lead + 1, 1);
  }
  return out;
}

void insert_unique(std::vector<Mat>& family, Mat basis) {
  for (const auto& m : family)
    if (m == basis) return;
  family.push_back(std::move(basis));
}

}  // namespace

std::vector<Mat> enumerate_sub_bimodules(const Bimodule& m, const EnumerationOptions& options) {
  const Field& f = m.field();
  std::vector<Mat> family;
  insert_unique(family, Mat(f, m.dim(), 0));
  for (const Mat& probe : probe_vectors(f, m.dim(), options)) {
    insert_unique(family, saturate(m, probe));
  }
  insert_unique(family, Mat::identity(f, m.dim()));
  // Close under sums.
  for (std::size_t i = 0; i < family.size() && family.size() < options.max_members; ++i) {
    for (std::size_t j = 0; j < i && family.size() < options.max_members; ++j) {
      insert_unique(family, subspace_sum(family[i], family[j]));
    }
  }
  std::stable_sort(family.begin(), family.end(), [](const Mat& a, const Mat& b) { return a.cols() < b.cols(); });
  return family;
}

}  // namespace omega
