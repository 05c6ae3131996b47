#include "omega/linalg.hpp"

#include "omega/kernels.hpp"

namespace omega {

Echelon rref(const Mat& m) {
  Echelon e{m, {}};
  e.pivots = kernels::rref_inplace(e.reduced);
  return e;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat canonical_columns(const Mat& vectors) {
  Echelon e = rref(vectors.transpose());
  return e.reduced.row_block(0, e.pivots.size()).transpose();
}

Mat kernel_basis(const Mat& m) {
  Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Mat basis(m.field(), n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis(fc, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (e.reduced(r, fc) != 0) basis(e.pivots[r], k) = m.field().neg(e.reduced(r, fc));
    }
  }
  return canonical_columns(basis);
}

Mat image_basis(const Mat& m) { return canonical_columns(m); }

Quotient cokernel_projection(const Mat& m) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Echelon e = rref(m.transpose());
  const std::size_t r = e.pivots.size();
  // Image basis vector k has a 1 in coordinate pivots[k] and zeros in all
  // other pivot coordinates; v mod im(m) is v - sum_k v[pivots[k]] b_k
  // restricted to the remaining coordinates.
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) rest.push_back(i);

  Quotient q{Mat(f, rest.size(), n), Mat(f, n, rest.size())};
  for (std::size_t a = 0; a < rest.size(); ++a) {
    q.projection(a, rest[a]) = 1;
    q.section(rest[a], a) = 1;
    for (std::size_t k = 0; k < r; ++k) {
      const Scalar& bk = e.reduced(k, rest[a]);
      if (bk != 0) q.projection(a, e.pivots[k]) = f.neg(bk);
    }
  }
  return q;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
  require_same_field(m, b);
  if (m.rows() != b.rows()) throw InvalidInput("solve: right-hand side has wrong number of rows");
  const Field& f = m.field();
  Echelon e = rref(hstack(m, b));
  const std::size_t n = m.cols();
  Mat x(f, n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
  }
  return x;
}

Mat right_inverse(const Mat& surjection) {
  auto x = solve(surjection, Mat::identity(surjection.field(), surjection.rows()));
  if (!x) throw InvalidInput("right_inverse: map is not surjective");
  return *x;
}

Mat left_inverse(const Mat& injection) { return right_inverse(injection.transpose()).transpose(); }

Quotient as_quotient(const Mat& surjection) { return Quotient{surjection, right_inverse(surjection)}; }

std::optional<Mat> factor_through(const Mat& g, const Quotient& q) {
  Mat h = g * q.section;
  if (!(h * q.projection == g)) return std::nullopt;
  return h;
}

std::optional<std::size_t> first_outside_span(const Mat& basis, const Mat& vectors) {
  require_same_field(basis, vectors);
  const std::size_t r = rank(basis);
  for (std::size_t j = 0; j < vectors.cols(); ++j) {
    if (rank(hstack(basis, vectors.col_block(j, 1))) != r) return j;
  }
  return std::nullopt;
}

bool in_span(const Mat& basis, const Mat& vectors) {
  if (vectors.cols() == 0) return true;
  return rank(hstack(basis, vectors)) == rank(basis);
}

Mat preimage(const Mat& f, const Mat& sub) {
  Quotient q = cokernel_projection(sub);
  return kernel_basis(q.projection * f);
}

Mat subspace_sum(const Mat& a, const Mat& b) { return canonical_columns(hstack(a, b)); }

bool is_invertible(const Mat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Mat inverse(const Mat& m) {
  if (!is_invertible(m)) throw InvalidInput("matrix is not invertible");
  return right_inverse(m);
}

}  // namespace omega
