#include "omega/mat.hpp"

#include "omega/kernels.hpp"

namespace omega {

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Mat m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw InvalidInput("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = field.from_int(v);
    ++i;
  }
  return m;
}

Mat Mat::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  Mat m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InvalidInput("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field.embed(rows[i][j]);
  }
  return m;
}

Mat Mat::column_vector(Field field, std::span<const Scalar> entries) {
  Mat m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = field.embed(entries[i]);
  return m;
}

std::vector<Scalar> Mat::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

Mat Mat::col_block(std::size_t first, std::size_t count) const {
  Mat m(field_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

Mat Mat::row_block(std::size_t first, std::size_t count) const {
  Mat m(field_, count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
  return m;
}

Mat Mat::select_columns(std::span<const std::size_t> cols) const {
  Mat m(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(i, cols[j]);
  return m;
}

Mat Mat::select_rows(std::span<const std::size_t> rows) const {
  Mat m(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(rows[i], j);
  return m;
}

Mat Mat::transpose() const {
  Mat m(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

std::pair<std::size_t, std::size_t> Mat::first_nonzero() const {
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (data_[k] != 0) return {k / cols_, k % cols_};
  }
  return {rows_, cols_};
}

std::size_t Mat::nonzeros() const {
  std::size_t n = 0;
  for (const auto& v : data_)
    if (v != 0) ++n;
  return n;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void require_same_field(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) {
    throw InvalidInput("field mismatch: " + a.field().name() + " vs " + b.field().name());
  }
}

namespace {
void require_same_shape(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix shape mismatch in sum");
}
}  // namespace

Mat operator+(const Mat& a, const Mat& b) {
  require_same_shape(a, b);
  Mat m(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a.field().add(a(i, j), b(i, j));
  return m;
}

Mat operator-(const Mat& a, const Mat& b) {
  require_same_shape(a, b);
  Mat m(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a.field().sub(a(i, j), b(i, j));
  return m;
}

Mat operator-(const Mat& a) {
  Mat m(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a.field().neg(a(i, j));
  return m;
}

Mat operator*(const Mat& a, const Mat& b) { return kernels::multiply(a, b); }

Mat scale(const Scalar& s, const Mat& a) {
  Mat m(a.field(), a.rows(), a.cols());
  Scalar t = a.field().embed(s);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a.field().mul(t, a(i, j));
  return m;
}

Mat kronecker(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  Mat m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b(k, l) == 0) continue;
          m(i * b.rows() + k, j * b.cols() + l) = a.field().mul(aij, b(k, l));
        }
      }
    }
  }
  return m;
}

Mat kronecker(std::initializer_list<Mat> factors) {
  if (factors.size() == 0) throw InvalidInput("empty kronecker product");
  auto it = factors.begin();
  Mat acc = *it++;
  for (; it != factors.end(); ++it) acc = kronecker(acc, *it);
  return acc;
}

Mat direct_sum(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  Mat m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

Mat hstack(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw InvalidInput("hstack row mismatch");
  Mat m(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw InvalidInput("vstack column mismatch");
  Mat m(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

Mat swap_matrix(Field field, std::size_t dim_u, std::size_t dim_v) {
  Mat m(field, dim_u * dim_v, dim_u * dim_v);
  for (std::size_t i = 0; i < dim_u; ++i)
    for (std::size_t j = 0; j < dim_v; ++j) m(j * dim_u + i, i * dim_v + j) = 1;
  return m;
}

namespace {

// Image of the basis vector `index` of L (x) U (x) V (x) R under the swap.
std::size_t braided_index(std::size_t index, std::size_t du, std::size_t dv, std::size_t right) {
  const std::size_t t = index % right;
  const std::size_t j = (index / right) % dv;
  const std::size_t i = (index / right / dv) % du;
  const std::size_t l = index / right / dv / du;
  return ((l * dv + j) * du + i) * right + t;
}

}  // namespace

Mat braid_columns(const Mat& x, std::size_t left, std::size_t du, std::size_t dv, std::size_t right) {
  const std::size_t n = left * du * dv * right;
  if (x.cols() != n) throw InvalidInput("braid_columns: shape mismatch");
  Mat out(x.field(), x.rows(), n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = braided_index(c, du, dv, right);
    for (std::size_t r = 0; r < x.rows(); ++r) out(r, c) = x(r, src);
  }
  return out;
}

Mat braid_rows(const Mat& x, std::size_t left, std::size_t du, std::size_t dv, std::size_t right) {
  const std::size_t n = left * du * dv * right;
  if (x.rows() != n) throw InvalidInput("braid_rows: shape mismatch");
  Mat out(x.field(), n, x.cols());
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t dst = braided_index(r, du, dv, right);
    for (std::size_t c = 0; c < x.cols(); ++c) out(dst, c) = x(r, c);
  }
  return out;
}

Mat tensor_power(const Mat& a, std::size_t power) {
  Mat acc = Mat::identity(a.field(), 1);
  for (std::size_t k = 0; k < power; ++k) acc = kronecker(acc, a);
  return acc;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace omega
