#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "omega/field.hpp"

namespace omega {

/// Dense matrix over a Field, row-major. Every linear map in the library is
/// one of these; tensor factors are flattened row-major, so e_i (x) e_j in a
/// product of spaces of dimensions (m, n) sits at index i*n + j.
class Mat {
 public:
  Mat() : field_(Field::rationals()) {}
  Mat(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(Field field, std::size_t n);
  /// Integer entries, mainly for tests and builders.
  static Mat from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows);
  static Mat from_rows(Field field, const std::vector<std::vector<Scalar>>& rows);
  /// A single column vector.
  static Mat column_vector(Field field, std::span<const Scalar> entries);

  [[nodiscard]] const Field& field() const { return field_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

  [[nodiscard]] const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::vector<Scalar> column(std::size_t c) const;

  [[nodiscard]] Mat col_block(std::size_t first, std::size_t count) const;
  [[nodiscard]] Mat row_block(std::size_t first, std::size_t count) const;
  [[nodiscard]] Mat select_columns(std::span<const std::size_t> cols) const;
  [[nodiscard]] Mat select_rows(std::span<const std::size_t> rows) const;
  [[nodiscard]] Mat transpose() const;

  [[nodiscard]] bool is_zero() const;
  /// First (row, col) where the entry is nonzero, in row-major order.
  [[nodiscard]] std::pair<std::size_t, std::size_t> first_nonzero() const;
  [[nodiscard]] std::size_t nonzeros() const;

  friend bool operator==(const Mat& a, const Mat& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Throws InvalidInput unless both matrices live over the same field.
void require_same_field(const Mat& a, const Mat& b);

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator-(const Mat& a);
Mat operator*(const Mat& a, const Mat& b);
Mat scale(const Scalar& s, const Mat& a);

/// Tensor product of linear maps in row-major basis order.
Mat kronecker(const Mat& a, const Mat& b);
/// Tensor product of several maps, left to right.
Mat kronecker(std::initializer_list<Mat> factors);
/// Block-diagonal sum.
Mat direct_sum(const Mat& a, const Mat& b);
/// [a | b]
Mat hstack(const Mat& a, const Mat& b);
/// [a ; b]
Mat vstack(const Mat& a, const Mat& b);

/// The symmetric braiding U (x) V -> V (x) U as a permutation matrix.
Mat swap_matrix(Field field, std::size_t dim_u, std::size_t dim_v);

/// x * (I_left (x) swap(du, dv) (x) I_right), computed by reindexing columns.
Mat braid_columns(const Mat& x, std::size_t left, std::size_t du, std::size_t dv, std::size_t right);
/// (I_left (x) swap(du, dv) (x) I_right) * x, computed by reindexing rows.
Mat braid_rows(const Mat& x, std::size_t left, std::size_t du, std::size_t dv, std::size_t right);

/// n-fold tensor power of a map (power 0 gives the 1x1 identity).
Mat tensor_power(const Mat& a, std::size_t power);

std::size_t ipow(std::size_t base, std::size_t exp);

}  // namespace omega
