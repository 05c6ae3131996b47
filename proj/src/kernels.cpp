#include "omega/kernels.hpp"

#include <omp.h>

#include <utility>

namespace omega {
namespace {

// Row i of the product, skipping zero entries of a; most maps built from
// tensor products are very sparse.
void multiply_row(const Mat& a, const Mat& b, Mat& out, std::size_t i) {
  const Field& f = a.field();
  auto out_row = out.row(i);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Scalar& aik = a(i, k);
    if (aik == 0) continue;
    auto b_row = b.row(k);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b_row[j] == 0) continue;
      f.add_mul(out_row[j], aik, b_row[j]);
    }
  }
}

void check_product_shapes(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw InvalidInput("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                       std::to_string(b.cols()));
  }
}

// Finds the next pivot in column c at or below row r; returns rows() if none.
std::size_t find_pivot(const Mat& m, std::size_t r, std::size_t c) {
  for (std::size_t i = r; i < m.rows(); ++i) {
    if (m(i, c) != 0) return i;
  }
  return m.rows();
}

void normalize_pivot_row(Mat& m, std::size_t r, std::size_t c) {
  const Field& f = m.field();
  Scalar inv = f.inv(m(r, c));
  for (std::size_t j = c; j < m.cols(); ++j) {
    if (m(r, j) != 0) m(r, j) = f.mul(m(r, j), inv);
  }
}

void eliminate_row(Mat& m, std::size_t i, std::size_t r, std::size_t c) {
  if (i == r || m(i, c) == 0) return;
  const Field& f = m.field();
  Scalar factor = m(i, c);
  auto pivot_row = m.row(r);
  auto row = m.row(i);
  for (std::size_t j = c; j < m.cols(); ++j) {
    if (pivot_row[j] == 0) continue;
    f.sub_mul(row[j], factor, pivot_row[j]);
  }
}

}  // namespace

namespace kernels {

Mat multiply(const Mat& a, const Mat& b) {
  check_product_shapes(a, b);
  Mat out(a.field(), a.rows(), b.cols());
  const bool parallel = a.rows() * a.cols() * b.cols() >= kParallelThreshold;
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (std::ptrdiff_t i = 0; i < rows; ++i) multiply_row(a, b, out, static_cast<std::size_t>(i));
  return out;
}

std::vector<std::size_t> rref_inplace(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const bool parallel = m.rows() * m.cols() >= kParallelThreshold / 16;
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = find_pivot(m, r, c);
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    normalize_pivot_row(m, r, c);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t i = 0; i < rows; ++i) eliminate_row(m, static_cast<std::size_t>(i), r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace kernels

namespace serial {

Mat multiply(const Mat& a, const Mat& b) {
  check_product_shapes(a, b);
  Mat out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, out, i);
  return out;
}

std::vector<std::size_t> rref_inplace(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = find_pivot(m, r, c);
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    normalize_pivot_row(m, r, c);
    for (std::size_t i = 0; i < m.rows(); ++i) eliminate_row(m, i, r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace serial
}  // namespace omega
