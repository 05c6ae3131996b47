#pragma once

#include <cstddef>
#include <vector>

#include "omega/mat.hpp"

// Hot loops of the exact linear algebra. Two builds of each kernel exist:
// omega::kernels (OpenMP, used everywhere) and omega::serial (plain loops, the
// reference the parallel versions are tested and benchmarked against). Both
// must produce identical results since the arithmetic is exact.

namespace omega::kernels {

/// Below this many scalar multiply-adds a kernel runs single-threaded.
inline constexpr std::size_t kParallelThreshold = 1 << 14;

Mat multiply(const Mat& a, const Mat& b);

/// Reduces m to reduced row echelon form in place and returns the pivot
/// columns in increasing order.
std::vector<std::size_t> rref_inplace(Mat& m);

}  // namespace omega::kernels

namespace omega::serial {

Mat multiply(const Mat& a, const Mat& b);
std::vector<std::size_t> rref_inplace(Mat& m);

}  // namespace omega::serial
