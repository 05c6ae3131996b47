#pragma once

#include <optional>
#include <vector>

#include "omega/mat.hpp"

namespace omega {

struct Echelon {
  Mat reduced;                      // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Canonical basis of the column span of `vectors`: the transpose of the
/// reduced row echelon form of vectors^T with zero rows dropped. Two spanning
/// sets of the same subspace give identical results.
Mat canonical_columns(const Mat& vectors);

/// Columns form the canonical basis of the null space of m.
Mat kernel_basis(const Mat& m);
/// Columns form the canonical basis of the column space of m.
Mat image_basis(const Mat& m);

/// A surjection together with a chosen right inverse (section).
struct Quotient {
  Mat projection;  // dim x ambient
  Mat section;     // ambient x dim, projection * section = id
  [[nodiscard]] std::size_t dim() const { return projection.rows(); }
};

/// Quotient of the ambient space (rows of m) by the column space of m. The
/// quotient coordinates are the non-pivot coordinates of the canonical image
/// basis, so the section is a coordinate inclusion.
Quotient cokernel_projection(const Mat& m);

/// Quotient of an ambient space of dimension `ambient` by the span of the
/// columns of `sub` (same as cokernel_projection(sub)).
inline Quotient quotient_by(const Mat& sub) { return cokernel_projection(sub); }

/// Some x with m x = b, or nullopt if b is not in the column space.
std::optional<Mat> solve(const Mat& m, const Mat& b);

/// A right inverse of a surjective matrix. Throws InvalidInput otherwise.
Mat right_inverse(const Mat& surjection);
/// A left inverse of an injective matrix. Throws InvalidInput otherwise.
Mat left_inverse(const Mat& injection);

/// Wraps an arbitrary surjection with a computed section.
Quotient as_quotient(const Mat& surjection);

/// The unique h with h * q.projection == g, or nullopt when g does not vanish
/// on ker(q) (the assignment is not well defined).
std::optional<Mat> factor_through(const Mat& g, const Quotient& q);

/// True iff every column of `vectors` lies in the column span of `basis`.
bool in_span(const Mat& basis, const Mat& vectors);
/// Index of the first column of `vectors` outside span(basis), if any.
std::optional<std::size_t> first_outside_span(const Mat& basis, const Mat& vectors);

/// Canonical basis of { v : f v in span(sub) }.
Mat preimage(const Mat& f, const Mat& sub);
/// Canonical basis of span(a) + span(b).
Mat subspace_sum(const Mat& a, const Mat& b);

bool is_invertible(const Mat& m);
Mat inverse(const Mat& m);

}  // namespace omega
