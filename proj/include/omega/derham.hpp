#pragma once

#include <vector>

#include "omega/prolong.hpp"

namespace omega {

/// dims[0..K] with differentials diffs[n]: dims[n+1] x dims[n], n < K.
struct CochainComplex {
  Field field;
  std::vector<std::size_t> dims;
  std::vector<Mat> diffs;
};

/// Throws InvalidInput naming the degree where d o d != 0 or a shape is off.
void validate_complex(const CochainComplex& c);

struct CohomologyDegree {
  std::size_t n = 0;
  std::size_t dim_cochains = 0;
  std::size_t cycle_dim = 0;
  std::size_t boundary_rank = 0;
  std::size_t dim = 0;     // cycle_dim - boundary_rank
  Mat representatives;     // cycles independent modulo boundaries, taken from the canonical cycle basis
  Mat boundaries;          // canonical basis of the image of the previous differential
};

/// H^n for n < K; the top degree has no outgoing differential and is skipped.
struct CohomologyReport {
  std::vector<CohomologyDegree> degrees;
  [[nodiscard]] std::vector<std::size_t> dims() const;
};

CohomologyReport cohomology(const CochainComplex& c);

/// Coordinates in H^n(tgt) of the classes f(r) for the representatives r of
/// H^n(src). f must be a cochain map in degree n.
Mat induced_on_cohomology(const CohomologyDegree& src, const CohomologyDegree& tgt, const Mat& f);

CochainComplex underlying_complex(const GradedCalculus& g);

enum class Flavor { universal, kahler };

const char* to_string(Flavor flavor);

struct DeRham {
  GradedCalculus calc;
  CohomologyReport cohomology;
};

/// First order calculus of the flavor, its maximal prolongation up to
/// degree N, then cohomology in degrees 0..N-1.
DeRham de_rham(const Algebra& a, Flavor flavor, std::size_t max_degree);

struct DeRhamComparison {
  DeRham universal;
  DeRham kahler;
  DgMorphism map;                 // universal ->> Kahler prolongation
  std::vector<Mat> on_cohomology; // H^n(universal) -> H^n(Kahler), n < N
  Report checks;
};

/// Requires a commutative algebra (PreconditionError otherwise).
DeRhamComparison de_rham_comparison(const Algebra& a, std::size_t max_degree);

}  // namespace omega
