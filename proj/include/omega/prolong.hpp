#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omega/fodc.hpp"

namespace omega {

/// A dg-algebra generated in degree 0, truncated at max_degree. Products and
/// differentials are matrices between the component spaces; wedge(0, n) and
/// wedge(n, 0) are the bimodule actions of A on the n-forms.
struct GradedCalculus {
  Algebra alg;
  std::vector<std::size_t> dims;        // dims[0] = dim A
  std::vector<std::vector<Mat>> wedges; // wedges[i][j]: dims[i+j] x dims[i]*dims[j], i + j <= N
  std::vector<Mat> diffs;               // diffs[n]: dims[n+1] x dims[n], n < N

  [[nodiscard]] std::size_t max_degree() const { return dims.size() - 1; }
  [[nodiscard]] const Mat& wedge(std::size_t i, std::size_t j) const { return wedges.at(i).at(j); }
  [[nodiscard]] const Mat& diff(std::size_t n) const { return diffs.at(n); }
};

/// p^n: A^{(x) n+1} -> Omega^n, a0 (x) ... (x) an -> a0 da1 ... dan, for n = 0..N.
std::vector<Mat> generator_maps(const GradedCalculus& g);

/// Associativity and unit of the wedges, graded Leibniz, d o d = 0 and
/// surjectivity of every generator map. Pairs are checked in parallel.
Report check_graded_calculus(const GradedCalculus& g);

/// Degree <= 1 part as a first order calculus.
FirstOrderCalculus degree_one(const GradedCalculus& g);

/// A^{(x) n+1} in degree n with the alternating sum of unit insertions.
struct AmitsurComplex {
  Algebra alg;
  std::vector<Mat> diffs;  // diffs[n]: n0^{n+2} x n0^{n+1}
};

AmitsurComplex amitsur_complex(const Algebra& a, std::size_t max_degree);
Report check_amitsur(const AmitsurComplex& c);
/// Concatenation product A^{(x) i+1} (x) A^{(x) j+1} -> A^{(x) i+j+1}
/// multiplying the two middle factors.
Mat amitsur_wedge(const Algebra& a, std::size_t i, std::size_t j);

struct UniversalProlongation {
  GradedCalculus calc;
  std::vector<Mat> embeddings;   // Omega^n_u -> A^{(x) n+1}
  std::vector<Mat> retractions;  // generator maps, retraction * embedding = id
  AmitsurComplex amitsur;
  Report checks;                 // graded calculus axioms and compatibility with the Amitsur complex
};

/// Omega^n_u = Omega^1_u (x)_A ... (x)_A Omega^1_u up to degree N, with
/// d^n = wedge o d^{(x) n+1} o embedding.
UniversalProlongation universal_prolongation(const Algebra& a, std::size_t max_degree);

struct MaximalProlongation {
  GradedCalculus calc;
  std::vector<Mat> relations;    // S_n in Omega^n_u coordinates
  std::vector<Quotient> quotients;  // Omega^n_u ->> Omega^n_d
  Report checks;                 // axioms plus the cocone equations of the quotient maps
};

/// Degreewise quotient of the universal prolongation by the dg ideal
/// generated by the relations of c. Degree 1 is c itself.
MaximalProlongation maximal_prolongation(const FirstOrderCalculus& c, std::size_t max_degree);
/// Same, reusing an already computed universal prolongation of c's algebra.
MaximalProlongation maximal_prolongation(const UniversalProlongation& u, const FirstOrderCalculus& c);

/// A, c, then zero in every degree >= 2.
GradedCalculus trivial_extension(const FirstOrderCalculus& c, std::size_t max_degree);

struct DgMorphism {
  std::vector<Mat> maps;  // degree 0..N
};

struct DgMorphismResult {
  std::optional<DgMorphism> morphism;
  std::string reason;  // why none exists, empty otherwise
};

/// The only possible dg morphism extending f0, f^n(a0 da1..dan) =
/// f0(a0) df0(a1)..df0(an). None when that is not well defined or not
/// compatible with the structure. Requires equal max degrees.
DgMorphismResult unique_dg_morphism(const GradedCalculus& src, const GradedCalculus& tgt, const AlgMap& f0);

/// Both truncation adjunctions, probed on every pair (c, theta): maximal
/// prolongation of c -> theta exists iff c -> degree_one(theta) does, and
/// theta -> trivial extension of c exists iff degree_one(theta) -> c does.
Report truncation_adjoints_check(const Algebra& a, const std::vector<FirstOrderCalculus>& fodcs,
                                 const std::vector<GradedCalculus>& graded, std::size_t max_degree);

/// Component dimension n0 (n0 - 1)^N that a universal prolongation would reach.
double projected_prolongation_dim(std::size_t algebra_dim, std::size_t max_degree);

}  // namespace omega
