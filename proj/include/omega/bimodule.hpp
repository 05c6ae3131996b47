#pragma once

#include <optional>
#include <vector>

#include "omega/algebra.hpp"
#include "omega/linalg.hpp"

namespace omega {

/// Raw A-B bimodule data. left is m x (dim A * m), column i*m + u holding
/// e_i . x_u; right is m x (m * dim B), column u*dim B + j holding x_u . e_j.
struct BimoduleData {
  Algebra left_alg;
  Algebra right_alg;
  std::size_t dim = 0;
  Mat left;
  Mat right;
};

/// Both one-sided module axioms (associativity, unit) and the middle
/// associativity (a.x).b = a.(x.b).
Report check_bimodule(const BimoduleData& data);

/// Left modules over A are (A, k)-bimodules and right modules (k, A)-bimodules.
class Bimodule {
 public:
  /// Throws AxiomError when an axiom fails.
  explicit Bimodule(BimoduleData data);

  [[nodiscard]] const Algebra& left_alg() const { return data_.left_alg; }
  [[nodiscard]] const Algebra& right_alg() const { return data_.right_alg; }
  [[nodiscard]] std::size_t dim() const { return data_.dim; }
  [[nodiscard]] const Field& field() const { return data_.left_alg.field(); }
  [[nodiscard]] const Mat& left() const { return data_.left; }
  [[nodiscard]] const Mat& right() const { return data_.right; }
  [[nodiscard]] const BimoduleData& data() const { return data_; }

  /// x -> e_i . x
  [[nodiscard]] Mat left_op(std::size_t i) const;
  /// x -> x . e_j
  [[nodiscard]] Mat right_op(std::size_t j) const;

 private:
  BimoduleData data_;
};

struct BimodMapData {
  Bimodule source;
  Bimodule target;
  Mat matrix;
};

Report check_bimod_map(const BimodMapData& data);

class BimodMap {
 public:
  explicit BimodMap(BimodMapData data);

  [[nodiscard]] const Bimodule& source() const { return data_.source; }
  [[nodiscard]] const Bimodule& target() const { return data_.target; }
  [[nodiscard]] const Mat& matrix() const { return data_.matrix; }

 private:
  BimodMapData data_;
};

/// A acting on itself from both sides.
Bimodule regular_bimodule(const Algebra& a);
/// A (x) k^d (x) B with the outer actions.
Bimodule free_bimodule(const Algebra& a, std::size_t d, const Algebra& b);
/// A left A-module as an (A, k)-bimodule, from its action (m x dim A*m).
Bimodule left_module(const Algebra& a, std::size_t dim, const Mat& action);

struct TensorProduct {
  Bimodule product;
  Quotient q;  // M (x) N ->> M (x)_B N
};

/// M (x)_B N as the cokernel of (r_M (x) 1 - 1 (x) l_N): M (x) B (x) N -> M (x) N.
TensorProduct tensor_over(const Bimodule& m, const Bimodule& n);

struct SubBimodule {
  Bimodule module;
  Mat inclusion;  // canonical basis columns
};

struct QuotientBimodule {
  Bimodule module;
  Quotient q;
};

SubBimodule bimod_kernel(const BimodMap& f);
QuotientBimodule bimod_cokernel(const BimodMap& f);

/// First action that leaves span(sub), reported as (side, basis index, column).
std::optional<Violation> action_closure_violation(const Bimodule& m, const Mat& sub);
/// Induced structure on an action-closed subspace. Throws InvalidInput with a
/// witness when sub is not closed.
SubBimodule sub_bimodule(const Bimodule& m, const Mat& sub);
QuotientBimodule quotient_bimodule(const Bimodule& m, const Mat& sub);
/// Smallest sub-bimodule containing the columns of gens, by saturation.
SubBimodule generated_sub_bimodule(const Bimodule& m, const Mat& gens);
/// Just the canonical basis of the saturation.
Mat saturate(const Bimodule& m, const Mat& gens);

/// Restriction of scalars of a (B, B')-bimodule along f: A -> B, g: A' -> B'.
Bimodule restrict_bimodule(const AlgMap& f, const AlgMap& g, const Bimodule& m);

struct Extension {
  Bimodule module;  // B (x)_A M (x)_A' B'
  Mat unit;         // M -> extension, x -> 1 (x) x (x) 1
  Quotient q_left;  // B (x) M ->> B (x)_A M
  Quotient q_right; // (B (x)_A M) (x) B' ->> extension
};

/// Extension of scalars of an (A, A')-bimodule along f: A -> B, g: A' -> B'.
Extension extend_bimodule(const AlgMap& f, const AlgMap& g, const Bimodule& m);
/// B as a (B, A)-bimodule through f.
Bimodule as_right_module_via(const AlgMap& f);
/// B as an (A, B)-bimodule through f.
Bimodule as_left_module_via(const AlgMap& f);

/// Basis of Hom(M, N) in bimodules; each column is a row-major flattened
/// dim N x dim M matrix.
Mat hom_space(const Bimodule& m, const Bimodule& n);
/// Reshapes a flattened column back into a rows x cols matrix.
Mat unflatten(const Mat& column, std::size_t rows, std::size_t cols);

/// A (+) M with (a, x)(a', x') = (aa', a.x' + x.a').
Algebra build_square_zero(const Algebra& a, const Bimodule& m);

struct EnumerationOptions {
  long coefficient_bound = 1;       // probe entries in [-bound, bound] over Q
  std::size_t max_support = 2;      // nonzero entries per probe vector over Q
  std::size_t exhaustive_limit = 4096;  // over GF(p) enumerate all vectors when p^dim is at most this
  std::size_t max_members = 64;     // stop closing under sums past this size
};

/// A deterministic family of sub-bimodules: saturations of probe vectors,
/// closed under sums (up to max_members), always containing 0 and M. Over
/// GF(p) with p^dim within the limit this is every sub-bimodule.
std::vector<Mat> enumerate_sub_bimodules(const Bimodule& m, const EnumerationOptions& options = {});

}  // namespace omega
