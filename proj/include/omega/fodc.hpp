#pragma once

#include <optional>
#include <vector>

#include "omega/bimodule.hpp"

namespace omega {

// Maps packaged from (M, d) where M is an A-bimodule and d: A -> M.
/// 1.d : A (x) A -> M, a (x) b -> a.db
Mat left_d(const Bimodule& m, const Mat& d);
/// d.1 : A (x) A -> M, a (x) b -> da.b
Mat right_d(const Bimodule& m, const Mat& d);
/// 1.d.1 : A (x) A (x) A -> M, a (x) b (x) c -> a.db.c
Mat two_sided_d(const Bimodule& m, const Mat& d);

enum class CalculusKind { not_generalized, generalized_only, fodc };

const char* to_string(CalculusKind kind);

struct FodcCheck {
  CalculusKind kind = CalculusKind::not_generalized;
  bool leibniz = false;
  bool left_surjective = false;
  bool right_surjective = false;
  bool two_sided_surjective = false;
  bool kills_unit = false;
  Report witnesses;
};

/// Classifies (omega, d): Leibniz rule, the three surjectivity variants
/// (which must agree whenever Leibniz holds) and d(1) = 0.
FodcCheck check_fodc(const Algebra& a, const Bimodule& omega, const Mat& d);

/// A bimodule with a Leibniz, surjective differential. Checked on construction.
class FirstOrderCalculus {
 public:
  /// Throws AxiomError unless check_fodc classifies the data as fodc.
  FirstOrderCalculus(Bimodule omega, Mat d);

  [[nodiscard]] const Algebra& alg() const { return omega_.left_alg(); }
  [[nodiscard]] const Bimodule& omega() const { return omega_; }
  [[nodiscard]] const Mat& d() const { return d_; }
  [[nodiscard]] std::size_t dim() const { return omega_.dim(); }

 private:
  Bimodule omega_;
  Mat d_;
};

/// Omega^1_u = ker(m: A (x) A -> A) with d(a) = 1 (x) a - a (x) 1. Keeps the
/// inclusion into A (x) A and its retraction 1.d so that elements can move
/// between the two without re-solving.
struct UniversalCalculus {
  FirstOrderCalculus calc;
  Mat inclusion;   // A (x) A <-< Omega^1_u, canonical kernel basis
  Mat retraction;  // 1.d_u : A (x) A -> Omega^1_u, retraction * inclusion = id
};

UniversalCalculus universal_calculus(const Algebra& a);
/// (A, 0, 0), the terminal calculus.
FirstOrderCalculus zero_calculus(const Algebra& a);

/// Bimodule maps g: c.omega -> t.omega with g d_c = d_t, if one exists. The
/// homogeneous version of this linear system has only the zero solution
/// whenever d_c generates, which makes the morphism unique.
std::optional<Mat> calculus_morphism(const FirstOrderCalculus& c, const FirstOrderCalculus& t);
/// Dimension of { g bimodule map : g d_c = 0 }.
std::size_t calculus_morphism_gauge(const FirstOrderCalculus& c, const FirstOrderCalculus& t);

/// f = (1.d_t) o inclusion, the unique bimodule map with f d_u = d_t. Throws
/// if the result fails to be that (it cannot for valid input).
BimodMap induced_map(const UniversalCalculus& u, const FirstOrderCalculus& target);
/// ker(Omega^1_u ->> target.omega), canonical basis in Omega^1_u coordinates.
Mat calculus_kernel(const UniversalCalculus& u, const FirstOrderCalculus& target);

struct QuotientCalculus {
  FirstOrderCalculus calc;
  Quotient q;
};

/// omega / N with d = q d. Throws InvalidInput with a witness unless N is an
/// action-closed subspace.
QuotientCalculus quotient_calculus(const FirstOrderCalculus& c, const Mat& sub);

struct CorrespondenceEntry {
  Mat sub;          // canonical basis of N
  FirstOrderCalculus calc;
  Mat kernel;       // ker(Omega^1_u ->> calc), canonical
  bool round_trip;  // kernel == sub
};

/// For each N in the family, the quotient calculus and the kernel of its
/// induced map.
std::vector<CorrespondenceEntry> sub_calculus_correspondence(const UniversalCalculus& u,
                                                             const std::vector<Mat>& family);

struct CounitKernelComparison {
  Mat kernel;          // ker(A (x) M -> M), canonical basis
  TensorProduct product;  // Omega^1_u (x)_A M
  Mat comparison;      // product -> kernel, in kernel coordinates
  bool invertible = false;
};

/// For a left A-module M (an (A, B)-bimodule), compares Omega^1_u (x)_A M
/// with the kernel of the action A (x) M -> M via (a (x) b) (x) x -> a (x) b.x.
CounitKernelComparison counit_kernel_comparison(const UniversalCalculus& u, const Bimodule& m);

}  // namespace omega
