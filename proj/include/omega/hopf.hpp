#pragma once

#include <optional>

#include "omega/fodc.hpp"

namespace omega {

/// comult is n^2 x n (column i holds delta(e_i)), counit is 1 x n.
struct BimonoidData {
  Algebra alg;
  Mat comult;
  Mat counit;
};

/// Coassociativity, both counit laws, and delta, epsilon being algebra maps.
Report check_bimonoid(const BimonoidData& data);

class Bimonoid {
 public:
  /// Throws AxiomError when check_bimonoid fails.
  explicit Bimonoid(BimonoidData data);

  [[nodiscard]] const Algebra& alg() const { return data_.alg; }
  [[nodiscard]] const Mat& comult() const { return data_.comult; }
  [[nodiscard]] const Mat& counit() const { return data_.counit; }
  [[nodiscard]] const BimonoidData& data() const { return data_; }

 private:
  BimonoidData data_;
};

/// Group algebra with every group element grouplike.
Bimonoid group_bimonoid(const Field& field, const std::vector<std::vector<std::size_t>>& table);

/// Multiplication of A (x) A as an algebra: (a (x) b)(c (x) d) = ac (x) bd.
Mat tensor_square_mult(const Algebra& a);

/// An A-bimodule with a left coaction (n*m x m, into A (x) M) and a right
/// coaction (m*n x m, into M (x) A).
struct HopfModule {
  Bimodule module;
  Mat left_coaction;
  Mat right_coaction;
};

/// Bicomodule axioms plus compatibility of each coaction with each action
/// through the diagonal actions: lambda(a.x.b) = delta(a) lambda(x) delta(b),
/// likewise for rho.
Report check_hopf_module(const Bimonoid& h, const HopfModule& m);

/// A over itself, both coactions delta.
HopfModule regular_hopf_module(const Bimonoid& h);
/// A (x) A with outer actions and coactions a1 b1 (x) a2 (x) b2 and
/// a1 (x) b1 (x) a2 b2.
HopfModule tensor_square_hopf_module(const Bimonoid& h);

struct UniversalHopf {
  UniversalCalculus universal;
  HopfModule module;
  Report checks;  // Hopf module axioms, d and inclusion as comodule maps
};

/// Coactions on Omega^1_u restricted from A (x) A: the right one is
/// ((1.d) (x) 1) rho, the left one (1 (x) -(d.1)) lambda. On ker(m) both
/// outer maps restrict to the inverse of the inclusion.
UniversalHopf universal_coactions(const Bimonoid& h);

struct Bicovariance {
  bool left_subcomodule = false;
  bool right_subcomodule = false;
  [[nodiscard]] bool bicovariant() const { return left_subcomodule && right_subcomodule; }
  Mat relations;                     // ker(Omega^1_u ->> c), canonical
  std::optional<HopfModule> module;  // induced coactions on c.omega when bicovariant
  bool projection_is_hopf_map = false;
  bool d_is_comodule_map = false;
  Report witnesses;
};

Bicovariance bicovariance_check(const Bimonoid& h, const FirstOrderCalculus& c);

}  // namespace omega
