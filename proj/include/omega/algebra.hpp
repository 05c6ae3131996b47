#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omega/mat.hpp"
#include "omega/report.hpp"

namespace omega {

/// Raw structure constants of a finite-dimensional algebra, before checking.
/// mult is n x n^2: column i*n + j holds the coordinates of e_i * e_j.
struct AlgebraData {
  Field field = Field::rationals();
  std::vector<std::string> basis;
  Mat mult;
  Mat unit;  // n x 1
};

/// Associativity and both unit laws. Shape errors throw InvalidInput.
Report check_algebra(const AlgebraData& data);

/// A unital associative algebra; the axioms are checked on construction.
/// Copies share the immutable structure constants.
class Algebra {
 public:
  /// Throws AxiomError listing every violation.
  explicit Algebra(AlgebraData data);

  [[nodiscard]] const Field& field() const { return data_->field; }
  [[nodiscard]] std::size_t dim() const { return data_->basis.size(); }
  [[nodiscard]] const std::vector<std::string>& basis() const { return data_->basis; }
  [[nodiscard]] const Mat& mult() const { return data_->mult; }
  [[nodiscard]] const Mat& unit() const { return data_->unit; }
  [[nodiscard]] const AlgebraData& data() const { return *data_; }

  /// Coefficient of e_k in e_i * e_j.
  [[nodiscard]] const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return data_->mult(k, i * dim() + j);
  }
  /// Matrix of x -> e_i x.
  [[nodiscard]] Mat left_mult(std::size_t i) const;
  /// Matrix of x -> x e_j.
  [[nodiscard]] Mat right_mult(std::size_t j) const;
  /// Product of two coordinate column vectors.
  [[nodiscard]] Mat product(const Mat& a, const Mat& b) const;
  [[nodiscard]] Mat identity() const { return Mat::identity(field(), dim()); }

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  std::shared_ptr<const AlgebraData> data_;
};

/// Some (i, j) with e_i e_j != e_j e_i, if any.
std::optional<std::pair<std::size_t, std::size_t>> noncommuting_pair(const Algebra& a);
bool is_commutative(const Algebra& a);
/// Structure constants c^op[i][j][k] = c[j][i][k].
Algebra opposite(const Algebra& a);

/// k[x]/(x^n), basis 1, x, ..., x^{n-1}.
Algebra build_truncated_poly(Field field, std::size_t n);
/// The field as a one-dimensional algebra.
inline Algebra ground_algebra(Field field) { return build_truncated_poly(field, 1); }
/// k[G] from a Cayley table (table[g][h] = index of gh). Throws InvalidInput
/// unless the table is a group.
Algebra build_group_algebra(Field field, const std::vector<std::vector<std::size_t>>& table);
/// M_k(field) with basis E_ab at index a*k + b.
Algebra build_matrix_algebra(Field field, std::size_t k);

struct AlgMapData {
  Algebra source;
  Algebra target;
  Mat matrix;  // target.dim x source.dim
};

/// Multiplicativity m_B (f (x) f) = f m_A and f(1) = 1.
Report check_alg_map(const AlgMapData& data);

class AlgMap {
 public:
  /// Throws AxiomError if f is not an algebra map.
  explicit AlgMap(AlgMapData data);

  static AlgMap identity(const Algebra& a);
  /// The unit map from the ground field.
  static AlgMap unit_map(const Algebra& a);

  [[nodiscard]] const Algebra& source() const { return data_.source; }
  [[nodiscard]] const Algebra& target() const { return data_.target; }
  [[nodiscard]] const Mat& matrix() const { return data_.matrix; }

 private:
  AlgMapData data_;
};

/// g after f.
AlgMap compose(const AlgMap& g, const AlgMap& f);

}  // namespace omega
