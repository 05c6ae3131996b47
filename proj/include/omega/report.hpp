#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "omega/mat.hpp"

namespace omega {

/// One failed axiom together with the basis indices that witness it.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Result of a diagnostic check: empty means every axiom held.
struct Report {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<std::size_t> witness = {}) {
    violations.push_back({std::move(axiom), std::move(witness)});
  }
  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& v : other.violations) violations.push_back({prefix + v.axiom, v.witness});
  }
  [[nodiscard]] std::string summary() const;
};

/// Records a violation named `axiom` if lhs != rhs, with the first differing
/// column as witness (decoded into `column_factors` when given, e.g. {n, n, n}
/// turns column index into an (i, j, k) triple). Returns whether they agreed.
bool expect_equal(Report& report, const std::string& axiom, const Mat& lhs, const Mat& rhs,
                  const std::vector<std::size_t>& column_factors = {});

/// Splits a flat row-major index into digits of the given mixed radix.
std::vector<std::size_t> decode_index(std::size_t index, const std::vector<std::size_t>& factors);

}  // namespace omega
