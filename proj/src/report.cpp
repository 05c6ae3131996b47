#include "omega/report.hpp"

#include <sstream>

namespace omega {

std::string Report::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    if (k) os << "; ";
    os << violations[k].axiom;
    if (!violations[k].witness.empty()) {
      os << " at (";
      for (std::size_t i = 0; i < violations[k].witness.size(); ++i) os << (i ? "," : "") << violations[k].witness[i];
      os << ")";
    }
  }
  return os.str();
}

std::vector<std::size_t> decode_index(std::size_t index, const std::vector<std::size_t>& factors) {
  std::vector<std::size_t> digits(factors.size());
  for (std::size_t k = factors.size(); k-- > 0;) {
    digits[k] = index % factors[k];
    index /= factors[k];
  }
  return digits;
}

bool expect_equal(Report& report, const std::string& axiom, const Mat& lhs, const Mat& rhs,
                  const std::vector<std::size_t>& column_factors) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    report.add(axiom + " (shape mismatch)");
    return false;
  }
  if (lhs == rhs) return true;
  auto [r, c] = (lhs - rhs).first_nonzero();
  (void)r;
  report.add(axiom, column_factors.empty() ? std::vector<std::size_t>{c} : decode_index(c, column_factors));
  return false;
}

}  // namespace omega
