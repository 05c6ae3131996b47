#include "omega/kahler.hpp"

namespace omega {

namespace {

void require_commutative(const Algebra& a) {
  if (auto pair = noncommuting_pair(a)) {
    const auto& labels = a.basis();
    throw PreconditionError("algebra is not commutative: " + labels[pair->first] + "*" + labels[pair->second] +
                            " != " + labels[pair->second] + "*" + labels[pair->first] + " (basis indices " +
                            std::to_string(pair->first) + ", " + std::to_string(pair->second) + ")");
  }
}

}  // namespace

Mat kahler_relations(const UniversalCalculus& u) {
  const Algebra& a = u.calc.alg();
  require_commutative(a);
  const Bimodule& omega = u.calc.omega();
  const Mat& d = u.calc.d();
  Mat rel = right_d(omega, d) - left_d(omega, d) * swap_matrix(a.field(), a.dim(), a.dim());
  return saturate(omega, rel);
}

QuotientCalculus kahler_calculus(const Algebra& a) {
  UniversalCalculus u = universal_calculus(a);
  return quotient_calculus(u.calc, kahler_relations(u));
}

bool centrality_check(const Bimodule& m) {
  if (!(m.left_alg() == m.right_alg())) throw PreconditionError("centrality_check: left and right algebras differ");
  require_commutative(m.left_alg());
  const std::size_t n = m.left_alg().dim();
  const Field& f = m.field();
  return m.right() * swap_matrix(f, n, m.dim()) == m.left() && m.left() * swap_matrix(f, m.dim(), n) == m.right();
}

}  // namespace omega
