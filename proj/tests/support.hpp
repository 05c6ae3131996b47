#pragma once

#include <random>
#include <vector>

#include "omega/derham.hpp"
#include "omega/hopf.hpp"
#include "omega/kahler.hpp"
#include "omega/scalars.hpp"

namespace testing {

using namespace omega;

inline const Field kQ = Field::rationals();

inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

// S3 as permutations of {0,1,2}, elements listed lexicographically.
inline std::vector<std::vector<std::size_t>> s3_table() {
  std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index = [&](const std::vector<int>& p) {
    for (std::size_t k = 0; k < perms.size(); ++k)
      if (perms[k] == p) return k;
    return perms.size();
  };
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index(c);
    }
  return t;
}

inline Algebra qx(std::size_t n) { return build_truncated_poly(kQ, n); }

// y -> x^2 from k[y]/(y^2) to k[x]/(x^4).
inline AlgMap square_map() {
  Algebra a = qx(2);
  Algebra b = qx(4);
  Mat m(kQ, 4, 2);
  m(0, 0) = 1;
  m(2, 1) = 1;
  return AlgMap({a, b, m});
}

inline Mat random_matrix(std::mt19937& rng, const Field& f, std::size_t rows, std::size_t cols, int bound = 3,
                         double density = 0.6) {
  std::uniform_int_distribution<int> value(-bound, bound);
  std::bernoulli_distribution keep(density);
  Mat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m(r, c) = f.from_int(value(rng));
  return m;
}

// Quotient calculi of the universal calculus for every enumerated sub-bimodule.
inline std::vector<FirstOrderCalculus> quotient_family(const Algebra& a) {
  UniversalCalculus u = universal_calculus(a);
  std::vector<FirstOrderCalculus> out;
  for (const Mat& n : enumerate_sub_bimodules(u.calc.omega())) out.push_back(quotient_calculus(u.calc, n).calc);
  return out;
}

// For a group algebra with grouplike basis: the coactions on A (x) A are
// g (x) h -> g (x) h (x) gh and gh (x) g (x) h, so a subspace N of A (x) A
// is a subcomodule iff splitting each vector by the product gh (right) and
// the same grading (left) keeps every piece inside N. Both coactions use the
// same grading here, so one test covers both.
inline bool group_subcomodule_oracle(const std::vector<std::vector<std::size_t>>& table, const Mat& n_in_aa) {
  const std::size_t n = table.size();
  for (std::size_t col = 0; col < n_in_aa.cols(); ++col)
    for (std::size_t k = 0; k < n; ++k) {
      Mat piece(kQ, n * n, 1);
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
          if (table[g][h] == k) piece(g * n + h, 0) = n_in_aa(g * n + h, col);
      if (!in_span(n_in_aa, piece)) return false;
    }
  return true;
}

// Classical presentation of the Kahler differentials of k[x]/(x^n): the free
// module A.dx with basis x^k dx modulo the submodule generated by
// d(x^n) = n x^{n-1} dx.
inline std::size_t classical_dim(const Field& f, std::size_t n) {
  Algebra a = build_truncated_poly(f, n);
  Mat gen(f, n, 1);
  gen(n - 1, 0) = f.from_int(static_cast<long>(n));
  Mat submodule(f, n, 0);
  for (std::size_t i = 0; i < n; ++i) submodule = hstack(submodule, a.left_mult(i) * gen);
  return n - rank(submodule);
}

}  // namespace testing
