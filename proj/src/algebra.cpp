#include "omega/algebra.hpp"

namespace omega {
namespace {

void check_shapes(const AlgebraData& d) {
  const std::size_t n = d.basis.size();
  if (d.mult.rows() != n || d.mult.cols() != n * n) {
    throw InvalidInput("structure tensor must be " + std::to_string(n) + " x " + std::to_string(n * n));
  }
  if (d.unit.rows() != n || d.unit.cols() != 1) throw InvalidInput("unit must be a column of length " + std::to_string(n));
  if (!(d.mult.field() == d.field) || !(d.unit.field() == d.field)) throw InvalidInput("field mismatch in algebra data");
}

}  // namespace

Report check_algebra(const AlgebraData& d) {
  check_shapes(d);
  const std::size_t n = d.basis.size();
  const Field& f = d.field;
  Report report;
  Mat id = Mat::identity(f, n);
  // m (m (x) 1) = m (1 (x) m) on A^{(x)3}
  expect_equal(report, "associativity", d.mult * kronecker(d.mult, id), d.mult * kronecker(id, d.mult), {n, n, n});
  expect_equal(report, "left unit", d.mult * kronecker(d.unit, id), id);
  expect_equal(report, "right unit", d.mult * kronecker(id, d.unit), id);
  return report;
}

Algebra::Algebra(AlgebraData data) {
  Report r = check_algebra(data);
  if (!r.ok()) throw AxiomError("not a unital associative algebra: " + r.summary());
  data_ = std::make_shared<const AlgebraData>(std::move(data));
}

Mat Algebra::left_mult(std::size_t i) const {
  Mat m(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = constant(i, j, k);
  return m;
}

Mat Algebra::right_mult(std::size_t j) const {
  Mat m(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t k = 0; k < dim(); ++k) m(k, i) = constant(i, j, k);
  return m;
}

Mat Algebra::product(const Mat& a, const Mat& b) const { return mult() * kronecker(a, b); }

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.data_ == b.data_) return true;
  return a.field() == b.field() && a.dim() == b.dim() && a.mult() == b.mult() && a.unit() == b.unit();
}

std::optional<std::pair<std::size_t, std::size_t>> noncommuting_pair(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.constant(i, j, k) != a.constant(j, i, k)) return std::make_pair(i, j);
  return std::nullopt;
}

bool is_commutative(const Algebra& a) {
  return a.mult() * swap_matrix(a.field(), a.dim(), a.dim()) == a.mult();
}

Algebra opposite(const Algebra& a) {
  AlgebraData d = a.data();
  d.mult = a.mult() * swap_matrix(a.field(), a.dim(), a.dim());
  return Algebra(std::move(d));
}

Algebra build_truncated_poly(Field field, std::size_t n) {
  if (n == 0) throw InvalidInput("truncated polynomial algebra needs n >= 1");
  AlgebraData d{field, {}, Mat(field, n, n * n), Mat(field, n, 1)};
  for (std::size_t i = 0; i < n; ++i) {
    d.basis.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) d.mult(i + j, i * n + j) = 1;
  }
  d.unit(0, 0) = 1;
  return Algebra(std::move(d));
}

Algebra build_group_algebra(Field field, const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidInput("empty Cayley table");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidInput("Cayley table is not square");
    for (auto v : row)
      if (v >= n) throw InvalidInput("Cayley table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw InvalidInput("Cayley table is not associative");
  std::optional<std::size_t> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n; ++b) ok = ok && table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (!e) throw InvalidInput("Cayley table has no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) has_inverse = has_inverse || (table[a][b] == *e && table[b][a] == *e);
    if (!has_inverse) throw InvalidInput("Cayley table element " + std::to_string(a) + " has no inverse");
  }
  AlgebraData d{field, {}, Mat(field, n, n * n), Mat(field, n, 1)};
  for (std::size_t a = 0; a < n; ++a) {
    d.basis.push_back(a == *e ? "1" : "g" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) d.mult(table[a][b], a * n + b) = 1;
  }
  d.unit(*e, 0) = 1;
  return Algebra(std::move(d));
}

Algebra build_matrix_algebra(Field field, std::size_t k) {
  if (k == 0) throw InvalidInput("matrix algebra needs k >= 1");
  const std::size_t n = k * k;
  AlgebraData d{field, {}, Mat(field, n, n * n), Mat(field, n, 1)};
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) d.basis.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  // E_ab E_cd = delta_bc E_ad
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t dd = 0; dd < k; ++dd) d.mult(a * k + dd, (a * k + b) * n + (b * k + dd)) = 1;
  for (std::size_t a = 0; a < k; ++a) d.unit(a * k + a, 0) = 1;
  return Algebra(std::move(d));
}

Report check_alg_map(const AlgMapData& d) {
  const Algebra& s = d.source;
  const Algebra& t = d.target;
  if (d.matrix.rows() != t.dim() || d.matrix.cols() != s.dim()) throw InvalidInput("algebra map matrix has wrong shape");
  if (!(s.field() == t.field()) || !(d.matrix.field() == s.field())) throw InvalidInput("field mismatch in algebra map");
  Report report;
  expect_equal(report, "multiplicativity", t.mult() * kronecker(d.matrix, d.matrix), d.matrix * s.mult(),
               {s.dim(), s.dim()});
  expect_equal(report, "unit preservation", d.matrix * s.unit(), t.unit());
  return report;
}

AlgMap::AlgMap(AlgMapData data) : data_(std::move(data)) {
  Report r = check_alg_map(data_);
  if (!r.ok()) throw AxiomError("not an algebra map: " + r.summary());
}

AlgMap AlgMap::identity(const Algebra& a) { return AlgMap({a, a, a.identity()}); }

AlgMap AlgMap::unit_map(const Algebra& a) { return AlgMap({ground_algebra(a.field()), a, a.unit()}); }

AlgMap compose(const AlgMap& g, const AlgMap& f) {
  if (!(f.target() == g.source())) throw InvalidInput("compose: algebra maps are not composable");
  return AlgMap({f.source(), g.target(), g.matrix() * f.matrix()});
}

}  // namespace omega
