#include "omega/derham.hpp"

#include <stdexcept>

#include "omega/kahler.hpp"

namespace omega {

void validate_complex(const CochainComplex& c) {
  if (c.dims.empty() || c.diffs.size() + 1 != c.dims.size()) throw InvalidInput("cochain complex: need one more component than differentials");
  for (std::size_t n = 0; n < c.diffs.size(); ++n) {
    if (c.diffs[n].rows() != c.dims[n + 1] || c.diffs[n].cols() != c.dims[n]) {
      throw InvalidInput("cochain complex: differential " + std::to_string(n) + " has wrong shape");
    }
  }
  for (std::size_t n = 0; n + 1 < c.diffs.size(); ++n) {
    if (!(c.diffs[n + 1] * c.diffs[n]).is_zero()) throw InvalidInput("cochain complex: d o d != 0 starting in degree " + std::to_string(n));
  }
}

std::vector<std::size_t> CohomologyReport::dims() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.dim);
  return out;
}

CohomologyReport cohomology(const CochainComplex& c) {
  validate_complex(c);
  CohomologyReport out;
  for (std::size_t n = 0; n < c.diffs.size(); ++n) {
    CohomologyDegree deg;
    deg.n = n;
    deg.dim_cochains = c.dims[n];
    Mat cycles = kernel_basis(c.diffs[n]);
    deg.cycle_dim = cycles.cols();
    deg.boundaries = n == 0 ? Mat(c.field, c.dims[0], 0) : image_basis(c.diffs[n - 1]);
    deg.boundary_rank = deg.boundaries.cols();
    deg.dim = deg.cycle_dim - deg.boundary_rank;
    Mat span = deg.boundaries;
    deg.representatives = Mat(c.field, c.dims[n], 0);
    for (std::size_t k = 0; k < cycles.cols() && deg.representatives.cols() < deg.dim; ++k) {
      Mat z = cycles.col_block(k, 1);
      if (in_span(span, z)) continue;
      span = hstack(span, z);
      deg.representatives = hstack(deg.representatives, z);
    }
    out.degrees.push_back(std::move(deg));
  }
  return out;
}

Mat induced_on_cohomology(const CohomologyDegree& src, const CohomologyDegree& tgt, const Mat& f) {
  const Field& fld = f.field();
  Mat basis = hstack(tgt.representatives, tgt.boundaries);
  Mat out(fld, tgt.dim, src.dim);
  for (std::size_t k = 0; k < src.dim; ++k) {
    auto x = solve(basis, f * src.representatives.col_block(k, 1));
    if (!x) throw InvalidInput("induced_on_cohomology: image of a cycle is not a cycle");
    for (std::size_t r = 0; r < tgt.dim; ++r) out(r, k) = (*x)(r, 0);
  }
  return out;
}

CochainComplex underlying_complex(const GradedCalculus& g) { return CochainComplex{g.alg.field(), g.dims, g.diffs}; }

const char* to_string(Flavor flavor) { return flavor == Flavor::universal ? "universal" : "kahler"; }

namespace {

DeRham de_rham_from(const UniversalProlongation& u, Flavor flavor) {
  if (flavor == Flavor::universal) return DeRham{u.calc, cohomology(underlying_complex(u.calc))};
  QuotientCalculus k = kahler_calculus(u.calc.alg);
  MaximalProlongation mp = maximal_prolongation(u, k.calc);
  if (!mp.checks.ok()) throw AxiomError("Kahler prolongation failed its checks: " + mp.checks.summary());
  CohomologyReport h = cohomology(underlying_complex(mp.calc));
  return DeRham{std::move(mp.calc), std::move(h)};
}

UniversalProlongation checked_universal(const Algebra& a, std::size_t max_degree) {
  UniversalProlongation u = universal_prolongation(a, max_degree);
  if (!u.checks.ok()) throw AxiomError("universal prolongation failed its checks: " + u.checks.summary());
  return u;
}

}  // namespace

DeRham de_rham(const Algebra& a, Flavor flavor, std::size_t max_degree) {
  if (flavor == Flavor::kahler && !is_commutative(a)) kahler_relations(universal_calculus(a));  // throws with a witness
  return de_rham_from(checked_universal(a, max_degree), flavor);
}

DeRhamComparison de_rham_comparison(const Algebra& a, std::size_t max_degree) {
  if (!is_commutative(a)) kahler_relations(universal_calculus(a));
  UniversalProlongation u = checked_universal(a, max_degree);
  DeRham uni = de_rham_from(u, Flavor::universal);
  DeRham kah = de_rham_from(u, Flavor::kahler);
  DgMorphismResult m = unique_dg_morphism(uni.calc, kah.calc, AlgMap::identity(a));
  if (!m.morphism) throw std::logic_error("no dg morphism from the universal prolongation: " + m.reason);
  DeRhamComparison out{std::move(uni), std::move(kah), std::move(*m.morphism), {}, {}};
  for (std::size_t n = 0; n < max_degree; ++n) {
    expect_equal(out.checks, "cochain map in degree " + std::to_string(n), out.map.maps[n + 1] * out.universal.calc.diff(n),
                 out.kahler.calc.diff(n) * out.map.maps[n]);
    if (rank(out.map.maps[n]) != out.kahler.calc.dims[n]) out.checks.add("comparison not surjective", {n});
  }
  for (std::size_t n = 0; n < max_degree; ++n) {
    out.on_cohomology.push_back(induced_on_cohomology(out.universal.cohomology.degrees[n], out.kahler.cohomology.degrees[n],
                                                      out.map.maps[n]));
  }
  return out;
}

}  // namespace omega
