#include "omega/prolong.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace omega {

namespace {

void check_shapes(const GradedCalculus& g) {
  const std::size_t n = g.max_degree();
  if (g.dims.empty() || g.dims[0] != g.alg.dim()) throw InvalidInput("graded calculus: degree 0 must be the algebra");
  if (g.wedges.size() != n + 1 || g.diffs.size() != n) throw InvalidInput("graded calculus: wrong number of structure maps");
  for (std::size_t i = 0; i <= n; ++i) {
    if (g.wedges[i].size() != n - i + 1) throw InvalidInput("graded calculus: wrong number of wedges in degree " + std::to_string(i));
    for (std::size_t j = 0; i + j <= n; ++j) {
      const Mat& w = g.wedges[i][j];
      if (w.rows() != g.dims[i + j] || w.cols() != g.dims[i] * g.dims[j]) {
        throw InvalidInput("graded calculus: wedge (" + std::to_string(i) + ", " + std::to_string(j) + ") has wrong shape");
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (g.diffs[k].rows() != g.dims[k + 1] || g.diffs[k].cols() != g.dims[k]) {
      throw InvalidInput("graded calculus: differential " + std::to_string(k) + " has wrong shape");
    }
  }
}

Mat identity_of(const Field& f, std::size_t n) { return Mat::identity(f, n); }

// Runs independent checks in parallel and merges their reports in order.
Report run_checks(const std::vector<std::function<void(Report&)>>& tasks) {
  std::vector<Report> parts(tasks.size());
  const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < count; ++t) tasks[static_cast<std::size_t>(t)](parts[static_cast<std::size_t>(t)]);
  Report out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

std::string pair_tag(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

}  // namespace

std::vector<Mat> generator_maps(const GradedCalculus& g) {
  check_shapes(g);
  std::vector<Mat> p{g.alg.identity()};
  for (std::size_t n = 1; n <= g.max_degree(); ++n) p.push_back(g.wedge(n - 1, 1) * kronecker(p.back(), g.diff(0)));
  return p;
}

Report check_graded_calculus(const GradedCalculus& g) {
  check_shapes(g);
  const std::size_t top = g.max_degree();
  const Field& f = g.alg.field();
  const auto& dims = g.dims;
  std::vector<std::function<void(Report&)>> tasks;
  tasks.emplace_back([&](Report& r) { expect_equal(r, "degree 0 product is the algebra", g.wedge(0, 0), g.alg.mult()); });
  for (std::size_t n = 0; n <= top; ++n) {
    tasks.emplace_back([&, n](Report& r) {
      const Mat id = identity_of(f, dims[n]);
      expect_equal(r, "left unit in degree " + std::to_string(n), g.wedge(0, n) * kronecker(g.alg.unit(), id), id);
      expect_equal(r, "right unit in degree " + std::to_string(n), g.wedge(n, 0) * kronecker(id, g.alg.unit()), id);
    });
  }
  for (std::size_t i = 0; i <= top; ++i)
    for (std::size_t j = 0; i + j <= top; ++j)
      for (std::size_t k = 0; i + j + k <= top; ++k) {
        tasks.emplace_back([&, i, j, k](Report& r) {
          Mat lhs = g.wedge(i + j, k) * kronecker(g.wedge(i, j), identity_of(f, dims[k]));
          Mat rhs = g.wedge(i, j + k) * kronecker(identity_of(f, dims[i]), g.wedge(j, k));
          expect_equal(r, "associativity " + pair_tag(i, j) + " " + std::to_string(k), lhs, rhs, {dims[i], dims[j], dims[k]});
        });
      }
  for (std::size_t i = 0; i <= top; ++i)
    for (std::size_t j = 0; i + j < top; ++j) {
      tasks.emplace_back([&, i, j](Report& r) {
        Mat lhs = g.diff(i + j) * g.wedge(i, j);
        Mat first = g.wedge(i + 1, j) * kronecker(g.diff(i), identity_of(f, dims[j]));
        Mat second = g.wedge(i, j + 1) * kronecker(identity_of(f, dims[i]), g.diff(j));
        Mat rhs = i % 2 == 0 ? first + second : first - second;
        expect_equal(r, "graded Leibniz " + pair_tag(i, j), lhs, rhs, {dims[i], dims[j]});
      });
    }
  for (std::size_t n = 0; n + 1 < top; ++n) {
    tasks.emplace_back([&, n](Report& r) {
      expect_equal(r, "d o d = 0 in degree " + std::to_string(n), g.diff(n + 1) * g.diff(n), Mat(f, dims[n + 2], dims[n]));
    });
  }
  Report out = run_checks(tasks);
  std::vector<Mat> p = generator_maps(g);
  for (std::size_t n = 0; n <= top; ++n) {
    if (rank(p[n]) != dims[n]) out.add("not generated in degree 0", {n});
  }
  return out;
}

FirstOrderCalculus degree_one(const GradedCalculus& g) {
  check_shapes(g);
  if (g.max_degree() < 1) throw InvalidInput("degree_one: calculus has no degree 1");
  return FirstOrderCalculus(Bimodule({g.alg, g.alg, g.dims[1], g.wedge(0, 1), g.wedge(1, 0)}), g.diff(0));
}

Mat amitsur_wedge(const Algebra& a, std::size_t i, std::size_t j) {
  const Field& f = a.field();
  return kronecker({identity_of(f, ipow(a.dim(), i)), a.mult(), identity_of(f, ipow(a.dim(), j))});
}

AmitsurComplex amitsur_complex(const Algebra& a, std::size_t max_degree) {
  const Field& f = a.field();
  const std::size_t n0 = a.dim();
  AmitsurComplex out{a, {}};
  for (std::size_t n = 0; n < max_degree; ++n) {
    Mat d(f, ipow(n0, n + 2), ipow(n0, n + 1));
    for (std::size_t i = 0; i <= n + 1; ++i) {
      Mat term = kronecker({identity_of(f, ipow(n0, i)), a.unit(), identity_of(f, ipow(n0, n + 1 - i))});
      d = i % 2 == 0 ? d + term : d - term;
    }
    out.diffs.push_back(std::move(d));
  }
  return out;
}

Report check_amitsur(const AmitsurComplex& c) {
  Report out;
  for (std::size_t n = 0; n + 1 < c.diffs.size(); ++n) {
    expect_equal(out, "Amitsur d o d = 0 in degree " + std::to_string(n), c.diffs[n + 1] * c.diffs[n],
                 Mat(c.alg.field(), c.diffs[n + 1].rows(), c.diffs[n].cols()));
  }
  return out;
}

UniversalProlongation universal_prolongation(const Algebra& a, std::size_t max_degree) {
  if (max_degree < 1) throw InvalidInput("universal_prolongation: max degree must be at least 1");
  const Field& f = a.field();
  const std::size_t top = max_degree;
  UniversalCalculus u = universal_calculus(a);
  std::vector<Bimodule> modules{regular_bimodule(a), u.calc.omega()};
  std::vector<Quotient> q(2, Quotient{Mat(f, 0, 0), Mat(f, 0, 0)});
  for (std::size_t n = 2; n <= top; ++n) {
    TensorProduct tp = tensor_over(modules[n - 1], modules[1]);
    modules.push_back(tp.product);
    q.push_back(std::move(tp.q));
  }

  GradedCalculus g{a, {}, {}, {}};
  for (const auto& m : modules) g.dims.push_back(m.dim());
  g.wedges.resize(top + 1);
  for (std::size_t i = 0; i <= top; ++i) {
    for (std::size_t j = 0; i + j <= top; ++j) {
      if (i == 0) {
        g.wedges[i].push_back(modules[j].left());
      } else if (j == 0) {
        g.wedges[i].push_back(modules[i].right());
      } else if (j == 1) {
        g.wedges[i].push_back(q[i + 1].projection);
      } else {
        // x ^ y = q((x ^ y') (x) y'') for any lift y' (x) y'' of y.
        const Mat& prev = g.wedges[i][j - 1];
        g.wedges[i].push_back(q[i + j].projection * kronecker(prev, identity_of(f, g.dims[1])) *
                              kronecker(identity_of(f, g.dims[i]), q[j].section));
      }
    }
  }

  UniversalProlongation out{std::move(g), {}, {}, amitsur_complex(a, top), {}};
  GradedCalculus& calc = out.calc;
  out.embeddings.push_back(a.identity());
  out.embeddings.push_back(u.inclusion);
  for (std::size_t n = 2; n <= top; ++n) {
    auto e = factor_through(amitsur_wedge(a, n - 1, 1) * kronecker(out.embeddings[n - 1], u.inclusion), q[n]);
    if (!e) throw std::logic_error("embedding of the universal forms is not well defined");
    out.embeddings.push_back(std::move(*e));
  }
  // d^n = (d ^ ... ^ d) o embedding, the product of n + 1 differentials.
  Mat all_d = u.calc.d();
  for (std::size_t n = 0; n < top; ++n) {
    calc.diffs.push_back(all_d * out.embeddings[n]);
    if (n + 1 < top) all_d = calc.wedge(n + 1, 1) * kronecker(all_d, u.calc.d());
  }

  out.retractions = generator_maps(calc);
  Report& checks = out.checks;
  checks = check_graded_calculus(calc);
  checks.merge(check_amitsur(out.amitsur));
  for (std::size_t n = 0; n <= top; ++n) {
    expect_equal(checks, "retraction o embedding = id in degree " + std::to_string(n),
                 out.retractions[n] * out.embeddings[n], identity_of(f, calc.dims[n]));
  }
  for (std::size_t n = 0; n < top; ++n) {
    expect_equal(checks, "embedding intertwines d in degree " + std::to_string(n), out.embeddings[n + 1] * calc.diff(n),
                 out.amitsur.diffs[n] * out.embeddings[n]);
  }
  for (std::size_t i = 0; i <= top; ++i)
    for (std::size_t j = 0; i + j <= top; ++j) {
      expect_equal(checks, "embedding intertwines wedge " + pair_tag(i, j), out.embeddings[i + j] * calc.wedge(i, j),
                   amitsur_wedge(a, i, j) * kronecker(out.embeddings[i], out.embeddings[j]));
    }
  return out;
}

MaximalProlongation maximal_prolongation(const FirstOrderCalculus& c, std::size_t max_degree) {
  return maximal_prolongation(universal_prolongation(c.alg(), max_degree), c);
}

MaximalProlongation maximal_prolongation(const UniversalProlongation& u, const FirstOrderCalculus& c) {
  const GradedCalculus& uc = u.calc;
  if (!(uc.alg == c.alg())) throw InvalidInput("maximal_prolongation: calculus over a different algebra");
  const Algebra& a = c.alg();
  const Field& f = a.field();
  const std::size_t top = uc.max_degree();
  Mat onto = left_d(c.omega(), c.d()) * u.embeddings[1];

  MaximalProlongation out{GradedCalculus{a, {}, {}, {}}, {}, {}, {}};
  out.relations.push_back(Mat(f, a.dim(), 0));
  out.relations.push_back(kernel_basis(onto));
  out.quotients.push_back(Quotient{a.identity(), a.identity()});
  out.quotients.push_back(as_quotient(onto));
  for (std::size_t n = 2; n <= top; ++n) {
    Mat gens = uc.diff(n - 1) * out.relations[n - 1];
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t j = n - i;
      gens = hstack(gens, uc.wedge(i, j) * kronecker(out.relations[i], identity_of(f, uc.dims[j])));
      gens = hstack(gens, uc.wedge(i, j) * kronecker(identity_of(f, uc.dims[i]), out.relations[j]));
    }
    out.relations.push_back(canonical_columns(gens));
    out.quotients.push_back(cokernel_projection(out.relations.back()));
  }

  GradedCalculus& g = out.calc;
  const auto& q = out.quotients;
  for (const auto& qn : q) g.dims.push_back(qn.dim());
  g.wedges.resize(top + 1);
  for (std::size_t i = 0; i <= top; ++i)
    for (std::size_t j = 0; i + j <= top; ++j)
      g.wedges[i].push_back(q[i + j].projection * uc.wedge(i, j) * kronecker(q[i].section, q[j].section));
  for (std::size_t n = 0; n < top; ++n) g.diffs.push_back(q[n + 1].projection * uc.diff(n) * q[n].section);

  Report& checks = out.checks;
  checks = check_graded_calculus(g);
  for (std::size_t i = 0; i <= top; ++i)
    for (std::size_t j = 0; i + j <= top; ++j) {
      expect_equal(checks, "cocone for wedge " + pair_tag(i, j), q[i + j].projection * uc.wedge(i, j),
                   g.wedge(i, j) * kronecker(q[i].projection, q[j].projection));
    }
  for (std::size_t n = 0; n < top; ++n) {
    expect_equal(checks, "cocone for d in degree " + std::to_string(n), q[n + 1].projection * uc.diff(n),
                 g.diff(n) * q[n].projection);
  }
  expect_equal(checks, "degree 1 left action", g.wedge(0, 1), c.omega().left());
  expect_equal(checks, "degree 1 right action", g.wedge(1, 0), c.omega().right());
  expect_equal(checks, "degree 1 differential", g.diff(0), c.d());
  return out;
}

GradedCalculus trivial_extension(const FirstOrderCalculus& c, std::size_t max_degree) {
  if (max_degree < 1) throw InvalidInput("trivial_extension: max degree must be at least 1");
  const Algebra& a = c.alg();
  const Field& f = a.field();
  GradedCalculus g{a, {a.dim(), c.dim()}, {}, {c.d()}};
  g.dims.resize(max_degree + 1, 0);
  g.wedges.resize(max_degree + 1);
  for (std::size_t i = 0; i <= max_degree; ++i)
    for (std::size_t j = 0; i + j <= max_degree; ++j) {
      if (i + j == 0) {
        g.wedges[i].push_back(a.mult());
      } else if (i == 0 && j == 1) {
        g.wedges[i].push_back(c.omega().left());
      } else if (i == 1 && j == 0) {
        g.wedges[i].push_back(c.omega().right());
      } else {
        g.wedges[i].push_back(Mat(f, g.dims[i + j], g.dims[i] * g.dims[j]));
      }
    }
  for (std::size_t n = 1; n < max_degree; ++n) g.diffs.push_back(Mat(f, g.dims[n + 1], g.dims[n]));
  return g;
}

DgMorphismResult unique_dg_morphism(const GradedCalculus& src, const GradedCalculus& tgt, const AlgMap& f0) {
  if (!(f0.source() == src.alg) || !(f0.target() == tgt.alg)) throw InvalidInput("unique_dg_morphism: f0 does not match the calculi");
  if (src.max_degree() != tgt.max_degree()) throw InvalidInput("unique_dg_morphism: max degrees differ");
  const std::size_t top = src.max_degree();
  std::vector<Mat> p_src = generator_maps(src);
  std::vector<Mat> p_tgt = generator_maps(tgt);
  DgMorphism m;
  for (std::size_t n = 0; n <= top; ++n) {
    Mat candidate = p_tgt[n] * tensor_power(f0.matrix(), n + 1);
    auto fn = factor_through(candidate, as_quotient(p_src[n]));
    if (!fn) return {std::nullopt, "not well defined in degree " + std::to_string(n)};
    m.maps.push_back(std::move(*fn));
  }
  for (std::size_t n = 0; n < top; ++n) {
    if (!(m.maps[n + 1] * src.diff(n) == tgt.diff(n) * m.maps[n])) {
      return {std::nullopt, "does not commute with d in degree " + std::to_string(n)};
    }
  }
  for (std::size_t i = 0; i <= top; ++i)
    for (std::size_t j = 0; i + j <= top; ++j) {
      if (!(m.maps[i + j] * src.wedge(i, j) == tgt.wedge(i, j) * kronecker(m.maps[i], m.maps[j]))) {
        return {std::nullopt, "does not preserve the wedge " + pair_tag(i, j)};
      }
    }
  return {std::move(m), ""};
}

Report truncation_adjoints_check(const Algebra& a, const std::vector<FirstOrderCalculus>& fodcs,
                                 const std::vector<GradedCalculus>& graded, std::size_t max_degree) {
  UniversalProlongation u = universal_prolongation(a, max_degree);
  AlgMap id = AlgMap::identity(a);
  std::vector<GradedCalculus> maximal;
  std::vector<GradedCalculus> trivial;
  Report out;
  for (std::size_t k = 0; k < fodcs.size(); ++k) {
    MaximalProlongation mp = maximal_prolongation(u, fodcs[k]);
    out.merge(mp.checks, "maximal prolongation " + std::to_string(k) + ": ");
    maximal.push_back(std::move(mp.calc));
    trivial.push_back(trivial_extension(fodcs[k], max_degree));
  }
  std::vector<FirstOrderCalculus> truncated;
  for (const auto& t : graded) {
    if (!(t.alg == a) || t.max_degree() != max_degree) throw InvalidInput("truncation_adjoints_check: graded calculus does not match");
    truncated.push_back(degree_one(t));
  }
  std::vector<std::function<void(Report&)>> tasks;
  for (std::size_t c = 0; c < fodcs.size(); ++c)
    for (std::size_t t = 0; t < graded.size(); ++t) {
      tasks.emplace_back([&, c, t](Report& r) {
        bool dg_left = unique_dg_morphism(maximal[c], graded[t], id).morphism.has_value();
        bool first_left = calculus_morphism(fodcs[c], truncated[t]).has_value();
        if (dg_left != first_left) r.add("left adjoint mismatch", {c, t});
        bool dg_right = unique_dg_morphism(graded[t], trivial[c], id).morphism.has_value();
        bool first_right = calculus_morphism(truncated[t], fodcs[c]).has_value();
        if (dg_right != first_right) r.add("right adjoint mismatch", {c, t});
      });
    }
  out.merge(run_checks(tasks));
  return out;
}

double projected_prolongation_dim(std::size_t algebra_dim, std::size_t max_degree) {
  if (algebra_dim == 0) return 0.0;
  return static_cast<double>(algebra_dim) * std::pow(static_cast<double>(algebra_dim - 1), static_cast<double>(max_degree));
}

}  // namespace omega
