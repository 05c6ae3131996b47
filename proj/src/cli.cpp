#include "omega/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "omega/derham.hpp"
#include "omega/io.hpp"
#include "omega/kahler.hpp"
#include "omega/prolong.hpp"
#include "omega/scalars.hpp"

namespace omega::cli {

namespace {

using io::Json;
namespace fs = std::filesystem;

// Refusals that are not library preconditions but should exit the same way.
struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json checks_json(const Report& r) { return Json{{"ok", r.ok()}, {"violations", io::report_to_json(r)}}; }

Json algebra_summary(const Algebra& a) {
  return Json{{"dim", a.dim()}, {"field", io::field_to_json(a.field())}, {"basis", a.basis()}};
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat_array(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void flatten(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (j.is_array() && is_flat_array(j)) {
    out << path << ":";
    for (const auto& e : j) out << ' ' << scalar_text(e);
    out << '\n';
  } else if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], path + "[" + std::to_string(k) + "]", out);
  } else {
    out << path << ": " << scalar_text(j) << '\n';
  }
}

void emit(const Json& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report.dump(2) << '\n';
  } else {
    flatten(report, "", out);
  }
}

Algebra load_algebra(const std::string& path) { return io::parse_algebra(io::load_file(path)); }

Mat relations_from_file(const std::string& path, const UniversalCalculus& u) {
  return io::parse_generators(u.calc.alg().field(), io::load_file(path), u.calc.dim());
}

double dim_limit() {
  const char* env = std::getenv("OMEGA_MAX_DIM");
  if (env == nullptr) return 1e6;
  try {
    return std::stod(env);
  } catch (const std::exception&) {
    throw InvalidInput(std::string("OMEGA_MAX_DIM is not a number: ") + env);
  }
}

Json degrees_json(const DeRham& r) {
  Json degrees = Json::array();
  for (const auto& h : r.cohomology.degrees) {
    degrees.push_back(Json{{"n", h.n},
                           {"dim_omega", h.dim_cochains},
                           {"dim_H", h.dim},
                           {"representatives", io::columns_to_json(h.representatives)}});
  }
  return degrees;
}

Json cmd_check(const std::string& file) {
  Json input = io::load_file(file);
  AlgebraData data = io::parse_algebra_data(input);
  Report algebra = check_algebra(data);
  Json out{{"dim", data.basis.size()}, {"algebra", checks_json(algebra)}};
  bool valid = algebra.ok();
  if (valid) {
    Algebra a(data);
    if (auto bimonoid = io::parse_bimonoid_data(input, a)) {
      Report b = check_bimonoid(*bimonoid);
      out["bimonoid"] = checks_json(b);
      valid = b.ok();
    }
  }
  out["status"] = valid ? "valid" : "invalid";
  return out;
}

Json cmd_universal(const std::string& file) {
  Algebra a = load_algebra(file);
  UniversalCalculus u = universal_calculus(a);
  Mat split = right_d(u.calc.omega(), u.calc.d()) * u.inclusion;
  bool split_ok = split == -Mat::identity(a.field(), u.calc.dim());
  return Json{{"algebra", algebra_summary(a)},
              {"dim", u.calc.dim()},
              {"kernel_basis", io::columns_to_json(u.inclusion)},
              {"d", io::matrix_to_json(u.calc.d())},
              {"split_identity", split_ok}};
}

Json cmd_kahler(const std::string& file) {
  Algebra a = load_algebra(file);
  UniversalCalculus u = universal_calculus(a);
  Mat relations = kahler_relations(u);
  QuotientCalculus k = quotient_calculus(u.calc, relations);
  return Json{{"algebra", algebra_summary(a)},
              {"dim", k.calc.dim()},
              {"relations", io::columns_to_json(relations)},
              {"d", io::matrix_to_json(k.calc.d())},
              {"central", centrality_check(k.calc.omega())}};
}

Json graded_matrices(const GradedCalculus& g) {
  Json diffs = Json::array();
  for (const auto& d : g.diffs) diffs.push_back(io::matrix_to_json(d));
  Json wedges = Json::array();
  for (std::size_t i = 0; i < g.wedges.size(); ++i) {
    for (std::size_t j = 0; j < g.wedges[i].size(); ++j) {
      wedges.push_back(Json{{"i", i}, {"j", j}, {"matrix", io::matrix_to_json(g.wedges[i][j])}});
    }
  }
  return Json{{"differentials", diffs}, {"wedges", wedges}};
}

Json cmd_prolong(const std::string& file, const std::string& calculus, std::size_t max_degree, bool force,
                 bool matrices) {
  Algebra a = load_algebra(file);
  const double projected = projected_prolongation_dim(a.dim(), max_degree);
  const double limit = dim_limit();
  if (!force && projected > limit) {
    std::ostringstream msg;
    msg << "projected dimension " << projected << " in degree " << max_degree << " exceeds " << limit
        << "; pass --force to compute anyway";
    throw Refusal(msg.str());
  }
  GradedCalculus g{a, {}, {}, {}};
  Report checks;
  std::string kind = calculus;
  if (calculus == "universal") {
    UniversalProlongation u = universal_prolongation(a, max_degree);
    g = std::move(u.calc);
    checks = std::move(u.checks);
  } else {
    std::optional<FirstOrderCalculus> c;
    if (calculus == "kahler") {
      c = kahler_calculus(a).calc;
    } else if (calculus.rfind("quotient:", 0) == 0) {
      kind = "quotient";
      UniversalCalculus u = universal_calculus(a);
      Mat rel = saturate(u.calc.omega(), relations_from_file(calculus.substr(9), u));
      c = quotient_calculus(u.calc, rel).calc;
    } else {
      throw InvalidInput("--calculus must be universal, kahler or quotient:<file>");
    }
    MaximalProlongation m = maximal_prolongation(*c, max_degree);
    g = std::move(m.calc);
    checks = std::move(m.checks);
  }
  Json out{{"algebra", algebra_summary(a)},
           {"calculus", kind},
           {"max_degree", max_degree},
           {"dims", g.dims},
           {"checks", checks_json(checks)}};
  if (matrices) out["matrices"] = graded_matrices(g);
  if (!checks.ok()) throw AxiomError("prolongation failed its checks: " + checks.summary());
  return out;
}

Flavor parse_flavor(const std::string& s) {
  if (s == "universal") return Flavor::universal;
  if (s == "kahler") return Flavor::kahler;
  throw InvalidInput("--flavor must be universal or kahler");
}

Json cmd_cohomology(const std::string& file, const std::string& flavor, std::size_t max_degree) {
  Algebra a = load_algebra(file);
  DeRham r = de_rham(a, parse_flavor(flavor), max_degree);
  return Json{{"algebra", algebra_summary(a)},
              {"flavor", flavor},
              {"max_degree", max_degree},
              {"dims_omega", r.calc.dims},
              {"degrees", degrees_json(r)}};
}

Json cmd_compare(const std::string& file, std::size_t max_degree) {
  Algebra a = load_algebra(file);
  DeRhamComparison c = de_rham_comparison(a, max_degree);
  Json comparison = Json::array();
  for (const auto& m : c.on_cohomology) comparison.push_back(io::matrix_to_json(m));
  return Json{{"algebra", algebra_summary(a)},
              {"max_degree", max_degree},
              {"universal", Json{{"dims_omega", c.universal.calc.dims}, {"degrees", degrees_json(c.universal)}}},
              {"kahler", Json{{"dims_omega", c.kahler.calc.dims}, {"degrees", degrees_json(c.kahler)}}},
              {"comparison", comparison},
              {"checks", checks_json(c.checks)}};
}

AlgMap load_map(const std::string& path) {
  return io::parse_morphism(io::load_file(path), fs::path(path).parent_path());
}

Json cmd_extend(const std::string& map_file, const std::string& calc_file) {
  AlgMap f = load_map(map_file);
  FirstOrderCalculus c = io::parse_calculus(io::load_file(calc_file), f.source());
  Pushforward p = calc_pushforward(f, c);
  Mat literal = pushforward_relations_via_extension(f, c);
  UniversalCalculus ub = universal_calculus(f.target());
  Mat onto = induced_map(ub, p.result.calc).matrix();
  return Json{{"source_dim", f.source().dim()},
              {"target_dim", f.target().dim()},
              {"calculus_dim", c.dim()},
              {"dim", p.result.calc.dim()},
              {"relations", io::columns_to_json(p.relations)},
              {"d", io::matrix_to_json(p.result.calc.d())},
              {"matches_extension", literal == p.relations},
              {"surjective_from_universal", rank(onto) == p.result.calc.dim()}};
}

Json cmd_restrict(const std::string& map_file, const std::string& calc_file) {
  AlgMap f = load_map(map_file);
  FirstOrderCalculus t = io::parse_calculus(io::load_file(calc_file), f.target());
  Pullback p = calc_pullback(f, t);
  return Json{{"source_dim", f.source().dim()},
              {"target_dim", f.target().dim()},
              {"calculus_dim", t.dim()},
              {"dim", p.result.calc.dim()},
              {"relations", io::columns_to_json(p.preimage)},
              {"d", io::matrix_to_json(p.result.calc.d())},
              {"kernel_matches", p.kernel_matches}};
}

Bimonoid load_bimonoid(const std::string& file) {
  Json input = io::load_file(file);
  Algebra a = io::parse_algebra(input);
  auto data = io::parse_bimonoid_data(input, a);
  if (!data) throw Refusal(file + " has no comult/counit");
  return Bimonoid(std::move(*data));
}

Json cmd_hopf_check(const std::string& file) {
  Bimonoid h = load_bimonoid(file);
  UniversalHopf u = universal_coactions(h);
  Json out{{"algebra", algebra_summary(h.alg())},
           {"dim", u.universal.calc.dim()},
           {"left_coaction", io::matrix_to_json(u.module.left_coaction)},
           {"right_coaction", io::matrix_to_json(u.module.right_coaction)},
           {"checks", checks_json(u.checks)}};
  if (!u.checks.ok()) throw AxiomError("universal calculus is not a Hopf module: " + u.checks.summary());
  return out;
}

Json cmd_bicovariant(const std::string& file, const std::string& relations) {
  Bimonoid h = load_bimonoid(file);
  UniversalCalculus u = universal_calculus(h.alg());
  Mat rel = saturate(u.calc.omega(), relations_from_file(relations, u));
  QuotientCalculus c = quotient_calculus(u.calc, rel);
  Bicovariance b = bicovariance_check(h, c.calc);
  return Json{{"dim", c.calc.dim()},
              {"relations", io::columns_to_json(b.relations)},
              {"left_subcomodule", b.left_subcomodule},
              {"right_subcomodule", b.right_subcomodule},
              {"bicovariant", b.bicovariant()},
              {"projection_is_hopf_map", b.projection_is_hopf_map},
              {"d_is_comodule_map", b.d_is_comodule_map},
              {"witnesses", io::report_to_json(b.witnesses)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential calculi of finite-dimensional algebras", "omega"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::function<Json()> action;
  std::string file;
  std::size_t max_degree = 0;

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto algebra_arg = [&](CLI::App* sub) { sub->add_option("file", file, "Algebra JSON file")->required(); };

  CLI::App* check = add("check", "Check the algebra (and bimonoid) axioms of a file");
  algebra_arg(check);
  check->callback([&] { action = [&] { return cmd_check(file); }; });

  CLI::App* universal = add("universal", "Universal first-order calculus: dim, kernel basis in A(x)A, d");
  algebra_arg(universal);
  universal->callback([&] { action = [&] { return cmd_universal(file); }; });

  CLI::App* kahler = add("kahler", "Kahler calculus of a commutative algebra");
  algebra_arg(kahler);
  kahler->callback([&] { action = [&] { return cmd_kahler(file); }; });

  std::string calculus = "universal";
  bool force = false;
  bool matrices = false;
  CLI::App* prolong = add("prolong", "Maximal prolongation up to a given degree");
  algebra_arg(prolong);
  prolong->add_option("--calculus", calculus, "universal | kahler | quotient:<relations.json>");
  prolong->add_option("--max-degree", max_degree, "Top degree N")->required();
  prolong->add_flag("--force", force, "Ignore the dimension guardrail (OMEGA_MAX_DIM, default 1e6)");
  prolong->add_flag("--matrices", matrices, "Include differentials and products");
  prolong->callback(
      [&] { action = [&] { return cmd_prolong(file, calculus, max_degree, force, matrices); }; });

  std::string flavor = "universal";
  CLI::App* coh = add("cohomology",
                      "de Rham cohomology H^0..H^{N-1}; H^N needs d^N and is not reported");
  algebra_arg(coh);
  coh->add_option("--flavor", flavor, "universal | kahler");
  coh->add_option("--max-degree", max_degree, "Top degree N")->required();
  coh->callback([&] { action = [&] { return cmd_cohomology(file, flavor, max_degree); }; });

  CLI::App* compare = add("compare", "Universal vs Kahler de Rham cohomology, H^0..H^{N-1}");
  algebra_arg(compare);
  compare->add_option("--max-degree", max_degree, "Top degree N")->required();
  compare->callback([&] { action = [&] { return cmd_compare(file, max_degree); }; });

  std::string map_file;
  std::string calc_file;
  CLI::App* extend = add("extend", "Push a calculus forward along an algebra map");
  extend->add_option("--map", map_file, "Morphism JSON file")->required();
  extend->add_option("--calculus", calc_file, "Calculus over the source")->required();
  extend->callback([&] { action = [&] { return cmd_extend(map_file, calc_file); }; });

  CLI::App* restrict_cmd = add("restrict", "Pull a calculus back along an algebra map");
  restrict_cmd->add_option("--map", map_file, "Morphism JSON file")->required();
  restrict_cmd->add_option("--calculus", calc_file, "Calculus over the target")->required();
  restrict_cmd->callback([&] { action = [&] { return cmd_restrict(map_file, calc_file); }; });

  CLI::App* hopf = add("hopf-check", "Coactions on the universal calculus of a bimonoid");
  algebra_arg(hopf);
  hopf->callback([&] { action = [&] { return cmd_hopf_check(file); }; });

  std::string relations;
  CLI::App* bicov = add("bicovariant", "Bicovariance of a quotient of the universal calculus");
  algebra_arg(bicov);
  bicov->add_option("--relations", relations, "Relations JSON file")->required();
  bicov->callback([&] { action = [&] { return cmd_bicovariant(file, relations); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    Json report = action();
    emit(report, format, out);
    if (report.contains("status") && report["status"] == "invalid") return failure;
    return ok;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return precondition;
  } catch (const Refusal& e) {
    err << "error: " << e.what() << '\n';
    return precondition;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  } catch (const AxiomError& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
}

}  // namespace omega::cli
