#include "omega/io.hpp"

#include <fstream>

#include "omega/kahler.hpp"

namespace omega::io {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

void require_array(const Json& j, std::size_t size, const std::string& what) {
  if (!j.is_array() || j.size() != size) {
    throw InvalidInput(what + " must be an array of length " + std::to_string(size));
  }
}

}  // namespace

Json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

Field parse_field(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.contains("Fp") && j.at("Fp").is_number_unsigned()) return Field::prime(j.at("Fp").get<std::uint64_t>());
  throw InvalidInput("field must be \"Q\" or {\"Fp\": p}");
}

Json field_to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return Json{{"Fp", f.characteristic()}};
}

Scalar parse_scalar(const Field& f, const Json& j) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<long>());
  throw InvalidInput("scalars must be strings or integers");
}

std::string scalar_string(const Field& f, const Scalar& s) { return f.format(s); }

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.field().format(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json columns_to_json(const Mat& m) { return matrix_to_json(m.transpose()); }

Mat parse_matrix(const Field& f, const Json& rows, std::size_t expected_rows, std::size_t expected_cols) {
  require_array(rows, expected_rows, "matrix");
  Mat m(f, expected_rows, expected_cols);
  for (std::size_t r = 0; r < expected_rows; ++r) {
    require_array(rows[r], expected_cols, "matrix row " + std::to_string(r));
    for (std::size_t c = 0; c < expected_cols; ++c) m(r, c) = parse_scalar(f, rows[r][c]);
  }
  return m;
}

AlgebraData parse_algebra_data(const Json& j) {
  Field f = parse_field(member(j, "field"));
  const Json& dim_j = member(j, "dim");
  if (!dim_j.is_number_unsigned()) throw InvalidInput("dim must be a non-negative integer");
  const std::size_t n = dim_j.get<std::size_t>();
  if (n == 0) throw InvalidInput("dim must be positive");
  AlgebraData d{f, {}, Mat(f, n, n * n), Mat(f, n, 1)};
  if (j.contains("basis")) {
    require_array(j.at("basis"), n, "basis");
    for (const auto& label : j.at("basis")) d.basis.push_back(label.get<std::string>());
  } else {
    for (std::size_t i = 0; i < n; ++i) d.basis.push_back("e" + std::to_string(i));
  }
  const Json& mult = member(j, "mult");
  require_array(mult, n, "mult");
  for (std::size_t i = 0; i < n; ++i) {
    require_array(mult[i], n, "mult[" + std::to_string(i) + "]");
    for (std::size_t k = 0; k < n; ++k) {
      require_array(mult[i][k], n, "mult[" + std::to_string(i) + "][" + std::to_string(k) + "]");
      for (std::size_t r = 0; r < n; ++r) d.mult(r, i * n + k) = parse_scalar(f, mult[i][k][r]);
    }
  }
  const Json& unit = member(j, "unit");
  require_array(unit, n, "unit");
  for (std::size_t r = 0; r < n; ++r) d.unit(r, 0) = parse_scalar(f, unit[r]);
  return d;
}

Algebra parse_algebra(const Json& j) { return Algebra(parse_algebra_data(j)); }

Json algebra_to_json(const AlgebraData& a) {
  const std::size_t n = a.basis.size();
  Json mult = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < n; ++k) {
      Json coords = Json::array();
      for (std::size_t r = 0; r < n; ++r) coords.push_back(a.field.format(a.mult(r, i * n + k)));
      row.push_back(std::move(coords));
    }
    mult.push_back(std::move(row));
  }
  Json unit = Json::array();
  for (std::size_t r = 0; r < n; ++r) unit.push_back(a.field.format(a.unit(r, 0)));
  return Json{{"field", field_to_json(a.field)}, {"dim", n}, {"basis", a.basis}, {"mult", mult}, {"unit", unit}};
}

std::optional<BimonoidData> parse_bimonoid_data(const Json& j, const Algebra& a) {
  if (!j.contains("comult") && !j.contains("counit")) return std::nullopt;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const Json& comult = member(j, "comult");
  require_array(comult, n, "comult");
  Mat delta(f, n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Mat coeffs = parse_matrix(f, comult[i], n, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) delta(p * n + q, i) = coeffs(p, q);
  }
  const Json& counit = member(j, "counit");
  require_array(counit, n, "counit");
  Mat eps(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) eps(0, i) = parse_scalar(f, counit[i]);
  return BimonoidData{a, std::move(delta), std::move(eps)};
}

namespace {

Algebra algebra_ref(const Json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) return parse_algebra(load_file(base_dir / j.get<std::string>()));
  return parse_algebra(j);
}

}  // namespace

AlgMap parse_morphism(const Json& j, const std::filesystem::path& base_dir) {
  Algebra source = algebra_ref(member(j, "source"), base_dir);
  Algebra target = algebra_ref(member(j, "target"), base_dir);
  if (!(source.field() == target.field())) throw InvalidInput("morphism between algebras over different fields");
  Mat m = parse_matrix(source.field(), member(j, "matrix"), target.dim(), source.dim());
  return AlgMap({std::move(source), std::move(target), std::move(m)});
}

Mat parse_generators(const Field& f, const Json& j, std::size_t dim) {
  const Json& gens = member(j, "generators");
  if (!gens.is_array()) throw InvalidInput("generators must be an array");
  Mat out(f, dim, gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c) {
    require_array(gens[c], dim, "generator " + std::to_string(c));
    for (std::size_t r = 0; r < dim; ++r) out(r, c) = parse_scalar(f, gens[c][r]);
  }
  return out;
}

FirstOrderCalculus parse_calculus(const Json& j, const Algebra& a) {
  const Json& kind_j = member(j, "kind");
  if (!kind_j.is_string()) throw InvalidInput("calculus kind must be a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "zero") return zero_calculus(a);
  if (kind == "kahler") return kahler_calculus(a).calc;
  UniversalCalculus u = universal_calculus(a);
  if (kind == "universal") return u.calc;
  if (kind == "quotient") {
    Mat gens = parse_generators(a.field(), j, u.calc.dim());
    return quotient_calculus(u.calc, saturate(u.calc.omega(), gens)).calc;
  }
  throw InvalidInput("unknown calculus kind \"" + kind + "\"");
}

Json report_to_json(const Report& r) {
  Json out = Json::array();
  for (const auto& v : r.violations) out.push_back(Json{{"axiom", v.axiom}, {"witness", v.witness}});
  return out;
}

}  // namespace omega::io
