#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "omega/hopf.hpp"
#include "omega/report.hpp"

namespace omega::io {

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.
using Json = nlohmann::json;

Json load_file(const std::filesystem::path& path);

Field parse_field(const Json& j);
Json field_to_json(const Field& f);

/// Accepts canonical strings ("3", "-1/2") and JSON integers.
Scalar parse_scalar(const Field& f, const Json& j);
std::string scalar_string(const Field& f, const Scalar& s);

/// Rows of canonical scalar strings.
Json matrix_to_json(const Mat& m);
/// Columns of a matrix as a list of coordinate vectors.
Json columns_to_json(const Mat& m);
Mat parse_matrix(const Field& f, const Json& rows, std::size_t expected_rows, std::size_t expected_cols);

/// Raw structure constants; shape problems throw InvalidInput, axioms are not
/// checked.
AlgebraData parse_algebra_data(const Json& j);
Algebra parse_algebra(const Json& j);
Json algebra_to_json(const AlgebraData& a);

/// Comultiplication and counit if the file has them.
std::optional<BimonoidData> parse_bimonoid_data(const Json& j, const Algebra& a);

/// {"source": file or inline, "target": ..., "matrix": rows}; file names are
/// resolved against base_dir.
AlgMap parse_morphism(const Json& j, const std::filesystem::path& base_dir);

/// {"generators": [[coords], ...]} as columns of a dim-row matrix.
Mat parse_generators(const Field& f, const Json& j, std::size_t dim);

/// {"kind": "universal" | "zero" | "kahler" | "quotient", "generators": ...}.
/// Quotient generators are coordinates in the universal calculus and are
/// saturated to a sub-bimodule.
FirstOrderCalculus parse_calculus(const Json& j, const Algebra& a);

Json report_to_json(const Report& r);

}  // namespace omega::io
