#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "uhsl2/hpoly.hpp"
#include "uhsl2/matrix.hpp"
#include "uhsl2/report.hpp"

namespace uhsl2 {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Pretty };
/// "json", "csv" or "pretty"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& s);

// A scalar is an array of terms {"num", "den", "radicand", "hpow"}: the value num/den·√radicand·h^hpow.
// num, den and radicand are decimal strings so big integers survive any JSON reader.

Json to_json(const RadScalar& v);
Json to_json(const HPoly& p);
/// Throws std::invalid_argument on malformed input.
HPoly hpoly_from_json(const Json& j);
/// As hpoly_from_json but rejects any h power.
RadScalar rad_scalar_from_json(const Json& j);

/// {"shape": [rows, cols], "data": [row-major scalars]}.
template <typename Scalar>
Json to_json(const Matrix<Scalar>& m) {
  Json data = Json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) data.push_back(to_json(m(r, c)));
  return Json{{"shape", {m.rows(), m.cols()}}, {"data", std::move(data)}};
}

PolyMatrix poly_matrix_from_json(const Json& j);
RadMatrix rad_matrix_from_json(const Json& j);

/// One CSV row per matrix row, entries in the canonical scalar grammar.
std::string to_csv(const PolyMatrix& m);
std::string to_csv(const RadMatrix& m);
/// Bracketed rows with right-aligned columns.
std::string to_pretty(const PolyMatrix& m);
std::string to_pretty(const RadMatrix& m);

/// Deterministic: checks in insertion order; timing only when with_timing is set.
Json to_json(const VerificationReport& r, bool with_timing = true);
std::string to_csv(const VerificationReport& r);
std::string to_pretty(const VerificationReport& r);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace uhsl2
