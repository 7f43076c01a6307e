#include "uhsl2/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace uhsl2 {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "pretty") return Format::Pretty;
  throw std::invalid_argument("unknown format '" + s + "' (expected json, csv or pretty)");
}

namespace {

Json term_json(const Rational& q, Radicand n, int hpow) {
  return Json{{"num", q.get_num().get_str()},
              {"den", q.get_den().get_str()},
              {"radicand", std::to_string(n)},
              {"hpow", hpow}};
}

Integer parse_integer(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) throw std::invalid_argument(std::string("scalar term: missing string '") + key + "'");
  Integer out;
  if (out.set_str(j.at(key).get<std::string>(), 10) != 0)
    throw std::invalid_argument(std::string("scalar term: '") + key + "' is not an integer");
  return out;
}

template <typename Scalar, typename Parse>
Matrix<Scalar> matrix_from_json(const Json& j, Parse parse) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("data"))
    throw std::invalid_argument("matrix: expected {\"shape\", \"data\"}");
  const auto& shape = j.at("shape");
  if (!shape.is_array() || shape.size() != 2 || !shape[0].is_number_integer() || !shape[1].is_number_integer())
    throw std::invalid_argument("matrix: shape must be [rows, cols]");
  const long rows = shape[0].get<long>(), cols = shape[1].get<long>();
  const auto& data = j.at("data");
  if (rows < 0 || cols < 0 || !data.is_array() || static_cast<long>(data.size()) != rows * cols)
    throw std::invalid_argument("matrix: data length does not match shape");
  Matrix<Scalar> m(rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m(r, c) = parse(data[static_cast<std::size_t>(r * cols + c)]);
  return m;
}

template <typename Scalar>
std::string csv_of(const Matrix<Scalar>& m) {
  std::string out;
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += csv_field(m(r, c).str());
    }
    out += '\n';
  }
  return out;
}

template <typename Scalar>
std::string pretty_of(const Matrix<Scalar>& m) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()));
  std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 0);
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) {
      cells[r].push_back(m(r, c).str());
      width[c] = std::max(width[c], cells[r].back().size());
    }
  std::string out;
  for (Index r = 0; r < m.rows(); ++r) {
    out += "[ ";
    for (Index c = 0; c < m.cols(); ++c) {
      if (c) out += "  ";
      out += std::string(width[c] - cells[r][c].size(), ' ') + cells[r][c];
    }
    out += " ]\n";
  }
  return out;
}

}  // namespace

Json to_json(const RadScalar& v) {
  Json out = Json::array();
  for (const auto& [n, q] : v.terms()) out.push_back(term_json(q, n, 0));
  return out;
}

Json to_json(const HPoly& p) {
  Json out = Json::array();
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    for (const auto& [n, q] : p.coeffs()[k].terms()) out.push_back(term_json(q, n, static_cast<int>(k)));
  return out;
}

HPoly hpoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("scalar: expected an array of terms");
  HPoly out;
  for (const auto& t : j) {
    if (!t.is_object()) throw std::invalid_argument("scalar term: expected an object");
    const Integer num = parse_integer(t, "num"), den = parse_integer(t, "den"), rad = parse_integer(t, "radicand");
    if (den == 0) throw std::invalid_argument("scalar term: zero denominator");
    if (rad < 1 || !rad.fits_ulong_p()) throw std::invalid_argument("scalar term: radicand out of range");
    if (!t.contains("hpow") || !t.at("hpow").is_number_integer() || t.at("hpow").get<int>() < 0)
      throw std::invalid_argument("scalar term: hpow must be a non-negative integer");
    Rational q(num, den);
    q.canonicalize();
    out += HPoly::monomial(RadScalar::normalize(q, rad.get_ui()), t.at("hpow").get<int>());
  }
  return out;
}

RadScalar rad_scalar_from_json(const Json& j) {
  const HPoly p = hpoly_from_json(j);
  if (p.degree() > 0) throw std::invalid_argument("scalar: unexpected power of h");
  return p.coeff(0);
}

PolyMatrix poly_matrix_from_json(const Json& j) { return matrix_from_json<HPoly>(j, hpoly_from_json); }
RadMatrix rad_matrix_from_json(const Json& j) { return matrix_from_json<RadScalar>(j, rad_scalar_from_json); }

std::string to_csv(const PolyMatrix& m) { return csv_of(m); }
std::string to_csv(const RadMatrix& m) { return csv_of(m); }
std::string to_pretty(const PolyMatrix& m) { return pretty_of(m); }
std::string to_pretty(const RadMatrix& m) { return pretty_of(m); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json to_json(const VerificationReport& r, bool with_timing) {
  std::size_t pass = 0, skip = 0;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    pass += c.status == CheckStatus::Pass;
    skip += c.status == CheckStatus::Skip;
    checks.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  Json out{{"suite", r.suite},
           {"passed", r.passed()},
           {"counts", {{"pass", pass}, {"fail", r.failures()}, {"skip", skip}}}};
  if (with_timing) out["seconds"] = r.seconds;
  out["checks"] = std::move(checks);
  return out;
}

std::string to_csv(const VerificationReport& r) {
  std::string out = "suite,status,name,detail\n";
  for (const auto& c : r.checks)
    out += csv_field(r.suite) + ',' + to_string(c.status) + ',' + csv_field(c.name) + ',' + csv_field(c.detail) + '\n';
  return out;
}

std::string to_pretty(const VerificationReport& r) {
  std::ostringstream os;
  std::size_t skips = 0;
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::Skip) ++skips;
    std::string tag = to_string(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    os << tag << "  " << c.name;
    if (c.status != CheckStatus::Pass || c.detail != "exact zero") os << "  [" << c.detail << "]";
    os << '\n';
  }
  os << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks.size() - r.failures() - skips
     << " passed, " << r.failures() << " failed, " << skips << " notes";
  os << ", " << r.seconds << " s)\n";
  return os.str();
}

}  // namespace uhsl2
