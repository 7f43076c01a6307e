#include "uhsl2/hpoly.hpp"

#include <stdexcept>

namespace uhsl2 {

HPoly::HPoly(const RadScalar& value) {
  if (!value.is_zero()) coeffs_.push_back(value);
}

HPoly::HPoly(std::vector<RadScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

HPoly HPoly::monomial(const RadScalar& c, int k) {
  if (k < 0) throw std::domain_error("negative power of h");
  HPoly out;
  if (c.is_zero()) return out;
  out.coeffs_.assign(static_cast<std::size_t>(k) + 1, RadScalar());
  out.coeffs_.back() = c;
  return out;
}

void HPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int HPoly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return static_cast<int>(k);
  return -1;
}

RadScalar HPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

bool HPoly::is_monomial() const {
  int v = valuation();
  return v >= 0 && v == degree() && coeffs_.back().is_monomial();
}

HPoly HPoly::divide_by_h(int k) const {
  if (k < 0) throw std::domain_error("negative power of h");
  for (int i = 0; i < k && i < static_cast<int>(coeffs_.size()); ++i)
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero())
      throw std::domain_error("not divisible by h^" + std::to_string(k) + ": " + str());
  if (static_cast<int>(coeffs_.size()) <= k) return {};
  return HPoly(std::vector<RadScalar>(coeffs_.begin() + k, coeffs_.end()));
}

RadScalar HPoly::eval(const Rational& value) const {
  RadScalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= RadScalar(value);
    acc += *it;
  }
  return acc;
}

HPoly HPoly::rescale_h(const Rational& factor) const {
  HPoly out = *this;
  Rational power = 1;
  for (auto& c : out.coeffs_) {
    c *= RadScalar(power);
    power *= factor;
  }
  out.trim();
  return out;
}

HPoly HPoly::operator-() const {
  HPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

HPoly& HPoly::operator+=(const HPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RadScalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
      if (b.coeffs_[k].is_zero()) continue;
      out[i + k] += a.coeffs_[i] * b.coeffs_[k];
    }
  }
  return HPoly(std::move(out));
}

HPoly& HPoly::operator*=(const HPoly& o) { return *this = *this * o; }

HPoly& HPoly::operator*=(const RadScalar& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

HPoly& HPoly::operator/=(const HPoly& o) {
  if (!o.is_monomial()) throw std::domain_error("cannot divide by non-monomial " + o.str());
  int k = o.valuation();
  *this = divide_by_h(k);
  return *this *= o.coeffs_.back().inverse();
}

std::string HPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    for (const auto& [n, q] : coeffs_[k].terms()) {
      if (first) {
        out += q < 0 ? "-" : "";
      } else {
        out += q < 0 ? " - " : " + ";
      }
      out += detail::format_term(abs(q), n, static_cast<int>(k));
      first = false;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const HPoly& p) { return os << p.str(); }

}  // namespace uhsl2
