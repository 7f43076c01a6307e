#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "uhsl2/rad_scalar.hpp"

namespace uhsl2 {

/// Polynomial in the deformation parameter h with RadScalar coefficients.
///
/// coeffs()[k] multiplies h^k; trailing zeros are trimmed so the zero polynomial
/// has no coefficients and structural equality is exact equality.
class HPoly {
 public:
  HPoly() = default;
  HPoly(int value) : HPoly(RadScalar(value)) {}  // NOLINT
  HPoly(const Rational& value) : HPoly(RadScalar(value)) {}  // NOLINT
  HPoly(const RadScalar& value);  // NOLINT
  explicit HPoly(std::vector<RadScalar> coeffs);

  /// c·h^k.
  static HPoly monomial(const RadScalar& c, int k);
  /// The parameter h itself.
  static HPoly h() { return monomial(RadScalar(1), 1); }

  const std::vector<RadScalar>& coeffs() const { return coeffs_; }
  /// Degree in h; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest power with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const;
  RadScalar coeff(int k) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Single nonzero term c·h^k with c a radical monomial.
  bool is_monomial() const;

  /// p / h^k. Throws std::domain_error("not divisible by h^k") if a low coefficient is nonzero.
  HPoly divide_by_h(int k) const;
  /// Substitute h = value.
  RadScalar eval(const Rational& value) const;
  /// Substitute h -> factor·h (e.g. factor 1/2 for half-parameter series).
  HPoly rescale_h(const Rational& factor) const;

  HPoly operator-() const;
  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  HPoly& operator*=(const HPoly& o);
  HPoly& operator*=(const RadScalar& c);
  /// Division by an invertible scalar: a monomial in h times a radical monomial, dividing exactly.
  HPoly& operator/=(const HPoly& o);

  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  friend HPoly operator/(HPoly a, const HPoly& b) { return a /= b; }
  friend bool operator==(const HPoly& a, const HPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Canonical text "(3/4)*sqrt(2)*h^2 - 1", ascending powers of h.
  std::string str() const;

 private:
  void trim();
  std::vector<RadScalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const HPoly& p);

}  // namespace uhsl2
