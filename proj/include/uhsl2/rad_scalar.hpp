#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace uhsl2 {

using Integer = mpz_class;
using Rational = mpq_class;
using Radicand = std::uint64_t;

/// Exact element of the ring of finite sums q·√n with q rational and n squarefree.
///
/// Terms are kept sorted by radicand with no zero coefficients, so two values are
/// equal exactly when their term lists are equal. n = 1 is the rational part.
class RadScalar {
 public:
  using Term = std::pair<Radicand, Rational>;

  RadScalar() = default;
  RadScalar(int value);                // NOLINT
  RadScalar(long value);               // NOLINT
  RadScalar(const Rational& value);    // NOLINT
  RadScalar(const Integer& value);     // NOLINT

  /// q·√n brought to canonical form (square factors of n pulled into q).
  static RadScalar normalize(const Rational& q, Radicand n);
  /// √n for a natural n.
  static RadScalar sqrt(Radicand n) { return normalize(Rational(1), n); }
  /// √r for a non-negative rational r (e.g. √(3/4) = (1/2)√3).
  static RadScalar sqrt(const Rational& r);
  /// Builds from an arbitrary term list; canonicalizes.
  static RadScalar from_terms(const std::vector<Term>& raw);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }
  /// Single term q·√n (zero excluded); these are exactly the invertible values we divide by.
  bool is_monomial() const { return terms_.size() == 1; }
  /// Rational part (coefficient of √1).
  Rational rational_part() const;

  /// Inverse of a monomial q·√n, namely (1/(q·n))·√n. Throws std::domain_error otherwise.
  RadScalar inverse() const;

  double to_double() const;

  RadScalar operator-() const;
  RadScalar& operator+=(const RadScalar& o);
  RadScalar& operator-=(const RadScalar& o);
  RadScalar& operator*=(const RadScalar& o);
  /// Division by a monomial only.
  RadScalar& operator/=(const RadScalar& o) { return *this *= o.inverse(); }

  friend RadScalar operator+(RadScalar a, const RadScalar& b) { return a += b; }
  friend RadScalar operator-(RadScalar a, const RadScalar& b) { return a -= b; }
  friend RadScalar operator*(const RadScalar& a, const RadScalar& b);
  friend RadScalar operator/(RadScalar a, const RadScalar& b) { return a /= b; }
  friend bool operator==(const RadScalar& a, const RadScalar& b) { return a.terms_ == b.terms_; }

  /// Canonical text: "(3/4)*sqrt(2) + 1". Used by the CSV emitter.
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const RadScalar& v);

/// Product of integer powers of primes; used to build √ of factorial ratios without overflow.
class PrimePowers {
 public:
  PrimePowers& mul_integer(std::uint64_t n, int power = 1);
  PrimePowers& mul_factorial(std::uint64_t n, int power = 1);
  PrimePowers& mul(const PrimePowers& o, int power = 1);

  /// The rational value itself.
  Rational value() const;
  /// Its exact square root in canonical form.
  RadScalar sqrt() const;

 private:
  std::map<std::uint64_t, long> exponents_;
};

Integer factorial(unsigned long n);

namespace detail {
/// One term of the scalar grammar: rational, optional "*sqrt(n)", optional "*h^k" (sign excluded).
std::string format_term(const Rational& magnitude, Radicand radicand, int hpow);
}  // namespace detail

}  // namespace uhsl2
