#include "uhsl2/rad_scalar.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uhsl2 {

namespace {

Radicand to_radicand(const Integer& n) {
  if (n < 0 || !n.fits_ulong_p())
    throw std::overflow_error("radicand " + n.get_str() + " exceeds 64 bits");
  return static_cast<Radicand>(n.get_ui());
}

// n = root^2 * squarefree.
std::pair<Integer, Integer> squarefree_split(Integer n) {
  Integer root = 1;
  Integer sqfree = 1;
  for (Integer d = 2; d * d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= d;
    if (e % 2) sqfree *= d;
  }
  // At most two prime factors remain, each above the cube root of what is left.
  if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    root *= r;
  } else {
    sqfree *= n;
  }
  return {root, sqfree};
}

Radicand checked_product(Radicand a, Radicand b) {
  Radicand out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("radicand product overflows 64 bits");
  return out;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "(" + q.get_num().get_str() + "/" + q.get_den().get_str() + ")";
}

}  // namespace

namespace detail {

std::string format_term(const Rational& magnitude, Radicand radicand, int hpow) {
  std::string out = format_rational(magnitude);
  if (radicand != 1) out += "*sqrt(" + std::to_string(radicand) + ")";
  if (hpow == 1) out += "*h";
  if (hpow > 1) out += "*h^" + std::to_string(hpow);
  return out;
}

}  // namespace detail

RadScalar::RadScalar(int value) : RadScalar(Rational(value)) {}
RadScalar::RadScalar(long value) : RadScalar(Rational(value)) {}
RadScalar::RadScalar(const Integer& value) : RadScalar(Rational(value)) {}
RadScalar::RadScalar(const Rational& value) {
  if (value != 0) terms_.emplace_back(1, value);
}

RadScalar RadScalar::normalize(const Rational& q, Radicand n) {
  RadScalar out;
  if (q == 0 || n == 0) return out;
  auto [root, sqfree] = squarefree_split(Integer(static_cast<unsigned long>(n)));
  Rational coef = q * Rational(root);
  coef.canonicalize();
  out.terms_.emplace_back(to_radicand(sqfree), coef);
  return out;
}

RadScalar RadScalar::sqrt(const Rational& r) {
  if (r < 0) throw std::domain_error("square root of negative rational " + r.get_str());
  if (r == 0) return {};
  auto [a, s] = squarefree_split(r.get_num());
  auto [b, t] = squarefree_split(r.get_den());
  // √(a²s / b²t) = a/(b·t) · √(s·t); s and t are coprime since r is reduced.
  Rational coef(a, b * t);
  coef.canonicalize();
  RadScalar out;
  out.terms_.emplace_back(to_radicand(s * t), coef);
  return out;
}

RadScalar RadScalar::from_terms(const std::vector<Term>& raw) {
  RadScalar out;
  for (const auto& [n, q] : raw) out += normalize(q, n);
  return out;
}

Rational RadScalar::rational_part() const {
  if (!terms_.empty() && terms_[0].first == 1) return terms_[0].second;
  return Rational(0);
}

RadScalar RadScalar::inverse() const {
  if (!is_monomial()) throw std::domain_error("cannot invert non-monomial scalar " + str());
  const auto& [n, q] = terms_[0];
  Rational coef = 1 / (q * Rational(static_cast<unsigned long>(n)));
  RadScalar out;
  out.terms_.emplace_back(n, coef);
  return out;
}

double RadScalar::to_double() const {
  double sum = 0.0;
  for (const auto& [n, q] : terms_) sum += q.get_d() * std::sqrt(static_cast<double>(n));
  return sum;
}

RadScalar RadScalar::operator-() const {
  RadScalar out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

RadScalar& RadScalar::operator+=(const RadScalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational sum = a->second + b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

RadScalar& RadScalar::operator-=(const RadScalar& o) { return *this += -o; }

RadScalar operator*(const RadScalar& a, const RadScalar& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.is_rational() && b.is_rational()) return RadScalar(a.terms_[0].second * b.terms_[0].second);
  std::map<Radicand, Rational> acc;
  for (const auto& [na, qa] : a.terms_) {
    for (const auto& [nb, qb] : b.terms_) {
      // √a·√b = g·√((a/g)(b/g)) with g = gcd(a, b); the cofactor stays squarefree.
      Radicand g = std::gcd(na, nb);
      Radicand n = checked_product(na / g, nb / g);
      acc[n] += qa * qb * Rational(static_cast<unsigned long>(g));
    }
  }
  RadScalar out;
  for (auto& [n, q] : acc)
    if (q != 0) out.terms_.emplace_back(n, std::move(q));
  return out;
}

RadScalar& RadScalar::operator*=(const RadScalar& o) { return *this = *this * o; }

std::string RadScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [n, q] : terms_) {
    if (first) {
      out += q < 0 ? "-" : "";
    } else {
      out += q < 0 ? " - " : " + ";
    }
    out += detail::format_term(abs(q), n, 0);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RadScalar& v) { return os << v.str(); }

PrimePowers& PrimePowers::mul_integer(std::uint64_t n, int power) {
  if (n == 0) throw std::domain_error("PrimePowers cannot hold zero");
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      exponents_[d] += power;
      n /= d;
    }
  }
  if (n > 1) exponents_[n] += power;
  return *this;
}

PrimePowers& PrimePowers::mul_factorial(std::uint64_t n, int power) {
  for (std::uint64_t k = 2; k <= n; ++k) mul_integer(k, power);
  return *this;
}

PrimePowers& PrimePowers::mul(const PrimePowers& o, int power) {
  for (const auto& [p, e] : o.exponents_) exponents_[p] += power * e;
  return *this;
}

Rational PrimePowers::value() const {
  Integer num = 1, den = 1;
  for (const auto& [p, e] : exponents_) {
    Integer pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -e : e));
    (e < 0 ? den : num) *= pp;
  }
  return Rational(num, den);
}

RadScalar PrimePowers::sqrt() const {
  Integer num = 1, den = 1;
  Radicand radicand = 1;
  for (const auto& [p, e] : exponents_) {
    if (e == 0) continue;
    // p^(e/2) = p^floor(e/2) · √p^(e mod 2), also for negative e.
    long whole = e >= 0 ? e / 2 : -((-e + 1) / 2);
    if (e % 2 != 0) radicand = checked_product(radicand, p);
    Integer pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), p, static_cast<unsigned long>(whole < 0 ? -whole : whole));
    (whole < 0 ? den : num) *= pp;
  }
  Rational coef(num, den);
  coef.canonicalize();
  return RadScalar::from_terms({{radicand, coef}});
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace uhsl2
