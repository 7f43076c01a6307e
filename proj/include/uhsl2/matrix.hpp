#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "uhsl2/hpoly.hpp"
#include "uhsl2/rad_scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<uhsl2::RadScalar> : GenericNumTraits<uhsl2::RadScalar> {
  using Real = uhsl2::RadScalar;
  using NonInteger = uhsl2::RadScalar;
  using Nested = uhsl2::RadScalar;
  using Literal = uhsl2::RadScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 40
  };
};

template <>
struct NumTraits<uhsl2::HPoly> : GenericNumTraits<uhsl2::HPoly> {
  using Real = uhsl2::HPoly;
  using NonInteger = uhsl2::HPoly;
  using Nested = uhsl2::HPoly;
  using Literal = uhsl2::HPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 40,
    MulCost = 200
  };
};

}  // namespace Eigen

namespace uhsl2 {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using PolyMatrix = Matrix<HPoly>;
using PolyVector = Vector<HPoly>;
using PolyRowVector = RowVector<HPoly>;
using RadMatrix = Matrix<RadScalar>;
using RadVector = Vector<RadScalar>;

using Index = Eigen::Index;

/// Thrown when operand shapes are incompatible; the message names both shapes.
class DimensionError : public std::invalid_argument {
 public:
  DimensionError(const std::string& op, Index r1, Index c1, Index r2, Index c2)
      : std::invalid_argument(op + ": incompatible shapes " + std::to_string(r1) + "x" +
                              std::to_string(c1) + " and " + std::to_string(r2) + "x" +
                              std::to_string(c2)) {}
};

template <typename Scalar>
Matrix<Scalar> identity(Index n) {
  return Matrix<Scalar>::Identity(n, n);
}

template <typename Scalar>
Matrix<Scalar> zeros(Index rows, Index cols) {
  return Matrix<Scalar>::Zero(rows, cols);
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r)
      if (!m.coeff(r, c).is_zero()) return false;
  return true;
}

template <typename DA, typename DB>
bool exactly_equal(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index c = 0; c < a.cols(); ++c)
    for (Index r = 0; r < a.rows(); ++r)
      if (!(a.coeff(r, c) == b.coeff(r, c))) return false;
  return true;
}

/// Checked product; Eigen only asserts shapes in debug builds.
template <typename Scalar>
Matrix<Scalar> mul(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.cols() != b.rows()) throw DimensionError("mul", a.rows(), a.cols(), b.rows(), b.cols());
  return a * b;
}

template <typename Scalar>
Matrix<Scalar> add(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("add", a.rows(), a.cols(), b.rows(), b.cols());
  return a + b;
}

template <typename Scalar>
Matrix<Scalar> sub(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("sub", a.rows(), a.cols(), b.rows(), b.cols());
  return a - b;
}

/// [a, b] = ab - ba.
template <typename Scalar>
Matrix<Scalar> commutator(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionError("commutator", a.rows(), a.cols(), b.rows(), b.cols());
  Matrix<Scalar> out = a * b;
  out.noalias() -= b * a;
  return out;
}

/// Kronecker product; row index of a is the slow index.
template <typename Scalar>
Matrix<Scalar> kron(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k)
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
  return out;
}

template <typename Scalar>
Matrix<Scalar> power(const Matrix<Scalar>& a, int n) {
  if (a.rows() != a.cols()) throw DimensionError("power", a.rows(), a.cols(), a.rows(), a.cols());
  Matrix<Scalar> out = identity<Scalar>(a.rows());
  for (int i = 0; i < n; ++i) out = out * a;
  return out;
}

template <typename Derived>
PolyMatrix to_poly(const Eigen::MatrixBase<Derived>& m) {
  return m.unaryExpr([](const RadScalar& x) { return HPoly(x); });
}

/// Entrywise substitution h = value.
template <typename Derived>
RadMatrix eval_h(const Eigen::MatrixBase<Derived>& m, const Rational& value) {
  return m.unaryExpr([&](const HPoly& p) { return p.eval(value); });
}

/// Entrywise p / h^k; throws if any entry is not divisible.
template <typename Derived>
PolyMatrix divide_by_h(const Eigen::MatrixBase<Derived>& m, int k) {
  return m.unaryExpr([k](const HPoly& p) { return p.divide_by_h(k); });
}

/// Entrywise h -> factor·h.
template <typename Derived>
PolyMatrix rescale_h(const Eigen::MatrixBase<Derived>& m, const Rational& factor) {
  return m.unaryExpr([&](const HPoly& p) { return p.rescale_h(factor); });
}

/// Terminating sum of coefficient(n)·a^n over n >= 0 for nilpotent a.
/// Throws if a^dim is not zero, which would make the truncation inexact.
template <typename Scalar, typename CoeffFn>
Matrix<Scalar> nilpotent_series(const Matrix<Scalar>& a, CoeffFn coefficient) {
  const Index n = a.rows();
  if (a.cols() != n) throw DimensionError("nilpotent_series", a.rows(), a.cols(), n, n);
  Matrix<Scalar> out = zeros<Scalar>(n, n);
  Matrix<Scalar> term = identity<Scalar>(n);
  for (int k = 0; k <= n; ++k) {
    if (is_zero(term)) return out;
    Scalar c = coefficient(k);
    if (!c.is_zero()) out += c * term;
    term = term * a;
  }
  if (!is_zero(term)) throw std::domain_error("nilpotent_series: matrix is not nilpotent");
  return out;
}

/// exp(a) for nilpotent a.
template <typename Scalar>
Matrix<Scalar> nilpotent_exp(const Matrix<Scalar>& a) {
  Rational inv_fact = 1;
  return nilpotent_series(a, [&](int k) {
    if (k > 0) inv_fact /= k;
    return Scalar(inv_fact);
  });
}

/// (1 - a)^{-1} = 1 + a + a^2 + ... for nilpotent a.
template <typename Scalar>
Matrix<Scalar> neumann_inverse(const Matrix<Scalar>& a) {
  return nilpotent_series(a, [](int) { return Scalar(1); });
}

/// Description of the first nonzero entry, or nullopt when m is exactly zero.
template <typename Derived>
std::optional<std::string> first_nonzero(const Eigen::MatrixBase<Derived>& m) {
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (!m.coeff(r, c).is_zero()) {
        std::ostringstream os;
        os << "entry (" << r << "," << c << ") = " << m.coeff(r, c).str();
        return os.str();
      }
  return std::nullopt;
}

/// Largest h-degree among the entries; -1 for the zero matrix.
template <typename Derived>
int max_degree(const Eigen::MatrixBase<Derived>& m) {
  int d = -1;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) d = std::max(d, m.coeff(r, c).degree());
  return d;
}

inline std::string shape_string(Index rows, Index cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

}  // namespace uhsl2
