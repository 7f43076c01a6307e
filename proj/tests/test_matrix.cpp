#include <doctest.h>

#include <random>

#include "uhsl2/matrix.hpp"

using namespace uhsl2;

namespace {

PolyMatrix random_matrix(std::mt19937& rng, Index r, Index c) {
  std::uniform_int_distribution<int> v(-3, 3), rad(1, 6), pw(0, 2);
  PolyMatrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index k = 0; k < c; ++k) m(i, k) = HPoly::monomial(RadScalar::normalize(v(rng), static_cast<Radicand>(rad(rng))), pw(rng));
  return m;
}

PolyMatrix superdiagonal(Index n) {
  PolyMatrix m = zeros<HPoly>(n, n);
  for (Index i = 0; i + 1 < n; ++i) m(i, i + 1) = HPoly(RadScalar::sqrt(static_cast<Radicand>(i + 1)));
  return m;
}

}  // namespace

TEST_CASE("Kronecker products satisfy the mixed-product rule") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const PolyMatrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 2);
    const PolyMatrix c = random_matrix(rng, 3, 2), d = random_matrix(rng, 2, 3);
    CHECK(exactly_equal(PolyMatrix(kron(a, b) * kron(c, d)), kron(PolyMatrix(a * c), PolyMatrix(b * d))));
  }
  CHECK(exactly_equal(kron(identity<HPoly>(2), identity<HPoly>(3)), identity<HPoly>(6)));
}

TEST_CASE("commutator of a matrix with itself vanishes") {
  std::mt19937 rng(5);
  const PolyMatrix a = random_matrix(rng, 3, 3);
  CHECK(is_zero(commutator(a, a)));
}

TEST_CASE("checked operations report incompatible shapes") {
  const PolyMatrix a = zeros<HPoly>(2, 3), b = zeros<HPoly>(2, 3);
  CHECK_THROWS_AS(mul(a, b), DimensionError);
  CHECK_NOTHROW(add(a, b));
  CHECK_THROWS_AS(sub(a, zeros<HPoly>(3, 2)), DimensionError);
  CHECK_THROWS_AS(commutator(a, a), DimensionError);
}

TEST_CASE("nilpotent exponential and inverse terminate") {
  const PolyMatrix n = superdiagonal(4) * HPoly::h();
  const PolyMatrix e = nilpotent_exp(n);
  const PolyMatrix em = nilpotent_exp(PolyMatrix(-n));
  CHECK(exactly_equal(PolyMatrix(e * em), identity<HPoly>(4)));
  const PolyMatrix inv = neumann_inverse(n);  // (1 - n)^{-1}
  CHECK(exactly_equal(PolyMatrix((identity<HPoly>(4) - n) * inv), identity<HPoly>(4)));
  PolyMatrix full = identity<HPoly>(2);
  CHECK_THROWS(nilpotent_exp(full));
}

TEST_CASE("j = 1/2 exponential difference divides by h") {
  PolyMatrix x = zeros<HPoly>(2, 2);
  x(0, 1) = 1;
  const PolyMatrix hx = x * HPoly::h();
  const PolyMatrix diff = nilpotent_exp(hx) - nilpotent_exp(PolyMatrix(-hx));
  CHECK(exactly_equal(divide_by_h(diff, 1), PolyMatrix(x * HPoly(2))));
}

TEST_CASE("evaluation and residual helpers") {
  PolyMatrix m = zeros<HPoly>(2, 2);
  m(1, 0) = HPoly(1) + HPoly::monomial(RadScalar(3), 2);
  CHECK(eval_h(m, 1)(1, 0) == RadScalar(4));
  CHECK(eval_h(m, 0)(1, 0) == RadScalar(1));
  CHECK(max_degree(m) == 2);
  CHECK(first_nonzero(m).has_value());
  CHECK_FALSE(first_nonzero(zeros<HPoly>(2, 2)).has_value());
  CHECK(rescale_h(m, 2)(1, 0) == HPoly(1) + HPoly::monomial(RadScalar(12), 2));
}
