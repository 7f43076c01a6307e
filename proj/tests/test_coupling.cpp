#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "uhsl2/coupling.hpp"

using namespace uhsl2;

namespace {

const HalfInt h12 = half;
HalfInt hi(int twice) { return HalfInt::from_twice(twice); }

}  // namespace

TEST_CASE("extended binomial") {
  CHECK(binom_ext(3, 2) == Rational(3));
  CHECK(binom_ext(5, -1) == Rational(0));
  CHECK(binom_ext(-1, 2) == Rational(1));
  CHECK(binom_ext(-2, 3) == Rational(-4));
  CHECK_THROWS_AS(binom_ext(h12, HalfInt(1)), std::logic_error);
}

TEST_CASE("alpha coefficients") {
  CHECK(alpha(h12, h12, h12, h12, h12, -h12) == HPoly::monomial(RadScalar(Rational(-1, 2)), 1));
  CHECK(alpha(h12, h12, h12, h12, -h12, -h12) == HPoly::monomial(RadScalar(Rational(1, 4)), 2));
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (HalfInt m1 : weights(hi(a)))
        for (HalfInt m2 : weights(hi(b))) {
          CHECK(alpha(hi(a), hi(b), m1, m2, m1, m2) == HPoly(1));
          for (HalfInt k1 : weights(hi(a)))
            for (HalfInt k2 : weights(hi(b))) {
              const HPoly v = alpha(hi(a), hi(b), k1, k2, m1, m2);
              if (k1 < m1 || k2 < m2) CHECK(v.is_zero());
              if (!(k1 == m1 && k2 == m2)) CHECK(v.eval(0).is_zero());
              if (!v.is_zero()) CHECK(v.degree() == (k1 + k2 - m1 - m2).to_int());
            }
        }
  CHECK_THROWS_AS(alpha(h12, h12, hi(3), h12, h12, h12), std::domain_error);
  const AlphaTable& t = alpha_table(HalfInt(1), h12);
  CHECK(t(HalfInt(1), h12, HalfInt(0), -h12) == alpha(HalfInt(1), h12, HalfInt(1), h12, HalfInt(0), -h12));
}

TEST_CASE("sl(2) CGC against a lowering-operator oracle") {
  CHECK(sl2_cgc(h12, h12, HalfInt(1), h12, h12) == RadScalar(1));
  CHECK(sl2_cgc(h12, h12, HalfInt(0), h12, -h12) == RadScalar::normalize(Rational(1, 2), 2));
  CHECK(sl2_cgc(h12, h12, HalfInt(1), h12, h12 - HalfInt(1)).is_zero() == false);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      const auto table = oracle::cgc_table(a, b);
      for (const auto& [key, value] : table) {
        const auto [tj, tm, tm1, tm2] = key;
        const double exact = tm1 + tm2 == tm ? sl2_cgc(hi(a), hi(b), hi(tj), hi(tm1), hi(tm2)).to_double() : 0.0;
        INFO("j1=" << a << "/2 j2=" << b << "/2 j=" << tj << "/2 m1=" << tm1 << "/2 m2=" << tm2 << "/2");
        CHECK(exact == doctest::Approx(value).epsilon(1e-12));
      }
    }
}

TEST_CASE("U_h CGC") {
  // Σ_{n1+n2=0} C_{n1 n2} α_{1/2,1/2}^{n1,n2} = (√2/2)(-h/2) + (-√2/2)(h/2)
  CHECK(uh_cgc(h12, h12, HalfInt(0), h12, h12, HalfInt(0)) == HPoly::monomial(RadScalar::normalize(Rational(-1, 2), 2), 1));
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      const HalfInt j1 = hi(a), j2 = hi(b);
      CHECK(uh_cgc(j1, j2, j1 + j2, j1, j2, j1 + j2) == HPoly(1));
      for (const auto& [j, mult] : decompose(j1, j2))
        for (HalfInt m : weights(j))
          for (HalfInt k1 : weights(j1))
            for (HalfInt k2 : weights(j2)) {
              const RadScalar sl2 = k1 + k2 == m ? sl2_cgc(j1, j2, j, k1, k2) : RadScalar();
              CHECK(uh_cgc(j1, j2, j, k1, k2, m).eval(0) == sl2);
            }
    }
}

TEST_CASE("intermediate vectors") {
  const PolyVector top = intermediate_ket(HalfInt(1), h12, HalfInt(1), h12);
  int nonzero = 0;
  for (Index i = 0; i < top.size(); ++i) nonzero += !top(i).is_zero();
  CHECK(nonzero == 1);
  CHECK(top(product_index(HalfInt(1), h12, HalfInt(1), h12)) == HPoly(1));
  // Δ(H) on |(1/2 1/2)(1/2 1/2)> has eigenvalue 2.
  const Irrep a = irrep(h12);
  const PolyMatrix dh = coproduct(Generator::H, a.rep, a.rep);
  const PolyVector v = intermediate_ket(h12, h12, h12, h12);
  CHECK(exactly_equal(PolyVector(dh * v), PolyVector(v * HPoly(2))));
  const PolyVector low = intermediate_ket(h12, h12, -h12, -h12);
  CHECK(exactly_equal(eval_h(low, 0), eval_h(PolyVector(PolyVector::Unit(4, 3)), 0)));
}

TEST_CASE("decomposition is multiplicity free") {
  using P = std::vector<std::pair<HalfInt, int>>;
  CHECK(decompose(h12, h12) == P{{HalfInt(1), 1}, {HalfInt(0), 1}});
  CHECK(decompose(hi(3), HalfInt(0)) == P{{hi(3), 1}});
  CHECK(decompose(HalfInt(1), h12) == P{{hi(3), 1}, {h12, 1}});
}

TEST_CASE("coupling verifiers on small pairs") {
  for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 3}, std::pair{4, 4}}) {
    const HalfInt j1 = hi(a), j2 = hi(b);
    CHECK(verify_alpha_orthogonality(j1, j2).passed());
    CHECK(verify_intermediate_orthonormality(j1, j2).passed());
    CHECK(verify_intermediate_action(j1, j2).passed());
    CHECK(verify_coupled_basis(j1, j2).passed());
    CHECK(verify_cgc_classical_limit(j1, j2).passed());
  }
}

TEST_CASE("the (j1 - m2) reading of the intermediate action only survives j1 = j2") {
  auto note = [](HalfInt j1, HalfInt j2) {
    for (const auto& c : verify_intermediate_action(j1, j2).checks)
      if (c.status == CheckStatus::Skip) return c.detail;
    return std::string();
  };
  CHECK(note(HalfInt(1), HalfInt(1)).find("also holds") != std::string::npos);
  CHECK(note(h12, HalfInt(1)).find("does not hold") != std::string::npos);
}
