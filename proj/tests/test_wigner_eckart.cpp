#include <doctest.h>

#include "uhsl2/coupling.hpp"
#include "uhsl2/wigner_eckart.hpp"

using namespace uhsl2;

namespace {

HalfInt hi(int twice) { return HalfInt::from_twice(twice); }

const Sector& only(const TensorOpFamily& fam, bool target) {
  return (target ? fam.context.target : fam.context.source)->sectors.front();
}

}  // namespace

TEST_CASE("identity operator has delta matrix elements and one reduced value") {
  for (int t = 0; t <= 4; ++t) {
    const TensorOpFamily fam = invariant_identity(hi(t));
    const Sector& s = only(fam, false);
    for (HalfInt m : weights(s.j))
      for (HalfInt mp : weights(s.j)) CHECK(matrix_element(fam, s, m, 0, s, mp) == HPoly(m == mp ? 1 : 0));
    const ReducedMatrixElement red = reduced_matrix_element(fam, s, s);
    CHECK(red.outcome == ReducedOutcome::Value);
    CHECK(red.channels == t + 1);
    CHECK(red.value == HPoly(1));  // C^{0 j j}_{0 m m} = 1
  }
}

TEST_CASE("fermion matrix elements") {
  const FermionRealization f = fermion_realization();
  const Sector& doublet = f.fock->sectors[0];
  const Sector& first_singlet = f.fock->sectors[1];  // a1†|0>
  // (-a2 + h(N2 - 1)a1†)|0> = -h a1†|0>
  CHECK(matrix_element(f.first, first_singlet, 0, -half, doublet, -half) == HPoly::monomial(RadScalar(-1), 1));
  CHECK(matrix_element(f.first, first_singlet, 0, half, doublet, -half) == HPoly(-1));
  CHECK_THROWS_AS(matrix_element(f.first, first_singlet, half, half, doublet, half), std::domain_error);

  for (const auto* fam : {&f.first, &f.second}) {
    for (const auto& s : f.fock->sectors) {
      CHECK(verify_sector(*f.fock, s).passed());
      CHECK(verify_phi_recurrence(*fam, s).passed());
      for (const auto& t : f.fock->sectors) {
        const auto r = verify_wigner_eckart(*fam, s, t);
        INFO(r.suite);
        CHECK(r.passed());
      }
    }
  }
  const ReducedMatrixElement forbidden = reduced_matrix_element(f.first, doublet, doublet);
  CHECK(forbidden.outcome == ReducedOutcome::SelectionRuleForbidden);
  CHECK(reduced_matrix_element(f.first, doublet, first_singlet).value == HPoly(RadScalar::normalize(-1, 2)));
}

TEST_CASE("off-channel matrix elements follow the bra CGC, not zero") {
  // m != m1 + m2 but the deformed bra coefficient is nonzero; both sides agree.
  const FermionRealization f = fermion_realization();
  const Sector& doublet = f.fock->sectors[0];
  const Sector& singlet = f.fock->sectors[1];
  const ReducedMatrixElement red = reduced_matrix_element(f.first, doublet, singlet);
  const HPoly lhs = matrix_element(f.first, singlet, 0, -half, doublet, -half);
  CHECK_FALSE(lhs.is_zero());
  CHECK(lhs == red.value * uh_cgc_bra(half, half, 0, -half, -half, 0));
}

TEST_CASE("phi vectors") {
  const TensorOpFamily fam = rank1_generators(1);
  const Sector& s = only(fam, false);
  CHECK(verify_phi_recurrence(fam, s).passed());
  const PhiVector top = phi_vector(fam, s, 1, 1);
  CHECK(is_zero(PolyVector(fam.context.target->rep.zp * top.vector)));
  // At h = 0 the φ vector is t_{m1}|j2 m2>.
  const PhiVector mid = phi_vector(fam, s, 0, -1);
  CHECK(exactly_equal(eval_h(mid.vector, 0), eval_h(PolyVector(fam.component(0).col(2)), 0)));
  CHECK_THROWS_AS(phi_vector(fam, s, 2, 0), std::domain_error);
}

TEST_CASE("boson raising from W^(1/2) to W^(1): every channel agrees") {
  const TensorOpFamily fam = boson_raising(half);
  const ReducedMatrixElement red = reduced_matrix_element(fam, only(fam, false), only(fam, true));
  CHECK(red.outcome == ReducedOutcome::Value);
  CHECK(red.channels == 4);
  CHECK(red.value == HPoly(RadScalar::sqrt(2)));
  CHECK(classical_reduced_matrix_element(fam, only(fam, false), only(fam, true)) == RadScalar::sqrt(2));
}

TEST_CASE("Wigner-Eckart for every family up to j = 2") {
  for (int t = 0; t <= 4; ++t) {
    const HalfInt j = hi(t);
    for (const TensorOpFamily& fam : {boson_raising(j), rank1_generators(j), invariant_identity(j)}) {
      const auto r = verify_wigner_eckart_family(fam, 3);
      INFO(r.suite);
      CHECK(r.passed());
    }
    if (t > 0) CHECK(verify_wigner_eckart_family(boson_lowering(j), 3).passed());
  }
}

TEST_CASE("admissible cases") {
  const FermionRealization f = fermion_realization();
  const auto cases = wigner_eckart_cases(f.first, 2);
  CHECK(cases.size() == 9);
  int allowed = 0;
  for (const auto& c : cases) allowed += c.allowed;
  CHECK(allowed == 4);
  CHECK(wigner_eckart_cases(boson_raising(2), 2).empty());
  CHECK(to_string(ReducedOutcome::ChannelMismatch) == "channel-mismatch");
}
