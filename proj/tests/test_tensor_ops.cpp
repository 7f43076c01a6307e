#include <doctest.h>

#include <random>

#include "uhsl2/tensor_ops.hpp"

using namespace uhsl2;

namespace {

HalfInt hi(int twice) { return HalfInt::from_twice(twice); }

PolyVector ket(HalfInt j, HalfInt m) {
  PolyVector v = PolyVector::Zero(static_cast<Index>(dimension(j)));
  v(static_cast<Index>(weight_index(j, m))) = 1;
  return v;
}

}  // namespace

TEST_CASE("adjoint action of X is the commutator and the unit acts trivially") {
  const SpacePtr w = irrep_space(1);
  const OpSpaceContext ctx{w, w};
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-2, 2);
  PolyMatrix t(3, 3);
  for (Index r = 0; r < 3; ++r)
    for (Index c = 0; c < 3; ++c) t(r, c) = HPoly(d(rng)) + HPoly::monomial(RadScalar(d(rng)), 1);
  CHECK(exactly_equal(adjoint_action(Generator::X, t, ctx), commutator(w->rep.x, t)));
  CHECK(exactly_equal(adjoint_action(Generator::Unit, t, ctx), t));
  for (Generator g : {Generator::X, Generator::Y, Generator::H})
    CHECK(exactly_equal(adjoint_action(g, t, ctx), adjoint_action_closed_form(g, t, ctx)));
  // h = 0: the classical commutators
  CHECK(exactly_equal(eval_h(adjoint_action(Generator::Y, t, ctx), 0),
                      eval_h(commutator(w->rep.y, t), 0)));
  CHECK(verify_adjoint_is_representation(ctx, {t, w->rep.h, identity<HPoly>(3)}, "W^(1)").passed());
  CHECK(is_zero(adjoint_action(Generator::Y, identity<HPoly>(3), ctx)));
}

TEST_CASE("fermion realization") {
  const FermionRealization f = fermion_realization();
  CHECK(f.fock->dim() == 4);
  CHECK(is_zero(PolyMatrix(f.fock->rep.x * f.fock->rep.x)));
  CHECK(verify_fermion_realization(f).passed());
  for (const auto* fam : {&f.first, &f.second}) {
    CHECK(verify_tensor_operator(*fam).passed());
    CHECK(verify_classical_tensor_operator(*fam).passed());
  }
  CHECK(exactly_equal(f.first.component(half), PolyMatrix(-f.a1_dag)));
  CHECK(exactly_equal(eval_h(f.first.component(-half), 0), eval_h(PolyMatrix(-f.a2), 0)));
  CHECK(verify_adjoint_is_representation(f.first.context, {f.a1_dag}, "a1†").passed());
}

TEST_CASE("ad H scales each component by 2m") {
  const TensorOpFamily fam = rank1_generators(hi(3));
  const auto& ctx = fam.context;
  for (HalfInt m : weights(fam.rank))
    CHECK(exactly_equal(adjoint_action(Generator::H, fam.component(m), ctx),
                        PolyMatrix(fam.component(m) * HPoly(m.twice()))));
  CHECK(is_zero(adjoint_action(Generator::H, fam.component(0), ctx)));
}

TEST_CASE("boson ladder operators") {
  for (int t = 0; t <= 5; ++t) {
    const HalfInt j = hi(t);
    const Index n = static_cast<Index>(dimension(j));
    PolyMatrix comm = boson_annihilation(1, j + half) * boson_creation(1, j);
    if (t > 0) comm -= boson_creation(1, j - half) * boson_annihilation(1, j);
    CHECK(exactly_equal(comm, identity<HPoly>(n)));  // [b1, b1†] = 1 on W^(j)
  }
  CHECK_THROWS_AS(boson_annihilation(1, 0), std::domain_error);
  CHECK_THROWS_AS(boson_creation(3, half), std::invalid_argument);
  CHECK(boson_block(1)->sectors.size() == 1);
}

TEST_CASE("Gamma and Lambda coefficients") {
  CHECK(boson_gamma(1, 0, 0) == RadScalar::sqrt(2));
  CHECK(boson_gamma(1, 0, 1) == RadScalar::sqrt(6));
  CHECK(boson_gamma(1, 1, 1).is_zero());
  CHECK(boson_lambda(1, 0, 0) == RadScalar(1));
  CHECK(boson_lambda(1, -1, 1) == RadScalar::sqrt(2));
}

TEST_CASE("boson families and their classical limits") {
  for (int t = 0; t <= 6; ++t) {
    const HalfInt j = hi(t);
    const TensorOpFamily up = boson_raising(j);
    CHECK(verify_tensor_operator(up).passed());
    CHECK(exactly_equal(eval_h(up.component(half), 0), eval_h(boson_creation(1, j), 0)));
    CHECK(exactly_equal(eval_h(up.component(-half), 0), eval_h(boson_creation(2, j), 0)));
    if (t == 0) continue;
    const TensorOpFamily down = boson_lowering(j);
    CHECK(verify_tensor_operator(down).passed());
    CHECK(exactly_equal(eval_h(down.component(half), 0), eval_h(PolyMatrix(-boson_annihilation(2, j)), 0)));
    CHECK(exactly_equal(eval_h(down.component(-half), 0), eval_h(boson_annihilation(1, j), 0)));
  }
  CHECK_THROWS_AS(boson_lowering(0), std::domain_error);
}

TEST_CASE("boson action formulas") {
  for (int t = 0; t <= 6; ++t) {
    const auto r = compare_boson_actions(hi(t));
    INFO(r.suite);
    CHECK(r.passed());
  }
  // t_{1/2,-1/2}|1 1> of the lowering family: b1|1 1> = √2|1/2 1/2>, every other term vanishes.
  const TensorOpFamily down = boson_lowering(1);
  const PolyVector v = down.component(-half) * ket(1, 1);
  CHECK(exactly_equal(v, PolyVector(ket(half, half) * HPoly(RadScalar::sqrt(2)))));
  CHECK(exactly_equal(boson_lowering_action(1, 1, -half), v));
  CHECK_FALSE(exactly_equal(boson_lowering_action_printed(1, 1, -half), v));
}

TEST_CASE("rank-1 generator family") {
  for (int t = 0; t <= 4; ++t) {
    const TensorOpFamily fam = rank1_generators(hi(t));
    CHECK(verify_tensor_operator(fam).passed());
    CHECK(verify_classical_tensor_operator(fam).passed());
    const Sl2Matrices s = sl2_irrep(hi(t));
    CHECK(exactly_equal(eval_h(fam.component(1), 0), RadMatrix(-s.zp)));
    CHECK(exactly_equal(eval_h(fam.component(0), 0), RadMatrix(s.hm * RadScalar::sqrt(Rational(1, 2)))));
    CHECK(exactly_equal(eval_h(fam.component(-1), 0), s.zm));
  }
  CHECK(verify_tensor_operator(invariant_identity(hi(3))).passed());
}

TEST_CASE("coupled families") {
  const FermionRealization f = fermion_realization();
  for (HalfInt k : {HalfInt(1), HalfInt(0)}) {
    CHECK(verify_tensor_operator(couple_tensor_ops(f.first, f.second, k)).passed());
    CHECK(verify_tensor_operator(couple_tensor_ops(f.first, f.first, k)).passed());
  }
  const TensorOpFamily up2 = couple_tensor_ops(boson_raising(half), boson_raising(0), 1);
  CHECK(up2.context.source->dim() == 1);
  CHECK(up2.context.target->dim() == 3);
  CHECK(verify_tensor_operator(up2).passed());
  CHECK(verify_tensor_operator(couple_tensor_ops(boson_raising(1), boson_raising(half), 1)).passed());
  // The antisymmetric rank-0 combination of two creations vanishes.
  for (const auto& c : couple_tensor_ops(boson_raising(1), boson_raising(half), 0).components) CHECK(is_zero(c));
  CHECK(verify_tensor_operator(couple_tensor_ops(rank1_generators(1), rank1_generators(1), 2)).passed());
  CHECK_THROWS_AS(couple_tensor_ops(f.first, f.second, 2), std::domain_error);
  CHECK_THROWS_AS(couple_tensor_ops(boson_raising(half), boson_raising(half), 1), DimensionError);
}
