#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "uhsl2/half_int.hpp"
#include "uhsl2/matrix.hpp"
#include "uhsl2/report.hpp"

namespace uhsl2 {

/// Elements of U_h(sl(2)) whose matrices and coproducts we use.
enum class Generator { X, Y, H, Unit, ExpHX, ExpmHX };

std::string to_string(Generator g);
/// Accepts X, Y, H, unit, expHX, expmHX.
Generator parse_generator(std::string_view name);

/// Undeformed sl(2) matrices Z+, Z-, H in the basis m = j, j-1, ..., -j.
struct Sl2Matrices {
  RadMatrix zp, zm, hm;
};

Sl2Matrices sl2_irrep(HalfInt j);

/// Matrices of U_h(sl(2)) on a finite-dimensional space, together with the images of
/// Z+ and Z- under the nonlinear map (2/h)tanh(hX/2), cosh(hX/2) Y cosh(hX/2).
struct Representation {
  PolyMatrix x, y, h, exp_hx, expm_hx;
  PolyMatrix zp, zm;

  Index dim() const { return h.rows(); }
  PolyMatrix matrix(Generator g) const;
};

/// Realizes U_h(sl(2)) from sl(2) matrices J+, J-, J0 on any space where J+ is nilpotent:
/// X = (2/h) arctanh(h J+/2), Y = √(1-(h J+/2)²) J- √(1-(h J+/2)²), H = J0.
Representation realize(const PolyMatrix& jp, const PolyMatrix& jm, const PolyMatrix& j0);

struct Irrep {
  HalfInt j;
  Sl2Matrices sl2;
  Representation rep;
};

Irrep irrep(HalfInt j);

/// (2/h) arctanh(h a/2) for nilpotent a.
PolyMatrix arctanh_map(const PolyMatrix& a);
/// √(1 - (h a/2)²) for nilpotent a.
PolyMatrix sqrt_one_minus_square(const PolyMatrix& a);

PolyMatrix x_matrix(HalfInt j);
PolyMatrix y_matrix(HalfInt j);
/// e^{sign·hX} by the terminating exponential series.
PolyMatrix exp_hx(HalfInt j, int sign);
/// e^{sign·hX} as (1 + sign·hZ+/2)(1 - sign·hZ+/2)^{-1}.
PolyMatrix exp_hx_mobius(HalfInt j, int sign);

/// e^{factor·hX} for nilpotent X, factor rational (±1, ±1/2).
PolyMatrix exp_scaled(const PolyMatrix& x, const Rational& factor);
/// sinh(hX)/h, exact after division by h.
PolyMatrix sinh_over_h(const Representation& rep);
/// cosh(hX).
PolyMatrix cosh_hx(const Representation& rep);

/// Forward nonlinear map: Z+ = (2/h) tanh(hX/2).
PolyMatrix zplus_from(const PolyMatrix& x);
/// Forward nonlinear map: Z- = cosh(hX/2) Y cosh(hX/2).
PolyMatrix zminus_from(const PolyMatrix& x, const PolyMatrix& y);

/// C = (1/2h){Y sinh hX + sinh hX Y} + H²/4 + (sinh hX)²/4.
PolyMatrix casimir(const Representation& rep);
/// C = Z+ Z- + (H/2)(H/2 - 1).
PolyMatrix casimir_sl2_form(const Representation& rep);
PolyMatrix casimir_matrix(HalfInt j);

/// [X,Y] = H, [H,X] = 2 sinh(hX)/h, [H,Y] = -Y cosh hX - cosh hX Y.
VerificationReport verify_defining_relations(const Representation& rep, const std::string& label);
VerificationReport verify_defining_relations(HalfInt j);
/// C = j(j+1)·1 and agreement of the two Casimir forms.
VerificationReport verify_casimir(HalfInt j);

// Hopf structure.

struct CoproductTerm {
  Generator left, right;
};

/// Δ(c) = Σ left ⊗ right.
std::vector<CoproductTerm> coproduct_terms(Generator c);
/// ε(c): 0 for X, Y, H and 1 for the unit and the exponentials.
int counit(Generator c);
/// Matrix of S(c) in rep.
PolyMatrix antipode(Generator c, const Representation& rep);
/// Matrix of Δ(c) on the tensor product space a ⊗ b.
PolyMatrix coproduct(Generator c, const Representation& a, const Representation& b);
/// The tensor product representation, including Z± of the tensor space via the nonlinear map.
Representation coproduct(const Representation& a, const Representation& b);

/// Homomorphism of Δ on j1 ⊗ j2, counit and antipode axioms on generators, coassociativity.
VerificationReport verify_hopf_axioms(HalfInt j1, HalfInt j2);
VerificationReport verify_hopf_axioms(HalfInt j);

/// All deformed matrices of irrep(j) at h = 0 against sl(2).
VerificationReport verify_classical_limit(HalfInt j);

}  // namespace uhsl2
