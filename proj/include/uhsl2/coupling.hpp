#pragma once

#include <utility>
#include <vector>

#include "uhsl2/algebra.hpp"
#include "uhsl2/half_int.hpp"
#include "uhsl2/matrix.hpp"
#include "uhsl2/report.hpp"

namespace uhsl2 {

/// Binomial coefficient extended to any integer top: n(n-1)...(n-m+1)/m! for m >= 0, 0 for m < 0.
Rational binom_ext(long n, long m);
/// Same, for index sums that must be integral; throws std::logic_error if n or m is not.
Rational binom_ext(HalfInt n, HalfInt m);

/// Transition coefficient α_{k1,k2}^{m1,m2} between product vectors and intermediate vectors
/// of j1 ⊗ j2: a monomial in h of degree k1+k2-m1-m2, vanishing for k1 < m1 or k2 < m2.
HPoly alpha(HalfInt j1, HalfInt j2, HalfInt k1, HalfInt k2, HalfInt m1, HalfInt m2);

/// Memoized α values for one (j1, j2).
class AlphaTable {
 public:
  AlphaTable(HalfInt j1, HalfInt j2);

  HalfInt j1() const { return j1_; }
  HalfInt j2() const { return j2_; }
  const HPoly& operator()(HalfInt k1, HalfInt k2, HalfInt m1, HalfInt m2) const;

 private:
  HalfInt j1_, j2_;
  std::size_t d1_, d2_;
  std::vector<HPoly> values_;
};

/// Shared, thread-safe cache of α tables.
const AlphaTable& alpha_table(HalfInt j1, HalfInt j2);

/// Index of |j1 k1> ⊗ |j2 k2> in the product basis (matches kron ordering).
Index product_index(HalfInt j1, HalfInt j2, HalfInt k1, HalfInt k2);

/// |(j1 m1)(j2 m2)> = Σ_k α_{k1,k2}^{m1,m2} |j1 k1> ⊗ |j2 k2>.
PolyVector intermediate_ket(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2);
/// <(j1 m1)(j2 m2)| = Σ_k α_{-k1,-k2}^{-m1,-m2} <j1 k1| ⊗ <j2 k2|.
PolyRowVector intermediate_bra(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2);

/// sl(2) Clebsch-Gordan coefficient <j1 m1; j2 m2 | j m1+m2> (Racah formula, Condon-Shortley
/// phases). Zero outside the triangle or when m1+m2 is out of range.
RadScalar sl2_cgc(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2);

/// Coefficient of |j1 k1> ⊗ |j2 k2> in the coupled vector |j m> of U_h(sl(2)).
HPoly uh_cgc(HalfInt j1, HalfInt j2, HalfInt j, HalfInt k1, HalfInt k2, HalfInt m);

/// Bra-side coefficient: component of <j m| along <j1 k1| ⊗ <j2 k2|,
/// i.e. Σ_{n1+n2=m} C^{j1 j2 j}_{n1 n2 m} α_{-k1,-k2}^{-n1,-n2}.
HPoly uh_cgc_bra(HalfInt j1, HalfInt j2, HalfInt j, HalfInt k1, HalfInt k2, HalfInt m);

struct CoupledBlock {
  HalfInt j;
  /// vectors[i] is |j, j - i> in the product basis.
  std::vector<PolyVector> vectors;
};

struct CoupledBasis {
  HalfInt j1, j2;
  std::vector<CoupledBlock> blocks;  // j = j1+j2 down to |j1-j2|
};

CoupledBasis coupled_basis(HalfInt j1, HalfInt j2);

/// Irreducible content of j1 ⊗ j2 as (j, multiplicity), highest j first. Certified by the
/// exact Δ(C) eigenvalue of every coupled vector; throws std::runtime_error on a mismatch.
std::vector<std::pair<HalfInt, int>> decompose(HalfInt j1, HalfInt j2);

/// Σ_k α_{k1,k2}^{m1,m2} α_{-k1,-k2}^{-n1,-n2} = δ δ for all index quadruples.
VerificationReport verify_alpha_orthogonality(HalfInt j1, HalfInt j2);
/// <(j1 n1)(j2 n2)|(j1 m1)(j2 m2)> = δ δ.
VerificationReport verify_intermediate_orthonormality(HalfInt j1, HalfInt j2);
/// Undeformed action of Δ(H), Δ(Z±) on intermediate kets and bras. Also records whether
/// the variant with (j1∓m2) in the second square root holds.
VerificationReport verify_intermediate_action(HalfInt j1, HalfInt j2);
/// Δ(C) = j(j+1) on each block, multiplicity-free rule, and the bra coefficients
/// forming an exact inverse of the ket coefficients.
VerificationReport verify_coupled_basis(HalfInt j1, HalfInt j2);
/// uh_cgc at h = 0 against sl2_cgc; sl(2) CGC orthonormality.
VerificationReport verify_cgc_classical_limit(HalfInt j1, HalfInt j2);

/// √((j - m)(j + m + 1)): matrix element of Z+ from |j m> to |j m+1>.
RadScalar raising_factor(HalfInt j, HalfInt m);
/// √((j + m)(j - m + 1)): matrix element of Z- from |j m> to |j m-1>.
RadScalar lowering_factor(HalfInt j, HalfInt m);

}  // namespace uhsl2
