#pragma once

#include <string>
#include <vector>

#include "uhsl2/tensor_ops.hpp"

namespace uhsl2 {

/// <j m| t_{j1 m1} |j2 m2> with the bra taken in `target` and the ket in `source`.
HPoly matrix_element(const TensorOpFamily& fam, const Sector& target, HalfInt m, HalfInt m1, const Sector& source,
                     HalfInt m2);

/// |φ; m1 m2> = Σ_k α_{k1,k2}^{m1,m2} t_{j1 k1} |j2 k2>, a vector in the whole target space.
struct PhiVector {
  HalfInt j1, j2, m1, m2;
  PolyVector vector;
};

PhiVector phi_vector(const TensorOpFamily& fam, const Sector& source, HalfInt m1, HalfInt m2);

/// Z±|φ; m1 m2> against the undeformed two-term recurrence, for every (m1, m2).
VerificationReport verify_phi_recurrence(const TensorOpFamily& fam, const Sector& source);

/// The sector's coordinates carry exactly the irrep(j) matrices and are invariant under X, Y, H.
VerificationReport verify_sector(const Space& space, const Sector& sector);

enum class ReducedOutcome { Value, SelectionRuleForbidden, ChannelMismatch };
std::string to_string(ReducedOutcome o);

struct ReducedMatrixElement {
  HalfInt j1, j2, j;
  ReducedOutcome outcome = ReducedOutcome::Value;
  HPoly value;       // meaningful for Value only
  int channels = 0;  // nonvanishing-CGC channels inspected
  std::string detail;
};

/// I(j1 j2 j) from <j m|φ; m1 m2> / C^{j1 j2 j}_{m1 m2 m}. Channels are visited by descending m,
/// then descending m1; the first disagreement is reported in `detail`.
ReducedMatrixElement reduced_matrix_element(const TensorOpFamily& fam, const Sector& source, const Sector& target);

/// The same extraction from the h = 0 family with sl(2) CGC; nullopt unless every channel agrees.
std::optional<RadScalar> classical_reduced_matrix_element(const TensorOpFamily& fam, const Sector& source,
                                                          const Sector& target);

/// Every matrix element against I · Σ α_{-m1,-m2}^{-n1,-n2} C_{n1 n2 m}, the α-inversion path,
/// the proportionality and recurrence of <j m|φ>, the bra CGC, and the h = 0 limit of I.
/// Forbidden (j1, j2, j) only checks that all matrix elements vanish.
VerificationReport verify_wigner_eckart(const TensorOpFamily& fam, const Sector& source, const Sector& target);

struct WignerEckartCase {
  const Sector* source;
  const Sector* target;
  bool allowed;  // triangle rule for (rank, source.j, target.j)
};

/// All source/target sector pairs of the family with both spins <= max_j.
std::vector<WignerEckartCase> wigner_eckart_cases(const TensorOpFamily& fam, HalfInt max_j);

/// Sector embeddings, φ recurrences and verify_wigner_eckart over wigner_eckart_cases.
VerificationReport verify_wigner_eckart_family(const TensorOpFamily& fam, HalfInt max_j);

}  // namespace uhsl2
