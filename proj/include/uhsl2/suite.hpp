#pragma once

#include <string>
#include <vector>

#include "uhsl2/serialize.hpp"
#include "uhsl2/tensor_ops.hpp"

namespace uhsl2 {

/// Every tensor-operator family exercised by the suites, in a fixed order: the two fermion
/// families, boson raising (source j <= max_j), boson lowering, rank-1 generators, the identity,
/// then families coupled from those.
std::vector<TensorOpFamily> tensor_operator_families(HalfInt max_j);

VerificationReport algebra_suite(HalfInt max_j);
VerificationReport coupling_suite(HalfInt max_j);
VerificationReport tensor_operator_suite(HalfInt max_j);
VerificationReport wigner_eckart_suite(HalfInt max_j);

struct SuiteRun {
  HalfInt max_j;
  std::vector<VerificationReport> sections;  // algebra, coupling, tensor operators, Wigner-Eckart
  double seconds = 0.0;

  bool passed() const;
  std::size_t failures() const;
};

/// Runs the four suites in order.
SuiteRun run_verification(HalfInt max_j);

Json to_json(const SuiteRun& run, bool with_timing = true);
std::string to_csv(const SuiteRun& run);
std::string to_pretty(const SuiteRun& run);

}  // namespace uhsl2
