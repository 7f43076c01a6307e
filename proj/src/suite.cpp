#include "uhsl2/suite.hpp"

#include <chrono>

#include "uhsl2/algebra.hpp"
#include "uhsl2/coupling.hpp"
#include "uhsl2/wigner_eckart.hpp"

namespace uhsl2 {

namespace {

template <typename Fn>
VerificationReport timed(const std::string& name, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = name;
  body(report);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<HalfInt> spins_from(HalfInt lo, HalfInt max_j) {
  std::vector<HalfInt> out;
  for (HalfInt j : spins_up_to(max_j))
    if (j >= lo) out.push_back(j);
  return out;
}

}  // namespace

std::vector<TensorOpFamily> tensor_operator_families(HalfInt max_j) {
  std::vector<TensorOpFamily> out;
  const FermionRealization f = fermion_realization();
  out.push_back(f.first);
  out.push_back(f.second);
  for (HalfInt j : spins_up_to(max_j)) out.push_back(boson_raising(j));
  for (HalfInt j : spins_from(half, max_j)) out.push_back(boson_lowering(j));
  for (HalfInt j : spins_up_to(max_j)) out.push_back(rank1_generators(j));
  for (HalfInt j : spins_up_to(max_j)) out.push_back(invariant_identity(j));

  // Coupled families: fermion pairs, two boson steps, and the rank-1 family squared on W^(1).
  for (const auto* outer : {&f.first, &f.second})
    for (const auto* inner : {&f.first, &f.second})
      for (HalfInt k : {HalfInt(1), HalfInt(0)}) out.push_back(couple_tensor_ops(*outer, *inner, k));
  for (HalfInt j : spins_up_to(max_j)) {
    if (j + 1 > max_j) break;
    for (HalfInt k : {HalfInt(1), HalfInt(0)}) out.push_back(couple_tensor_ops(boson_raising(j + half), boson_raising(j), k));
  }
  for (HalfInt j : spins_up_to(max_j)) {
    if (j + half > max_j) break;
    for (HalfInt k : {HalfInt(1), HalfInt(0)})
      out.push_back(couple_tensor_ops(boson_lowering(j + half), boson_raising(j), k));
  }
  if (max_j >= 1)
    for (HalfInt k : {HalfInt(2), HalfInt(1), HalfInt(0)})
      out.push_back(couple_tensor_ops(rank1_generators(1), rank1_generators(1), k));
  return out;
}

VerificationReport algebra_suite(HalfInt max_j) {
  return timed("uh-algebra", [&](VerificationReport& r) {
    for (HalfInt j : spins_up_to(max_j)) {
      r.absorb(verify_defining_relations(j));
      r.absorb(verify_casimir(j));
      r.absorb(verify_classical_limit(j));
      r.absorb(verify_hopf_axioms(j));
    }
    for (HalfInt j1 : spins_from(half, max_j))
      for (HalfInt j2 : spins_from(j1, max_j)) r.absorb(verify_hopf_axioms(j1, j2));
  });
}

VerificationReport coupling_suite(HalfInt max_j) {
  return timed("coupling", [&](VerificationReport& r) {
    for (HalfInt j1 : spins_up_to(max_j))
      for (HalfInt j2 : spins_up_to(max_j)) {
        r.absorb(verify_alpha_orthogonality(j1, j2));
        r.absorb(verify_intermediate_orthonormality(j1, j2));
        r.absorb(verify_intermediate_action(j1, j2));
        r.absorb(verify_coupled_basis(j1, j2));
        r.absorb(verify_cgc_classical_limit(j1, j2));
      }
  });
}

VerificationReport tensor_operator_suite(HalfInt max_j) {
  return timed("tensor operators", [&](VerificationReport& r) {
    const FermionRealization f = fermion_realization();
    r.absorb(verify_fermion_realization(f));
    r.absorb(verify_adjoint_is_representation(f.first.context, {f.a1, f.a2_dag, f.jp}, "on Fock operators"));
    if (max_j >= 1) {
      const SpacePtr w1 = irrep_space(1);
      r.absorb(verify_adjoint_is_representation({w1, w1}, {w1->rep.x, w1->rep.y, w1->rep.h}, "on W^(1) operators"));
    }
    for (HalfInt j : spins_up_to(max_j)) r.absorb(compare_boson_actions(j));
    for (const auto& fam : tensor_operator_families(max_j)) {
      r.absorb(verify_tensor_operator(fam));
      r.absorb(verify_classical_tensor_operator(fam));
    }
  });
}

VerificationReport wigner_eckart_suite(HalfInt max_j) {
  return timed("wigner-eckart", [&](VerificationReport& r) {
    for (const auto& fam : tensor_operator_families(max_j)) r.absorb(verify_wigner_eckart_family(fam, max_j));
  });
}

bool SuiteRun::passed() const { return failures() == 0; }

std::size_t SuiteRun::failures() const {
  std::size_t n = 0;
  for (const auto& s : sections) n += s.failures();
  return n;
}

SuiteRun run_verification(HalfInt max_j) {
  const auto start = std::chrono::steady_clock::now();
  SuiteRun run{max_j, {}, 0.0};
  run.sections.push_back(algebra_suite(max_j));
  run.sections.push_back(coupling_suite(max_j));
  run.sections.push_back(tensor_operator_suite(max_j));
  run.sections.push_back(wigner_eckart_suite(max_j));
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

Json to_json(const SuiteRun& run, bool with_timing) {
  Json sections = Json::array();
  for (const auto& s : run.sections) sections.push_back(to_json(s, with_timing));
  Json out{{"max_j", run.max_j.str()}, {"passed", run.passed()}, {"failures", run.failures()}};
  if (with_timing) out["seconds"] = run.seconds;
  out["suites"] = std::move(sections);
  return out;
}

std::string to_csv(const SuiteRun& run) {
  std::string out = "suite,status,name,detail\n";
  for (const auto& s : run.sections) {
    const std::string body = to_csv(s);
    out += body.substr(body.find('\n') + 1);
  }
  return out;
}

std::string to_pretty(const SuiteRun& run) {
  std::string out;
  for (const auto& s : run.sections) out += to_pretty(s) + "\n";
  out += "verify --max-j " + run.max_j.str() + ": " + (run.passed() ? "PASS" : "FAIL") + " (" +
         std::to_string(run.failures()) + " failures, " + std::to_string(run.seconds) + " s)\n";
  return out;
}

}  // namespace uhsl2
