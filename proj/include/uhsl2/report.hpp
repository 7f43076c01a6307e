#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace uhsl2 {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  /// "exact zero" on success, otherwise the offending entry or a note.
  std::string detail;
};

/// Outcome of one verification suite. Passes iff no check failed.
struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  void pass(std::string name, std::string detail = "exact zero");
  void fail(std::string name, std::string detail);
  void skip(std::string name, std::string detail);
  /// Records a residual check: pass when residual is nullopt, otherwise fail with its text.
  void expect_zero(std::string name, const std::optional<std::string>& residual);
  void expect(std::string name, bool ok, std::string failure_detail);
  /// Appends all checks of other, prefixing names with its suite name.
  void absorb(const VerificationReport& other);

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

}  // namespace uhsl2
