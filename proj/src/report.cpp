#include "uhsl2/report.hpp"

#include <algorithm>

namespace uhsl2 {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "unknown";
}

void VerificationReport::pass(std::string name, std::string detail) {
  checks.push_back({std::move(name), CheckStatus::Pass, std::move(detail)});
}

void VerificationReport::fail(std::string name, std::string detail) {
  checks.push_back({std::move(name), CheckStatus::Fail, std::move(detail)});
}

void VerificationReport::skip(std::string name, std::string detail) {
  checks.push_back({std::move(name), CheckStatus::Skip, std::move(detail)});
}

void VerificationReport::expect_zero(std::string name, const std::optional<std::string>& residual) {
  if (residual)
    fail(std::move(name), "nonzero residual: " + *residual);
  else
    pass(std::move(name));
}

void VerificationReport::expect(std::string name, bool ok, std::string failure_detail) {
  if (ok)
    pass(std::move(name), "ok");
  else
    fail(std::move(name), std::move(failure_detail));
}

void VerificationReport::absorb(const VerificationReport& other) {
  for (const auto& c : other.checks)
    checks.push_back({other.suite.empty() ? c.name : other.suite + ": " + c.name, c.status, c.detail});
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; }));
}

}  // namespace uhsl2
