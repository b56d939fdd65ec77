#pragma once

#include <string>
#include <utility>
#include <vector>

namespace zastava {

enum class Status { pass, fail, skip };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  Status status = Status::pass;
  std::string witness;  // first failing value, empty on pass
  double seconds = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  void add(std::string id, bool ok, std::string witness = {}, double seconds = 0) {
    checks.push_back({std::move(id), ok ? Status::pass : Status::fail, ok ? std::string{} : std::move(witness), seconds});
  }
  void skip(std::string id, std::string why) { checks.push_back({std::move(id), Status::skip, std::move(why), 0}); }
  void merge(const VerificationReport& o) {
    for (const auto& c : o.checks) checks.push_back({o.suite.empty() ? c.id : o.suite + "/" + c.id, c.status, c.witness, c.seconds});
  }

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == Status::fail) return false;
    return true;
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (c.status == Status::fail) return &c;
    return nullptr;
  }
};

}  // namespace zastava
