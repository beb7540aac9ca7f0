#pragma once

#include <string>
#include <vector>

namespace ccx {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string provenance;  // paper | trivial | derived
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Available suite identifiers (criterion-1 .. criterion-10 plus aliases
/// like "iwasawa", "ranks", "reconstruction").
std::vector<std::string> suite_names();

/// Run one suite; throws UnknownEntry on a bad identifier.
SuiteResult run_suite(const std::string& name);

/// All ten acceptance suites, computed concurrently, reported in order.
std::vector<SuiteResult> run_all();

std::string format_suite(const SuiteResult& r);

}  // namespace ccx
