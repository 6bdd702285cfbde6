#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qteich/version.hpp"

namespace qteich {

// One verification check: an identity, its measured residual, and the pinned
// tolerance. `status` is "pass", "fail", or "skip".
struct CheckResult {
  std::string id;
  std::string identity;
  std::string status;
  double residual = 0;
  double tolerance = 0;
  std::string detail;
};

inline CheckResult make_check(std::string id, std::string identity, double residual,
                              double tolerance, std::string detail = "") {
  CheckResult c;
  c.id = std::move(id);
  c.identity = std::move(identity);
  c.residual = residual;
  c.tolerance = tolerance;
  c.status = residual <= tolerance ? "pass" : "fail";
  c.detail = std::move(detail);
  return c;
}

inline CheckResult make_flag_check(std::string id, std::string identity, bool ok,
                                   std::string detail = "") {
  CheckResult c;
  c.id = std::move(id);
  c.identity = std::move(identity);
  c.residual = ok ? 0 : 1;
  c.tolerance = 0;
  c.status = ok ? "pass" : "fail";
  c.detail = std::move(detail);
  return c;
}

inline CheckResult make_skip(std::string id, std::string identity, std::string detail) {
  CheckResult c;
  c.id = std::move(id);
  c.identity = std::move(identity);
  c.status = "skip";
  c.detail = std::move(detail);
  return c;
}

// FNV-1a fingerprint used to tie reports to their inputs.
inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char b : data) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::map<std::string, std::string> inputs;  // name -> fnv1a64 hex digest

  void add(CheckResult c) { checks.push_back(std::move(c)); }

  void add_input(const std::string& name, const std::string& content) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(content)));
    inputs[name] = buf;
  }

  void merge(const VerificationReport& other) {
    for (const auto& c : other.checks) checks.push_back(c);
    for (const auto& [k, v] : other.inputs) inputs[k] = v;
  }

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status != "fail"; });
  }

  nlohmann::ordered_json to_json() const {
    auto sorted = checks;
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["version"] = kVersion;
    j["inputs"] = inputs;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : sorted) {
      nlohmann::ordered_json cj;
      cj["id"] = c.id;
      cj["identity"] = c.identity;
      cj["status"] = c.status;
      cj["residual"] = c.residual;
      cj["tolerance"] = c.tolerance;
      if (!c.detail.empty()) cj["detail"] = c.detail;
      j["checks"].push_back(cj);
    }
    j["all_pass"] = all_pass();
    return j;
  }
};

}  // namespace qteich
