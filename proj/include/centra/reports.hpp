#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace centra {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Skipped };

// Outcome of one named check on one named group.  All recorded quantities
// are integers; ratios appear as separate numerator/denominator entries so
// the reports stay exact and bit-reproducible.
struct CheckReport {
  std::string check_name;
  std::string group_name;
  std::map<std::string, int64_t> inputs;
  std::map<std::string, int64_t> computed;
  CheckStatus status = CheckStatus::Pass;
  std::string reason;  // required for Skipped; optional detail for Fail
  std::string note;    // free-form annotation (vacuous cases and the like)
  std::optional<int64_t> margin;  // bound − attained, where meaningful

  // "pass", "fail" or "skipped(<reason>)".
  std::string status_text() const;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckReport> reports;

  size_t count(CheckStatus s) const;
  size_t passed() const { return count(CheckStatus::Pass); }
  size_t failed() const { return count(CheckStatus::Fail); }
  size_t skipped() const { return count(CheckStatus::Skipped); }
};

// {suite, tool_version, timestamp?, summary, reports:[{check_name,
// group_name, inputs, computed, status, margin, note?}]}.  The timestamp is
// the only field that may differ between two runs on the same corpus; pass
// with_timestamp = false to drop it for byte-comparison.
std::string to_json(const SuiteResult& result, bool with_timestamp = true);
std::string to_json(const std::vector<SuiteResult>& results,
                    bool with_timestamp = true);

// Flat projection, one row per report, with the same column names; maps are
// flattened to "key=value;key=value".
std::string to_csv(const std::vector<SuiteResult>& results);

}  // namespace centra
