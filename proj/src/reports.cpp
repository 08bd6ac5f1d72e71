#include "centra/reports.hpp"

#include <ctime>

#include <json.hpp>

namespace centra {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

ordered_json report_to_json(const CheckReport& r) {
  ordered_json j;
  j["check_name"] = r.check_name;
  j["group_name"] = r.group_name;
  j["inputs"] = ordered_json::object();
  for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
  j["computed"] = ordered_json::object();
  for (const auto& [k, v] : r.computed) j["computed"][k] = v;
  j["status"] = r.status_text();
  if (r.margin)
    j["margin"] = *r.margin;
  else
    j["margin"] = nullptr;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

ordered_json suite_to_json(const SuiteResult& s, bool with_timestamp) {
  ordered_json j;
  j["suite"] = s.suite;
  j["tool_version"] = kToolVersion;
  if (with_timestamp) j["timestamp"] = iso_timestamp();
  j["summary"] = {{"pass", s.passed()},
                  {"fail", s.failed()},
                  {"skipped", s.skipped()}};
  j["reports"] = ordered_json::array();
  for (const CheckReport& r : s.reports) j["reports"].push_back(report_to_json(r));
  return j;
}

std::string flatten(const std::map<std::string, int64_t>& m) {
  std::string out;
  for (const auto& [k, v] : m) {
    if (!out.empty()) out += ";";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string CheckReport::status_text() const {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped(" + reason + ")";
  }
  return "unknown";
}

size_t SuiteResult::count(CheckStatus s) const {
  size_t n = 0;
  for (const CheckReport& r : reports)
    if (r.status == s) ++n;
  return n;
}

std::string to_json(const SuiteResult& result, bool with_timestamp) {
  return suite_to_json(result, with_timestamp).dump(2) + "\n";
}

std::string to_json(const std::vector<SuiteResult>& results,
                    bool with_timestamp) {
  ordered_json arr = ordered_json::array();
  for (const SuiteResult& s : results)
    arr.push_back(suite_to_json(s, with_timestamp));
  return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<SuiteResult>& results) {
  std::string out =
      "suite,check_name,group_name,status,margin,inputs,computed,note\n";
  for (const SuiteResult& s : results)
    for (const CheckReport& r : s.reports) {
      out += csv_quote(s.suite) + "," + csv_quote(r.check_name) + "," +
             csv_quote(r.group_name) + "," + csv_quote(r.status_text()) + ",";
      if (r.margin) out += std::to_string(*r.margin);
      out += "," + csv_quote(flatten(r.inputs)) + "," +
             csv_quote(flatten(r.computed)) + "," + csv_quote(r.note) + "\n";
    }
  return out;
}

}  // namespace centra
