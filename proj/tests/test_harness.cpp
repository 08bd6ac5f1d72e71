#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

#include "centra/reports.hpp"
#include "centra/simple_id.hpp"
#include "centra/suites.hpp"

using namespace centra;

namespace {

std::string fixture(const std::string& name) {
  const char* dir = std::getenv("CENTRA_FIXTURES");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

struct CliResult {
  int exit_code;
  std::string out;
};

// Runs the built CLI through the shell; `env_prefix` may set variables for
// the child, e.g. "CENTRA_CAPS=enum=10".
CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const char* cli = std::getenv("CENTRA_CLI");
  REQUIRE(cli != nullptr);
  std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + "\"" + cli +
                    "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::string strip_timestamp_lines(const std::string& text) {
  std::istringstream in(text);
  std::string out, line;
  while (std::getline(in, line))
    if (line.find("\"timestamp\"") == std::string::npos) out += line + "\n";
  return out;
}

}  // namespace

TEST_CASE("suite registry") {
  std::vector<std::string> names = suite_names();
  REQUIRE(names.size() == 6);
  CHECK(names[0] == "cdim-bounds");
  CHECK(names[1] == "structure");
  CHECK(names[2] == "radical-relations");
  CHECK(names[3] == "khukhro");
  CHECK(names[4] == "finext");
  CHECK(names[5] == "theorem2-data");
  CHECK_THROWS_AS(run_suite("bogus"), std::invalid_argument);
}

TEST_CASE("json report shape and library-level determinism") {
  SuiteResult s = run_suite("cdim-bounds");
  REQUIRE(s.reports.size() == 15);
  CHECK(s.failed() == 0);

  nlohmann::json j = nlohmann::json::parse(to_json(s));
  CHECK(j["suite"] == "cdim-bounds");
  CHECK(j["tool_version"] == kToolVersion);
  CHECK(j.contains("timestamp"));
  CHECK(j["summary"]["pass"].get<size_t>() == s.passed());
  CHECK(j["summary"]["fail"].get<size_t>() == 0);
  REQUIRE(j["reports"].size() == s.reports.size());
  const auto& first = j["reports"][0];
  CHECK(first["check_name"] == "gl_cdim_bound");
  CHECK(first["group_name"] == "GL2_2");
  CHECK(first["status"] == "pass");
  CHECK(first["computed"].contains("cdim_terms"));
  CHECK(first["inputs"].contains("order"));
  CHECK(first["margin"].is_number());

  CHECK(to_json(s, false) == to_json(run_suite("cdim-bounds"), false));
  CHECK(to_json(s, false).find("timestamp") == std::string::npos);
}

TEST_CASE("csv projection") {
  std::vector<SuiteResult> results{run_suite("khukhro")};
  std::string csv = to_csv(results);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "suite,check_name,group_name,status,margin,inputs,computed,note");
  size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.rfind("khukhro,centralizer_series,", 0) == 0);
  }
  CHECK(rows == results[0].reports.size());
}

TEST_CASE("corrupted recognition table turns identification into fails, reproducibly") {
  RecognitionTable broken =
      RecognitionTable::load(fixture("table_missing_alt5.tbl"));
  SuiteResult s = run_suite("structure", default_caps(), broken);
  REQUIRE(s.failed() > 0);
  bool saw_alt5_victim = false;
  for (const CheckReport& r : s.reports)
    if (r.status == CheckStatus::Fail && r.group_name == "A5") {
      saw_alt5_victim = true;
      CHECK(!r.note.empty());
    }
  CHECK(saw_alt5_victim);

  // A failing report round-trips: the rerun reproduces the same fails.
  SuiteResult again = run_suite("structure", default_caps(), broken);
  CHECK(to_json(s, false) == to_json(again, false));
}

TEST_CASE("cli invariants") {
  CliResult r = run_cli("invariants builtin:S4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("order 24") != std::string::npos);
  CHECK(r.out.find("soluble: yes") != std::string::npos);
  CHECK(r.out.find("derived length 3") != std::string::npos);
  CHECK(r.out.find("cdim terms 5") != std::string::npos);
  CHECK(r.out.find("cdim steps 4") != std::string::npos);
  CHECK(r.out.find("chain length 4") != std::string::npos);

  r = run_cli("invariants " + fixture("a5.grp"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("order 60") != std::string::npos);
  CHECK(r.out.find("soluble: no") != std::string::npos);
  CHECK(r.out.find("components 1") != std::string::npos);
  CHECK(r.out.find("fstar order 60") != std::string::npos);
}

TEST_CASE("cli invariants error paths exit 2") {
  CHECK(run_cli("invariants builtin:NOPE").exit_code == 2);
  CHECK(run_cli("invariants " + fixture("bad_point.grp")).exit_code == 2);
  CHECK(run_cli("invariants " + fixture("no_such_file.grp")).exit_code == 2);
}

TEST_CASE("cli verify single suite json") {
  CliResult r = run_cli("verify --suite cdim-bounds --format json");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["suite"] == "cdim-bounds");
  CHECK(j[0]["reports"].size() == 15);
}

TEST_CASE("cli verify determinism modulo timestamp") {
  CliResult a = run_cli("verify --suite cdim-bounds --format json");
  CliResult b = run_cli("verify --suite cdim-bounds --format json");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.out.find("\"timestamp\"") != std::string::npos);
  CHECK(strip_timestamp_lines(a.out) == strip_timestamp_lines(b.out));
}

TEST_CASE("cli verify --out writes the report file") {
  std::string path = "harness_cli_out.json";
  std::remove(path.c_str());
  CliResult r = run_cli("verify --suite khukhro --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());  // report went to the file, summary to stderr
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j = nlohmann::json::parse(buf.str());
  CHECK(j[0]["suite"] == "khukhro");
  std::remove(path.c_str());
}

TEST_CASE("cli verify corrupted table exits 1") {
  CliResult r = run_cli("verify --suite structure --format json --table " +
                        fixture("table_missing_alt5.tbl"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"status\": \"fail\"") != std::string::npos);
}

TEST_CASE("cli verify csv") {
  CliResult r = run_cli("verify --suite khukhro --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("suite,check_name,group_name,status,margin,inputs,computed,note",
                    0) == 0);
  CHECK(r.out.find("khukhro,centralizer_series,3:2,pass") != std::string::npos);
}

TEST_CASE("cli corpus --list") {
  CliResult r = run_cli("corpus --list");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("M11\t7920\t") != std::string::npos);
  CHECK(r.out.find("S4\t24\tsymmetric(4)") != std::string::npos);
  CHECK(run_cli("corpus").exit_code == 2);
}

TEST_CASE("cli steinitz") {
  CHECK(run_cli("steinitz \"gcd(12, 18)\"").out == "2 * 3\n");
  CHECK(run_cli("steinitz \"lcm(2^inf * 3, 3^2 * 5)\"").out ==
        "2^inf * 3^2 * 5\n");
  CHECK(run_cli("steinitz \"2^3 * 5 | 2^inf * 5\"").out == "true\n");
  CHECK(run_cli("steinitz \"2^inf | 2^5\"").out == "false\n");
  CHECK(run_cli("steinitz 360").out == "2^3 * 3^2 * 5\n");
  CHECK(run_cli("steinitz \"gcd(12)\"").exit_code == 2);
  CHECK(run_cli("steinitz 0").exit_code == 2);
}

TEST_CASE("cli bad usage exits 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("verify --format yaml").exit_code == 2);
}

TEST_CASE("cli caps environment variable") {
  // A cap small enough to block element enumeration surfaces as an error.
  CliResult r = run_cli("invariants builtin:S4", "CENTRA_CAPS=enum=10");
  CHECK(r.exit_code == 2);
  CHECK(run_cli("invariants builtin:S4", "CENTRA_CAPS=bogus").exit_code == 2);
  CHECK(run_cli("invariants builtin:S4", "CENTRA_CAPS=enum=100000,quot=20000")
            .exit_code == 0);
}
