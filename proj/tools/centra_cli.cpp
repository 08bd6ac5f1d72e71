#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "centra/caps.hpp"
#include "centra/chain_length.hpp"
#include "centra/corpus.hpp"
#include "centra/errors.hpp"
#include "centra/group.hpp"
#include "centra/group_io.hpp"
#include "centra/lattice.hpp"
#include "centra/layer.hpp"
#include "centra/reports.hpp"
#include "centra/simple_id.hpp"
#include "centra/steinitz.hpp"
#include "centra/subgroup_ops.hpp"
#include "centra/suites.hpp"

namespace {

using namespace centra;

// Group file path, or "builtin:<name>" for a corpus entry.
Group resolve_target(const std::string& target) {
  const std::string prefix = "builtin:";
  if (target.rfind(prefix, 0) == 0)
    return corpus_entry(target.substr(prefix.size())).group;
  return load_group(target);
}

int run_invariants(const std::string& target) {
  const Caps& caps = default_caps();
  Group g = resolve_target(target);
  std::cout << "group " << target << "\n";
  std::cout << "degree " << g.degree() << "\n";
  std::cout << "order " << g.order() << "\n";

  CdimResult cd = cdim(g, caps);
  std::cout << "cdim terms " << cd.value_terms << "\n";
  std::cout << "cdim steps " << cd.value_steps << "\n";
  try {
    std::cout << "chain length " << subgroup_chain_length(g, caps) << "\n";
  } catch (const CapError& e) {
    std::cout << "chain length unavailable (" << e.what() << ")\n";
  }
  std::cout << "lambda " << lambda_invariant(g, caps) << "\n";

  auto dl = derived_length(g);
  std::cout << "soluble: " << (dl ? "yes" : "no") << "\n";
  std::cout << "derived length " << (dl ? std::to_string(*dl) : "none (not soluble)")
            << "\n";

  std::cout << "fitting order " << fitting(g, caps).order() << "\n";
  std::cout << "fitting3 order " << upper_fitting_series(g, 3, caps).order()
            << "\n";
  std::cout << "radical order " << soluble_radical(g, caps).order() << "\n";
  std::cout << "socle order "
            << (g.is_trivial() ? 1 : socle(g, caps).order()) << "\n";

  ComponentSet cs = components(g, caps);
  std::cout << "components " << cs.components.size() << "\n";
  for (const SubgroupRef& q : cs.components)
    std::cout << "  component order " << q.order() << "\n";
  std::cout << "layer order " << cs.layer.order() << "\n";
  std::cout << "fstar order " << generalized_fitting(g, caps).order() << "\n";
  return 0;
}

int run_verify(const std::string& suite, const std::string& format,
               const std::string& out_path, const std::string& table_path) {
  const Caps& caps = default_caps();
  RecognitionTable table = table_path.empty() ? RecognitionTable::builtin()
                                              : RecognitionTable::load(table_path);
  std::vector<SuiteResult> results;
  if (suite.empty())
    results = run_all_suites(caps, table);
  else
    results.push_back(run_suite(suite, caps, table));

  std::string text = format == "csv" ? to_csv(results) : to_json(results);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }

  size_t fails = 0;
  for (const SuiteResult& s : results) {
    std::cerr << s.suite << ": " << s.passed() << " pass, " << s.failed()
              << " fail, " << s.skipped() << " skipped\n";
    fails += s.failed();
  }
  return fails == 0 ? 0 : 1;
}

int run_corpus_list() {
  for (const CorpusEntry& e : corpus_default()) {
    std::cout << e.name << "\t" << e.order << "\t" << e.builder << "\n";
  }
  return 0;
}

// Expressions: "gcd(A, B)", "lcm(A, B)", "A | B" (divisibility), or a plain
// number to echo in normal form.  A and B use the p1^e1 * p2^e2 text form
// with "inf" for an infinite exponent.
int run_steinitz(const std::string& expr) {
  auto strip = [](const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return std::string();
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
  };
  std::string e = strip(expr);
  for (const std::string fn : {"gcd", "lcm"}) {
    if (e.rfind(fn + "(", 0) != 0 || e.back() != ')') continue;
    std::string args = e.substr(fn.size() + 1, e.size() - fn.size() - 2);
    size_t comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("expected two comma-separated arguments");
    SteinitzNumber a = SteinitzNumber::parse(strip(args.substr(0, comma)));
    SteinitzNumber b = SteinitzNumber::parse(strip(args.substr(comma + 1)));
    std::cout << (fn == "gcd" ? gcd(a, b) : lcm(a, b)).str() << "\n";
    return 0;
  }
  if (size_t bar = e.find('|'); bar != std::string::npos) {
    SteinitzNumber a = SteinitzNumber::parse(strip(e.substr(0, bar)));
    SteinitzNumber b = SteinitzNumber::parse(strip(e.substr(bar + 1)));
    std::cout << (divides(a, b) ? "true" : "false") << "\n";
    return 0;
  }
  std::cout << SteinitzNumber::parse(e).str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group invariants and verification suites"};
  app.require_subcommand(1);

  auto* inv = app.add_subcommand("invariants", "print the invariants of one group");
  std::string target;
  inv->add_option("target", target, "group file path, or builtin:<name>")
      ->required();

  auto* ver = app.add_subcommand("verify", "run the verification suites");
  std::string suite, format = "json", out_path, table_path;
  ver->add_option("--suite", suite, "run a single suite by name");
  ver->add_option("--format", format, "report format (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  ver->add_option("--out", out_path, "write the report to a file");
  ver->add_option("--table", table_path,
                  "recognition table file replacing the built-in one");

  auto* cor = app.add_subcommand("corpus", "the built-in group corpus");
  bool list = false;
  cor->add_flag("--list", list, "list entries: name, order, construction")
      ->required();

  auto* st = app.add_subcommand("steinitz",
                                "evaluate a Steinitz-number expression");
  std::string expr;
  st->add_option("expr", expr, "\"gcd(A,B)\", \"lcm(A,B)\", \"A | B\", or A")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(inv)) return run_invariants(target);
    if (app.got_subcommand(ver))
      return run_verify(suite, format, out_path, table_path);
    if (app.got_subcommand(cor)) return run_corpus_list();
    if (app.got_subcommand(st)) return run_steinitz(expr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
