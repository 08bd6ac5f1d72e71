#pragma once

#include <string>
#include <vector>

#include "centra/caps.hpp"
#include "centra/reports.hpp"
#include "centra/simple_id.hpp"

namespace centra {

// Verification suites over the built-in corpus.  Every suite visits the
// corpus in its fixed order, so two runs produce identical reports.  A check
// that overruns a cap is recorded as skipped with the cap's message; any
// other exception from a check body is recorded as a fail carrying the
// exception text.

std::vector<std::string> suite_names();

// Throws std::invalid_argument for a name not in suite_names().
SuiteResult run_suite(const std::string& name, const Caps& caps = default_caps(),
                      const RecognitionTable& table = RecognitionTable::builtin());

std::vector<SuiteResult> run_all_suites(
    const Caps& caps = default_caps(),
    const RecognitionTable& table = RecognitionTable::builtin());

}  // namespace centra
