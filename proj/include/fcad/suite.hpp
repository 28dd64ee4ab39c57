#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fcad/json_io.hpp"
#include "fcad/kernel.hpp"

namespace fcad {

// Registered check names, in report order.
std::vector<std::string> suite_check_names();

struct SuiteConfig {
    std::uint64_t seed = 1;
    int count = 50;      // random instances per check
    int max_attrs = 5;   // >= 1
    int max_objects = 5; // >= 1
    int max_poset = 5;   // >= 1
    int depth = 32;      // chain truncation depth
    // Defaults to every registered check; an explicitly empty list runs
    // nothing and reports success.
    std::vector<std::string> checks = suite_check_names();
    BracketMutation mutate = BracketMutation::None;  // deliberate-corruption hook
};

struct CheckResult {
    std::string name;
    bool pass = true;
    int instances = 0;  // cases exercised
    std::string counterexample;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<CheckResult> results;

    bool ok() const;
    std::string to_text() const;
    json to_json() const;
};

// Runs the selected checks as independent tasks. Unknown check names are
// InvalidInput. Failures land in the report, never throw.
SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace fcad
