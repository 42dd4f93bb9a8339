#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmv/json_min.hpp"

namespace pmv {

/// Outcome of one CLI invocation.  Exit codes: 0 pass/success, 1 property
/// failure (a counterexample is printed), 2 usage or parse error.
struct CommandResult {
    int code = 0;
    std::string out;               // human-readable text (one trailing newline)
    std::optional<JsonValue> json; // present when --json was given
};

/// Dispatches one command line (without the program name):
///   check-axioms <spec> [--budget N] [--seed S] [--json]
///   sqrt <spec> [--element E] [--budget N] [--seed S] [--json]
///   classify <spec> [--budget N] [--seed S] [--json]
///   suite <name> <spec> [--budget N] [--seed S] [--depth D] [--json]
///   ideals <spec> [--max-size K] [--json]
///   counterexample --property <name> [--max-size K] [--seed S] [--json]
CommandResult run_command(const std::vector<std::string>& argv);

std::string usage_text();

} // namespace pmv
