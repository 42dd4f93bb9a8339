#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmv/element.hpp"
#include "pmv/json_min.hpp"

namespace pmv {

enum class SuiteStatus { Pass, SampledPass, Fail };

std::string status_name(SuiteStatus s);

/// A concrete violation: the property that failed, the elements it failed
/// at (replayable through the library), their printed forms, and a short
/// evaluation trace.
struct Counterexample {
    std::string property;
    std::vector<PmvElement> elements;
    std::vector<std::string> printed;
    std::string trace;

    JsonValue to_json() const;
};

/// Result of one property/axiom/suite run.  `points` counts evaluated test
/// tuples.  Composite runs (the axiom checker, multi-part suites) populate
/// `sub` with one entry per named check; a failing report always carries a
/// counterexample.
struct SuiteReport {
    std::string name;
    SuiteStatus status = SuiteStatus::Pass;
    std::size_t points = 0;
    std::optional<Counterexample> counterexample;
    std::vector<SuiteReport> sub;

    bool passed() const { return status != SuiteStatus::Fail; }

    /// Aggregates child results into this report (status, points, first
    /// counterexample).
    void absorb(SuiteReport child);

    std::string summary_line() const;
    JsonValue to_json() const;
};

} // namespace pmv
