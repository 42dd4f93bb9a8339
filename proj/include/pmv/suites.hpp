#pragma once

#include <string>
#include <vector>

#include "pmv/algebra.hpp"
#include "pmv/report.hpp"
#include "pmv/sqrt.hpp"

namespace pmv {

struct SuiteOptions {
    std::size_t budget = 512;
    uint64_t seed = 0;
    std::size_t depth = 8;       // orbit length for the orbit-based suites
    unsigned long pow_max = 5;   // largest exponent for the power law
};

/// Names accepted by run_property_suite, in display order.
const std::vector<std::string>& suite_catalog();

/// Runs one named property suite.  Suites marked as needing a witness throw
/// when `r` is null.  Results are exhaustive over finite carriers and
/// grid-sampled otherwise.
SuiteReport run_property_suite(const std::string& name, const AlgebraPtr& M, const SqrtWitness* r,
                               const SuiteOptions& opts = {});

/// Re-evaluates a suite counterexample; true when it still violates.
bool replay_suite(const AlgebraPtr& M, const SqrtWitness* r, const Counterexample& cex,
                  const SuiteOptions& opts = {});

} // namespace pmv
