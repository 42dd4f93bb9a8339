#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pmv/algebra.hpp"
#include "pmv/report.hpp"

namespace pmv {

/// Test-point set for one algebra: the full carrier when finite, the
/// deterministic grid otherwise.  Checks of arity k iterate over k-tuples
/// from a prefix sized so the tuple count stays near the budget.
struct CheckSet {
    AlgebraPtr M;
    std::vector<PmvElement> points;
    bool exhaustive = false;
    std::size_t budget = 512;

    static CheckSet make(const AlgebraPtr& M, std::size_t budget, uint64_t seed);

    std::size_t prefix_for_arity(int arity) const;
};

/// Predicate over a bound tuple; returns false on violation and fills
/// `trace` with the evaluated mismatch.
using CheckFn = std::function<bool(const std::vector<PmvElement>&, std::string&)>;

/// Runs one named check at the given arity, stopping at the first
/// counterexample.  Status is Pass when the point set is exhaustive and not
/// truncated, SampledPass otherwise, Fail on violation.
SuiteReport run_check(const CheckSet& cs, const std::string& name, int arity, const CheckFn& fn);

} // namespace pmv
