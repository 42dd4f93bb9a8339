#include "pmv/checks.hpp"

#include <cmath>
#include <cstdint>

namespace pmv {

namespace {
// Exhaustive loops are capped (pairs up to a 4096-element carrier, ternary
// loops at ~2e6 tuples); larger carriers fall back to a deterministic prefix
// and report sampled-pass.
constexpr std::size_t kMaxExhaustivePairs = 4096ul * 4096ul;
constexpr std::size_t kMaxExhaustiveTriples = 2'000'000;
} // namespace

CheckSet CheckSet::make(const AlgebraPtr& M, std::size_t budget, uint64_t seed) {
    CheckSet cs;
    cs.M = M;
    cs.budget = budget == 0 ? 1 : budget;
    cs.exhaustive = M->is_finite();
    cs.points = M->sample(GridOptions{cs.exhaustive ? SIZE_MAX / 2 : cs.budget, seed});
    return cs;
}

std::size_t CheckSet::prefix_for_arity(int arity) const {
    std::size_t n = points.size();
    if (n == 0) return 0;
    if (arity <= 1) return n;
    std::size_t limit =
        exhaustive ? (arity >= 3 ? kMaxExhaustiveTriples : kMaxExhaustivePairs) : budget;
    std::size_t k = static_cast<std::size_t>(
        std::ceil(std::pow(static_cast<double>(limit), 1.0 / arity) - 1e-9));
    if (k < 1) k = 1;
    // keep full exhaustiveness whenever the tuple count fits the cap
    double full = 1;
    for (int i = 0; i < arity; i++) full *= static_cast<double>(n);
    if (full <= static_cast<double>(limit)) return n;
    return std::min(n, k);
}

SuiteReport run_check(const CheckSet& cs, const std::string& name, int arity, const CheckFn& fn) {
    SuiteReport rep;
    rep.name = name;
    std::size_t k = cs.prefix_for_arity(arity);
    bool truncated = k < cs.points.size();
    rep.status = (cs.exhaustive && !truncated) ? SuiteStatus::Pass : SuiteStatus::SampledPass;

    std::vector<PmvElement> tuple(static_cast<std::size_t>(arity < 0 ? 0 : arity));
    std::string trace;
    std::size_t evaluated = 0;
    bool failed = false;

    std::function<bool(int)> loop = [&](int pos) -> bool {
        if (pos == arity) {
            evaluated++;
            trace.clear();
            if (!fn(tuple, trace)) {
                Counterexample cex;
                cex.property = name;
                cex.elements = tuple;
                for (const auto& e : tuple) cex.printed.push_back(cs.M->print(e));
                cex.trace = trace;
                rep.counterexample = std::move(cex);
                return false;
            }
            return true;
        }
        for (std::size_t i = 0; i < k; i++) {
            tuple[static_cast<std::size_t>(pos)] = cs.points[i];
            if (!loop(pos + 1)) return false;
        }
        return true;
    };

    if (arity == 0) {
        evaluated = 1;
        if (!fn({}, trace)) {
            Counterexample cex;
            cex.property = name;
            cex.trace = trace;
            rep.counterexample = std::move(cex);
            failed = true;
        }
    } else {
        failed = !loop(0);
    }

    rep.points = evaluated;
    if (failed) rep.status = SuiteStatus::Fail;
    return rep;
}

} // namespace pmv
