#include "pmv/search.hpp"

#include <algorithm>

#include "pmv/errors.hpp"
#include "pmv/sqrt.hpp"
#include "pmv/suites.hpp"

namespace pmv {

namespace {

// Factorizations of s into nonincreasing factors >= 2; the plain chain [s]
// comes first, then products with more factors.
void factorizations(std::size_t s, std::size_t max_factor, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
    if (s == 1) {
        if (cur.size() >= 2) out.push_back(cur);
        return;
    }
    for (std::size_t f = std::min(max_factor, s); f >= 2; f--) {
        if (s % f != 0) continue;
        cur.push_back(static_cast<long>(f));
        factorizations(s / f, f, cur, out);
        cur.pop_back();
    }
}

AlgebraPtr build_model(const std::vector<long>& sizes) {
    if (sizes.size() == 1) return mv_chain(sizes[0] - 1);
    std::vector<AlgebraPtr> parts;
    parts.reserve(sizes.size());
    for (long s : sizes) parts.push_back(mv_chain(s - 1));
    return product_algebra(std::move(parts));
}

std::string shape_of(const std::vector<long>& sizes) {
    if (sizes.size() == 1) return "chain with " + std::to_string(sizes[0]) + " elements";
    std::string out = "product of chains [";
    for (std::size_t i = 0; i < sizes.size(); i++) {
        if (i) out += ",";
        out += std::to_string(sizes[i]);
    }
    return out + "]";
}

std::optional<SuiteReport> evaluate_property(const std::string& property, const AlgebraPtr& M,
                                             const SearchOptions& opts) {
    CheckOptions copts{opts.budget, opts.seed};
    if (property == "A1-A8") return check_axioms(M, copts);
    if (property == "Sq1-solvability") {
        SuiteReport rep;
        rep.name = "Sq1-solvability";
        rep.status = SuiteStatus::Pass;
        auto elems = M->enumerate();
        for (const auto& x : elems) {
            rep.points++;
            bool solvable = false;
            for (const auto& y : elems) {
                if (M->odot(y, y) == x) {
                    solvable = true;
                    break;
                }
            }
            if (!solvable) {
                rep.status = SuiteStatus::Fail;
                Counterexample cex;
                cex.property = "Sq1-solvability";
                cex.elements = {x};
                cex.printed = {M->print(x)};
                cex.trace = "no y with y.y = x";
                rep.counterexample = std::move(cex);
                return rep;
            }
        }
        return rep;
    }
    // property-suite names: only models possessing a square root are judged
    CandidateResult cand = candidate_sqrt(M, copts);
    if (!cand.witness) return std::nullopt;
    return run_property_suite(property, M, &*cand.witness, SuiteOptions{opts.budget, opts.seed});
}

} // namespace

std::optional<SearchResult> counterexample_search(const std::string& property,
                                                  std::size_t max_size,
                                                  const SearchOptions& opts) {
    if (max_size < 1) throw Error("max_size must be >= 1");
    std::size_t tested = 0;
    for (std::size_t s = max_size; s >= 1; s--) {
        std::vector<std::vector<long>> shapes;
        shapes.push_back({static_cast<long>(s)}); // the chain itself
        std::vector<long> cur;
        std::vector<std::vector<long>> products;
        factorizations(s, s - 1 < 2 ? 2 : s - 1, cur, products);
        for (auto& p : products) shapes.push_back(std::move(p));
        for (const auto& sizes : shapes) {
            AlgebraPtr M = build_model(sizes);
            SuiteReport axioms = check_axioms(M);
            if (!axioms.passed()) continue; // only valid algebras enter the search space
            auto verdict = evaluate_property(property, M, opts);
            tested++;
            if (verdict && !verdict->passed()) {
                SearchResult res;
                res.model = M;
                for (long sz : sizes) res.chain_lengths.push_back(sz - 1);
                res.shape = shape_of(sizes);
                res.failure = std::move(*verdict);
                res.models_tested = tested;
                return res;
            }
        }
        if (s == 1) break;
    }
    return std::nullopt;
}

} // namespace pmv
