#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmv/algebra.hpp"
#include "pmv/report.hpp"

namespace pmv {

struct SearchOptions {
    std::size_t budget = 512;
    uint64_t seed = 0; // accepted for interface uniformity; the search is seed-independent
};

struct SearchResult {
    AlgebraPtr model;
    std::vector<long> chain_lengths; // factor chains Gamma(Z, n): the n values
    std::string shape;
    SuiteReport failure;
    std::size_t models_tested = 0;
};

/// Finite-model search: enumerates linearly ordered carriers (chains) and
/// products of chains with carrier size <= max_size, larger carriers first
/// (within one size: the chain, then products with lexicographically larger
/// factor lists).  Each model is validated against the defining axioms, the
/// property is evaluated, and the first violator is returned.  Enumeration
/// order is fixed, so results are identical across runs and seeds.
///
/// Properties: "A1-A8" (the axioms themselves), "Sq1-solvability" (every x
/// has y with y.y = x), or any property-suite name, evaluated only on models
/// that possess a square root.
std::optional<SearchResult> counterexample_search(const std::string& property,
                                                  std::size_t max_size,
                                                  const SearchOptions& opts = {});

} // namespace pmv
