#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pmv/algebra.hpp"

namespace pmv {

/// Subset of a finite algebra, stored as sorted enumeration indices.
struct IdealSet {
    AlgebraPtr base;
    std::vector<std::size_t> members;

    bool contains_index(std::size_t i) const;
};

enum class IdealKind { Ideal, Normal, Prime, Maximal };

/// Literal definition checks over a finite carrier.  `Ideal` is downward
/// closure plus oplus-closure; `Normal` is x+I = I+x for every x, cross
/// validated against the criterion "x.y- in I iff y~.x in I"; `Prime` means
/// a proper ideal with x^y in I forcing x in I or y in I; `Maximal` means
/// proper with no proper extension.  Throws on infinite carriers.
bool ideal_predicate(const AlgebraPtr& M, const IdealSet& S, IdealKind which);

IdealSet ideal_from_elements(const AlgebraPtr& M, const std::vector<PmvElement>& elems);

using IdealFilter = std::function<bool(const IdealSet&)>;

/// All ideals of a finite algebra in a deterministic order (generated as
/// down-sets first, then filtered for oplus-closure), optionally restricted
/// by a predicate.  The carrier may have at most `max_size` elements.
std::vector<IdealSet> enumerate_ideals(const AlgebraPtr& M, std::size_t max_size = 16,
                                       const IdealFilter& filter = {});

/// M/I as an explicit table on congruence classes (x ~ y iff x.y- and y.x-
/// lie in I); class representatives are minimal in enumeration order.
/// Rejects ideals that are not normal.
AlgebraPtr quotient_algebra(const AlgebraPtr& M, const IdealSet& I);

/// Every polar a^ = {x : x ^ a = 0} must be a normal ideal.
bool is_representable(const AlgebraPtr& M);

} // namespace pmv
