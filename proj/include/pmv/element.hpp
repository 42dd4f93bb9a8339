#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "pmv/group.hpp"

namespace pmv {

/// Element of a pseudo MV-algebra.  The payload is shaped by the algebra
/// form it belongs to: an index into a finite table, a group element in
/// [0,u], or a tuple of factor elements.  Interval elements reuse the base
/// algebra's shape.
struct PmvElement {
    std::variant<std::size_t, GroupElement, std::vector<PmvElement>> v;

    PmvElement() : v(std::size_t{0}) {}
    explicit PmvElement(std::size_t index) : v(index) {}
    explicit PmvElement(GroupElement g) : v(std::move(g)) {}
    explicit PmvElement(std::vector<PmvElement> tuple) : v(std::move(tuple)) {}

    bool is_index() const { return std::holds_alternative<std::size_t>(v); }
    bool is_group() const { return std::holds_alternative<GroupElement>(v); }
    bool is_tuple() const { return std::holds_alternative<std::vector<PmvElement>>(v); }

    std::size_t index() const { return std::get<std::size_t>(v); }
    const GroupElement& group() const { return std::get<GroupElement>(v); }
    const std::vector<PmvElement>& tuple() const { return std::get<std::vector<PmvElement>>(v); }

    bool operator==(const PmvElement& o) const { return v == o.v; }
    bool operator!=(const PmvElement& o) const { return !(v == o.v); }
};

/// Strict total order on same-shape elements; used for deduplication and the
/// fixed carrier enumeration order, independent of the algebra order.
bool element_key_less(const PmvElement& a, const PmvElement& b);

/// Algebra-independent display form (table indices print as #k).
std::string print_raw(const PmvElement& x);

} // namespace pmv
