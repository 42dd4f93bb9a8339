#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmv/grid.hpp"
#include "pmv/rational.hpp"

namespace pmv {

enum class VecOrder { Product, Lex };

/// Result of comparing two elements of a partially ordered carrier.
enum class Cmp { LT, EQ, GT, Incomparable };

class GroupDescriptor;
using DescriptorPtr = std::shared_ptr<const GroupDescriptor>;

/// Shape of a lattice-ordered group carrier.
///
/// Kinds:
///  - IntVector(dims, order): integer vectors under componentwise or
///    lexicographic order.
///  - RatVector(dims, order): rational vectors, same orders.
///  - CocycleQ4: Q^4 with the twisted addition
///      (a,b,c,d)+(x,y,z,w) = (a+x, b+y, c+z, d+w+b*z)
///    and plain lexicographic order; non-abelian, linearly ordered,
///    two-divisible.
///  - LexPair(h, g): the lexicographic product of h and g; h must describe a
///    linearly ordered group.  Group addition is componentwise.
class GroupDescriptor : public std::enable_shared_from_this<GroupDescriptor> {
public:
    enum class Kind { IntVector, RatVector, CocycleQ4, LexPair };

    static DescriptorPtr int_vector(int dims, VecOrder order = VecOrder::Product);
    static DescriptorPtr rat_vector(int dims, VecOrder order = VecOrder::Product);
    static DescriptorPtr cocycle_q4();
    static DescriptorPtr lex_pair(DescriptorPtr h, DescriptorPtr g);

    Kind kind() const { return kind_; }
    /// Total coordinate count (CocycleQ4: 4; LexPair: dims(h)+dims(g)).
    int dims() const { return dims_; }
    VecOrder order() const { return order_; }
    const DescriptorPtr& lex_h() const { return lex_h_; }
    const DescriptorPtr& lex_g() const { return lex_g_; }

    bool linearly_ordered() const;
    bool two_divisible() const;
    /// True when coordinates are constrained to integers.
    bool integral_coords() const;

    bool same_as(const GroupDescriptor& o) const;
    std::string describe() const;

private:
    GroupDescriptor() = default;

    Kind kind_ = Kind::IntVector;
    int dims_ = 0;
    VecOrder order_ = VecOrder::Product;
    DescriptorPtr lex_h_;
    DescriptorPtr lex_g_;
};

/// Element of a carrier: a coordinate vector tagged with its descriptor.
struct GroupElement {
    DescriptorPtr desc;
    std::vector<Rational> coords;

    bool operator==(const GroupElement& o) const { return coords == o.coords; }
};

/// A carrier together with a designated unit element u >= 0.  For a nonzero
/// unit the strong-unit property (every sampled g lies below some n*u) is
/// checked on a deterministic sample at construction; u = 0 designates the
/// degenerate interval {0}.
struct UnitalGroup {
    DescriptorPtr desc;
    GroupElement unit;

    static UnitalGroup make(DescriptorPtr desc, GroupElement unit);
};

GroupElement g_zero(const DescriptorPtr& desc);
/// Validates coordinate count and (for integer carriers) integrality.
GroupElement g_make(const DescriptorPtr& desc, std::vector<Rational> coords);

GroupElement g_add(const UnitalGroup& G, const GroupElement& x, const GroupElement& y);
GroupElement g_neg(const UnitalGroup& G, const GroupElement& x);
/// x + (-y); note the operand order matters on non-abelian carriers.
GroupElement g_sub(const UnitalGroup& G, const GroupElement& x, const GroupElement& y);
Cmp g_compare(const UnitalGroup& G, const GroupElement& x, const GroupElement& y);
bool g_leq(const UnitalGroup& G, const GroupElement& x, const GroupElement& y);
std::pair<GroupElement, GroupElement> g_meet_join(const UnitalGroup& G, const GroupElement& x,
                                                  const GroupElement& y);
GroupElement g_nmul(const UnitalGroup& G, unsigned long n, const GroupElement& x);
/// The element h with 2h = x, when one exists; absence is a value.
std::optional<GroupElement> g_halve(const UnitalGroup& G, const GroupElement& x);
/// The element h with n*h = x, when one exists (n >= 1).
std::optional<GroupElement> g_divn(const UnitalGroup& G, unsigned long n, const GroupElement& x);

bool is_two_divisible(const UnitalGroup& G);

/// Centrality decision.  All bundled carriers have closed forms, so the
/// result is proved; `note` records the rule used.
struct Centrality {
    bool central;
    bool proved;
    std::string note;
};
Centrality is_central(const UnitalGroup& G, const GroupElement& x);

bool g_commutes(const UnitalGroup& G, const GroupElement& x, const GroupElement& y);

/// (g+, g-) with g+ = g v 0 and g- = (-g) v 0; g = g+ - (g-) orientationally
/// as g+ + (g ^ 0).
std::pair<GroupElement, GroupElement> pos_neg_parts(const UnitalGroup& G, const GroupElement& g);

/// True iff 0 <= x <= u.
bool g_in_unit_interval(const UnitalGroup& G, const GroupElement& x);

/// Deterministic sample of carrier elements: small-coordinate pool vectors
/// first (sorted by magnitude), then seeded pseudorandom vectors with
/// denominators <= 16, then midpoint closure on two-divisible carriers until
/// the budget is reached or the carrier saturates.
std::vector<GroupElement> group_grid(const DescriptorPtr& desc, const GridOptions& opts);

/// Strict total order on same-shape elements (coordinate-lexicographic);
/// used for deduplication and deterministic enumeration, independent of the
/// carrier's own partial order.
bool element_key_less(const GroupElement& a, const GroupElement& b);

std::string print_element(const GroupElement& x);

/// Throws when some sampled element exceeds every n*u with n up to 2^40.
void check_strong_unit(const UnitalGroup& G, const std::vector<GroupElement>& sample);

} // namespace pmv
