#pragma once

#include <string>
#include <vector>

#include "pmv/algebra.hpp"
#include "pmv/group.hpp"
#include "pmv/rational.hpp"

namespace pmv::testutil {

inline Rational Q(long num, long den = 1) { return Rational(num, den); }

inline UnitalGroup int_line() {
    auto d = GroupDescriptor::int_vector(1);
    return UnitalGroup::make(d, g_make(d, {Q(1)}));
}

inline UnitalGroup cocycle_group() {
    auto d = GroupDescriptor::cocycle_q4();
    return UnitalGroup::make(d, g_make(d, {Q(1), Q(0), Q(0), Q(0)}));
}

inline UnitalGroup rat_line() {
    auto d = GroupDescriptor::rat_vector(1);
    return UnitalGroup::make(d, g_make(d, {Q(1)}));
}

inline UnitalGroup lexpair_qq() {
    auto d = GroupDescriptor::lex_pair(GroupDescriptor::rat_vector(1),
                                       GroupDescriptor::rat_vector(1));
    return UnitalGroup::make(d, g_make(d, {Q(1), Q(0)}));
}

inline GroupElement ge(const UnitalGroup& G, std::vector<Rational> coords) {
    return g_make(G.desc, std::move(coords));
}

inline AlgebraPtr ratchain() { return gamma_construct(rat_line()); }
inline AlgebraPtr cocycle_algebra() { return gamma_construct(cocycle_group()); }
inline AlgebraPtr lexpair_algebra() { return gamma_construct(lexpair_qq()); }
inline AlgebraPtr mixed_product() {
    return product_algebra({mv_chain(1), ratchain()});
}
inline AlgebraPtr five_factor() {
    return product_algebra({ratchain(), mv_chain(1), ratchain(), mv_chain(1), ratchain()});
}

inline PmvElement qe(const AlgebraPtr& gamma, std::vector<Rational> coords) {
    return PmvElement(g_make(gamma->group().desc, std::move(coords)));
}

inline PmvElement chain_el(long k) {
    auto d = GroupDescriptor::int_vector(1);
    return PmvElement(g_make(d, {Q(k)}));
}

} // namespace pmv::testutil
