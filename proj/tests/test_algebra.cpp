#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pmv/algebra.hpp"
#include "pmv/errors.hpp"
#include "pmv/ideals.hpp"
#include "test_util.hpp"

using namespace pmv;
using namespace pmv::testutil;

TEST_CASE("gamma over the integer line is a finite chain") {
    AlgebraPtr M = mv_chain(4);
    REQUIRE(M->is_finite());
    CHECK(M->size() == 5);
    auto elems = M->enumerate();
    for (long k = 0; k <= 4; k++) CHECK(elems[static_cast<size_t>(k)] == chain_el(k));
    CHECK(M->zero() == chain_el(0));
    CHECK(M->one() == chain_el(4));
}

TEST_CASE("gamma over the cocycle carrier contains exactly [0,u]") {
    AlgebraPtr M = cocycle_algebra();
    CHECK(!M->is_finite());
    CHECK(M->contains(qe(M, {Q(1, 2), Q(-9), Q(4), Q(100)}))); // lex: first coordinate decides
    CHECK(M->contains(M->zero()));
    CHECK(M->contains(M->one()));
    CHECK(!M->contains(qe(M, {Q(-1, 2), Q(0), Q(0), Q(0)})));
    CHECK(!M->contains(qe(M, {Q(1), Q(1), Q(0), Q(0)}))); // above u
}

TEST_CASE("degenerate algebra with unit zero") {
    AlgebraPtr M = mv_chain(0);
    CHECK(M->is_finite());
    CHECK(M->size() == 1);
    CHECK(M->is_degenerate());
    CHECK(check_axioms(M).passed());
}

TEST_CASE("basic operations on the 5-element chain") {
    AlgebraPtr M = mv_chain(4);
    CHECK(M->oplus(chain_el(2), chain_el(3)) == chain_el(4));
    CHECK(M->odot(chain_el(2), chain_el(3)) == chain_el(1));
    CHECK(M->minus(chain_el(1)) == chain_el(3));
    CHECK(M->sim(chain_el(1)) == chain_el(3));
}

TEST_CASE("odot on the cocycle algebra commutes with the half unit") {
    AlgebraPtr M = cocycle_algebra();
    PmvElement x = qe(M, {Q(1, 2), Q(1), Q(0), Q(0)});
    PmvElement r0 = qe(M, {Q(1, 2), Q(0), Q(0), Q(0)});
    PmvElement expect = qe(M, {Q(0), Q(1), Q(0), Q(0)});
    CHECK(M->odot(x, r0) == expect);
    CHECK(M->odot(r0, x) == expect);
}

TEST_CASE("right negation on the rational chain") {
    AlgebraPtr M = ratchain();
    CHECK(M->sim(qe(M, {Q(3, 4)})) == qe(M, {Q(1, 4)}));
    CHECK(M->minus(qe(M, {Q(3, 4)})) == qe(M, {Q(1, 4)}));
}

TEST_CASE("odot matches its negation expansion, with swapped operands") {
    for (const AlgebraPtr& M : {ratchain(), cocycle_algebra(), lexpair_algebra()}) {
        auto pts = M->sample(GridOptions{24, 0});
        for (const auto& x : pts)
            for (const auto& y : pts) {
                // (x- (+) y-)~ evaluates odot(y, x)
                CHECK(M->sim(M->oplus(M->minus(x), M->minus(y))) == M->odot(y, x));
            }
    }
}

TEST_CASE("derived operations") {
    AlgebraPtr M = mv_chain(4);
    CHECK(M->arrow(chain_el(3), chain_el(1)) == chain_el(2));
    AlgebraPtr R = ratchain();
    CHECK(R->join(qe(R, {Q(1, 4)}), qe(R, {Q(1, 2)})) == qe(R, {Q(1, 2)}));
    // A7 meet equals the chain minimum on all 25 pairs
    auto elems = M->enumerate();
    for (const auto& x : elems)
        for (const auto& y : elems) {
            PmvElement formula = M->odot(x, M->oplus(M->minus(x), y));
            PmvElement expected = M->leq(x, y) ? x : y;
            CHECK(formula == expected);
        }
}

TEST_CASE("join and meet formulas agree with the lattice on gamma carriers") {
    for (const AlgebraPtr& M : {ratchain(), cocycle_algebra(), lexpair_algebra()}) {
        auto pts = M->sample(GridOptions{20, 0});
        for (const auto& x : pts)
            for (const auto& y : pts) {
                PmvElement j1 = M->oplus(x, M->odot(M->sim(x), y));
                PmvElement j2 = M->oplus(y, M->odot(M->sim(y), x));
                PmvElement j3 = M->oplus(M->odot(x, M->minus(y)), y);
                PmvElement j4 = M->oplus(M->odot(y, M->minus(x)), x);
                PmvElement join = M->join(x, y);
                CHECK(j1 == join);
                CHECK(j2 == join);
                CHECK(j3 == join);
                CHECK(j4 == join);
                PmvElement m1 = M->odot(x, M->oplus(M->minus(x), y));
                PmvElement m2 = M->odot(M->oplus(x, M->sim(y)), y);
                PmvElement meet = M->meet(x, y);
                CHECK(m1 == meet);
                CHECK(m2 == meet);
                // y.(y -> x) = y ^ x
                CHECK(M->odot(y, M->arrow(y, x)) == meet);
            }
    }
}

TEST_CASE("partial addition") {
    AlgebraPtr M = mv_chain(4);
    CHECK(M->partial_add(chain_el(1), chain_el(2)) == chain_el(3));
    CHECK(!M->partial_add(chain_el(3), chain_el(3)));
    for (const auto& x : M->enumerate()) CHECK(M->partial_add(M->zero(), x) == x);
}

TEST_CASE("partial addition is associative where defined") {
    for (const AlgebraPtr& M : {mv_chain(4), cocycle_algebra(), mixed_product()}) {
        auto pts = M->sample(GridOptions{12, 0});
        for (const auto& x : pts)
            for (const auto& y : pts)
                for (const auto& z : pts) {
                    auto xy = M->partial_add(x, y);
                    auto yz = M->partial_add(y, z);
                    if (!xy || !yz) continue;
                    auto left = M->partial_add(*xy, z);
                    auto right = M->partial_add(x, *yz);
                    if (left && right) CHECK(*left == *right);
                    CHECK(static_cast<bool>(left) == static_cast<bool>(right));
                }
    }
}

TEST_CASE("skeleton of an interval over an infinite base is unsupported") {
    AlgebraPtr M = cocycle_algebra();
    AlgebraPtr I = interval_algebra(M, qe(M, {Q(1, 2), Q(0), Q(0), Q(0)}));
    CHECK_THROWS_AS(boolean_skeleton(I), Error);
}

TEST_CASE("ideal enumeration with a filter") {
    AlgebraPtr M = product_algebra({mv_chain(1), mv_chain(1)});
    auto proper = enumerate_ideals(M, 16, [&](const IdealSet& I) {
        return I.members.size() < M->size();
    });
    CHECK(proper.size() == 3);
}

TEST_CASE("partial addition agrees with the representing group") {
    for (const AlgebraPtr& M : {cocycle_algebra(), ratchain()}) {
        const UnitalGroup& G = M->group();
        auto pts = M->sample(GridOptions{20, 0});
        for (const auto& x : pts)
            for (const auto& y : pts) {
                auto sum = M->partial_add(x, y);
                GroupElement raw = g_add(G, x.group(), y.group());
                if (sum) {
                    CHECK(g_leq(G, raw, G.unit));
                    CHECK(sum->group() == raw);
                } else {
                    CHECK(!g_leq(G, raw, G.unit));
                }
            }
    }
}

TEST_CASE("natural multiples in both modes") {
    AlgebraPtr M = mv_chain(4);
    CHECK(M->nat_mul(3, chain_el(2), MulMode::Circled) == chain_el(4));
    CHECK(M->nat_mul(2, chain_el(2), MulMode::Partial) == chain_el(4));
    CHECK(!M->nat_mul(2, chain_el(3), MulMode::Partial));
    CHECK(M->nat_mul(0, chain_el(3), MulMode::Circled) == M->zero());
}

TEST_CASE("boolean elements and skeleton") {
    AlgebraPtr M = mv_chain(4);
    auto skel = boolean_skeleton(M);
    REQUIRE(skel.size() == 2);
    CHECK(skel[0] == chain_el(0));
    CHECK(skel[1] == chain_el(4));

    AlgebraPtr cube = boolean_cube(2);
    CHECK(boolean_skeleton(cube).size() == 4);

    AlgebraPtr R = ratchain();
    CHECK(!R->is_boolean_elem(qe(R, {Q(1, 2)})));
    auto rskel = boolean_skeleton(R);
    CHECK(rskel.size() == 2);

    auto d2 = GroupDescriptor::rat_vector(2);
    AlgebraPtr Q2 = gamma_construct(UnitalGroup::make(d2, g_make(d2, {Q(1), Q(1)})));
    CHECK(boolean_skeleton(Q2).size() == 4);

    // closure under the algebra operations
    for (const auto& a : skel) {
        CHECK(M->is_boolean_elem(M->minus(a)));
        CHECK(M->is_boolean_elem(M->sim(a)));
        for (const auto& b : skel) CHECK(M->is_boolean_elem(M->oplus(a, b)));
    }
}

TEST_CASE("axioms pass on the bundled carriers") {
    CHECK(check_axioms(mv_chain(4)).status == SuiteStatus::Pass);
    CHECK(check_axioms(boolean_cube(3)).status == SuiteStatus::Pass);
    CHECK(check_axioms(product_algebra({mv_chain(2), mv_chain(3)})).status == SuiteStatus::Pass);
    for (const AlgebraPtr& M : {ratchain(), cocycle_algebra(), lexpair_algebra()}) {
        SuiteReport rep = check_axioms(M);
        CHECK(rep.status == SuiteStatus::SampledPass);
        CHECK(rep.passed());
    }
}

TEST_CASE("a twisted table fails its axiom with a replayable witness") {
    FiniteTableData t = compile_table(mv_chain(4));
    t.minus[1] = 2; // (1-)~ becomes 2~ = 2 != 1
    AlgebraPtr broken = Algebra::table(std::move(t));
    SuiteReport rep = check_axioms(broken);
    CHECK(!rep.passed());
    REQUIRE(rep.counterexample);
    CHECK(replay_axiom(broken, *rep.counterexample));
    bool a8_failed = false;
    for (const auto& sub : rep.sub)
        if (sub.name == "A8" && sub.status == SuiteStatus::Fail) a8_failed = true;
    CHECK(a8_failed);
}

TEST_CASE("symmetry") {
    CHECK(is_symmetric(ratchain()).symmetric);
    auto cc = is_symmetric(cocycle_algebra());
    CHECK(cc.symmetric);
    CHECK(!cc.exhaustive); // grid verdict
    FiniteTableData t = compile_table(mv_chain(2));
    t.sim[1] = 0; // detach the right negation at one entry
    auto res = is_symmetric(Algebra::table(std::move(t)));
    CHECK(!res.symmetric);
    REQUIRE(res.witness);
    CHECK(res.witness->index() == 1);
}

TEST_CASE("interval of the 5-element chain below 2 is the 3-element chain") {
    AlgebraPtr M = mv_chain(4);
    AlgebraPtr I = interval_algebra(M, chain_el(2));
    REQUIRE(I->is_finite());
    CHECK(compile_table(I).same_tables(compile_table(mv_chain(2))));
}

TEST_CASE("interval at the top is the algebra itself") {
    AlgebraPtr M = mv_chain(3);
    CHECK(interval_algebra(M, M->one()) == M);
}

TEST_CASE("intervals of finite algebras satisfy the axioms at every bound") {
    for (const AlgebraPtr& M :
         {mv_chain(3), boolean_cube(2), product_algebra({mv_chain(1), mv_chain(2)})}) {
        for (const auto& a : M->enumerate()) {
            AlgebraPtr I = interval_algebra(M, a);
            CHECK(check_axioms(I).passed());
        }
    }
}

TEST_CASE("interval over a product splits componentwise") {
    AlgebraPtr M = mixed_product();
    PmvElement v(std::vector<PmvElement>{chain_el(1), qe(ratchain(), {Q(0)})});
    AlgebraPtr I = interval_algebra(M, v);
    REQUIRE(I->is_finite());
    CHECK(I->size() == 2);
}

TEST_CASE("interval bound outside the algebra is rejected") {
    AlgebraPtr M = mv_chain(3);
    CHECK_THROWS_AS(interval_algebra(M, chain_el(9)), Error);
}

TEST_CASE("n-divisibility") {
    auto r4 = is_n_divisible(mv_chain(4), 2);
    CHECK(!r4.divisible);
    CHECK(r4.exhaustive);
    REQUIRE(r4.witness);
    CHECK(*r4.witness == chain_el(1));

    CHECK(is_n_divisible(ratchain(), 2).divisible);
    CHECK(is_n_divisible(ratchain(), 3).divisible);
    CHECK(is_n_divisible(cocycle_algebra(), 2).divisible);
    CHECK(is_n_divisible(lexpair_algebra(), 2).divisible);
    // only 0 has a half in a Boolean algebra: y+y needs y.y = 0
    auto bc = is_n_divisible(boolean_cube(2), 2);
    CHECK(!bc.divisible);
    REQUIRE(bc.witness);
    CHECK(!(*bc.witness == boolean_cube(2)->zero()));
}

TEST_CASE("De Morgan exchange of the negations") {
    for (const AlgebraPtr& M : {cocycle_algebra(), lexpair_algebra()}) {
        auto pts = M->sample(GridOptions{20, 0});
        for (const auto& x : pts)
            for (const auto& y : pts)
                CHECK(M->sim(M->oplus(M->minus(x), M->minus(y))) ==
                      M->minus(M->oplus(M->sim(x), M->sim(y))));
    }
}

TEST_CASE("elements outside the algebra are rejected") {
    AlgebraPtr M = mv_chain(3);
    CHECK_THROWS_AS(M->oplus(chain_el(1), chain_el(7)), Error);
    AlgebraPtr R = ratchain();
    CHECK_THROWS_AS(R->minus(qe(R, {Q(3, 2)})), Error);
}

TEST_CASE("infinite samples are deterministic and hit the budget") {
    for (const AlgebraPtr& M : {ratchain(), cocycle_algebra(), lexpair_algebra()}) {
        auto s1 = M->sample(GridOptions{512, 0});
        auto s2 = M->sample(GridOptions{512, 0});
        REQUIRE(s1.size() == 512);
        for (size_t i = 0; i < s1.size(); i++) CHECK(s1[i] == s2[i]);
        for (const auto& x : s1) CHECK(M->contains(x));
    }
}

TEST_CASE("product sampling covers both factors") {
    AlgebraPtr M = mixed_product();
    auto pts = M->sample(GridOptions{64, 0});
    bool saw_one_left = false, saw_nonzero_right = false;
    for (const auto& p : pts) {
        if (p.tuple()[0] == chain_el(1)) saw_one_left = true;
        if (!(p.tuple()[1] == PmvElement(g_zero(GroupDescriptor::rat_vector(1))))) {
            saw_nonzero_right = true;
        }
    }
    CHECK(saw_one_left);
    CHECK(saw_nonzero_right);
}

TEST_CASE("compile_table freezes the operations faithfully") {
    AlgebraPtr M = product_algebra({mv_chain(1), mv_chain(2)});
    FiniteTableData t = compile_table(M);
    AlgebraPtr T = Algebra::table(t);
    auto elems = M->enumerate();
    REQUIRE(t.n == elems.size());
    for (size_t i = 0; i < t.n; i++) {
        for (size_t j = 0; j < t.n; j++) {
            CHECK(T->oplus(PmvElement(i), PmvElement(j)) ==
                  PmvElement(t.oplus[i * t.n + j]));
            PmvElement via_m = M->oplus(elems[i], elems[j]);
            CHECK(M->print(via_m) == t.labels[t.oplus[i * t.n + j]]);
        }
    }
}
