#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "pmv/errors.hpp"
#include "pmv/sqrt.hpp"
#include "test_util.hpp"

using namespace pmv;
using namespace pmv::testutil;

namespace {

// Independent oracle: enumerate every map r with r(x).r(x) = x pointwise
// (the only values Sq1 allows), then filter by Sq2 and Sq3 exhaustively.
// Complete for the carrier sizes used here.
std::vector<std::vector<PmvElement>> brute_force_sqrts(const AlgebraPtr& M) {
    auto elems = M->enumerate();
    const size_t n = elems.size();
    std::vector<std::vector<size_t>> cand(n);
    for (size_t xi = 0; xi < n; xi++)
        for (size_t yi = 0; yi < n; yi++)
            if (M->odot(elems[yi], elems[yi]) == elems[xi]) cand[xi].push_back(yi);

    std::vector<std::vector<PmvElement>> found;
    std::vector<size_t> pick(n, 0);
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == n) {
            auto r = [&](const PmvElement& x) {
                for (size_t i = 0; i < n; i++)
                    if (elems[i] == x) return elems[pick[i]];
                throw Error("outside carrier");
            };
            // Sq2
            for (size_t yi = 0; yi < n; yi++)
                for (size_t xi = 0; xi < n; xi++) {
                    if (!M->leq(M->odot(elems[yi], elems[yi]), elems[xi])) continue;
                    if (!M->leq(elems[yi], elems[pick[xi]])) return;
                }
            // Sq3
            PmvElement r0 = elems[pick[0]];
            for (size_t i = 0; i < n; i++)
                if (elems[i] == M->zero()) r0 = elems[pick[i]];
            for (size_t xi = 0; xi < n; xi++) {
                PmvElement rx = elems[pick[xi]];
                if (!(r(M->minus(elems[xi])) == M->arrow(rx, r0))) return;
                if (!(r(M->sim(elems[xi])) == M->squig(rx, r0))) return;
            }
            std::vector<PmvElement> map;
            for (size_t i = 0; i < n; i++) map.push_back(elems[pick[i]]);
            found.push_back(std::move(map));
            return;
        }
        for (size_t c : cand[pos]) {
            pick[pos] = c;
            rec(pos + 1);
        }
    };
    rec(0);
    return found;
}

} // namespace

TEST_CASE("brute-force enumeration agrees with the candidate decision") {
    std::vector<AlgebraPtr> models = {mv_chain(0), mv_chain(1), mv_chain(2),  mv_chain(3),
                                      mv_chain(4), mv_chain(5), boolean_cube(2),
                                      product_algebra({mv_chain(1), mv_chain(2)})};
    for (const auto& M : models) {
        auto oracle = brute_force_sqrts(M);
        CHECK(oracle.size() <= 1); // uniqueness
        CandidateResult cand = candidate_sqrt(M);
        if (oracle.empty()) {
            CHECK(!cand.witness);
            CHECK(cand.violation);
        } else {
            REQUIRE(cand.witness);
            auto elems = M->enumerate();
            for (size_t i = 0; i < elems.size(); i++)
                CHECK((*cand.witness)(elems[i]) == oracle[0][i]);
        }
    }
}

TEST_CASE("candidate returns the identity exactly on the tiny chains and cubes") {
    for (const AlgebraPtr& M : {mv_chain(0), mv_chain(1), boolean_cube(2), boolean_cube(3)}) {
        CandidateResult cand = candidate_sqrt(M);
        REQUIRE(cand.witness);
        CHECK(cand.witness->form() == SqrtWitness::Form::Identity);
        CHECK(cand.witness->verified() == VerifyLevel::Exhaustive);
    }
}

TEST_CASE("candidate is absent on the longer chains, with an Sq1 witness") {
    for (long n = 2; n <= 8; n++) {
        CandidateResult cand = candidate_sqrt(mv_chain(n));
        CHECK(!cand.witness);
        REQUIRE(cand.violation);
        CHECK(cand.violation->property == "Sq1");
    }
    // the recorded counterexample for the 5-element chain: r(1) = 2 fails Sq1
    CandidateResult c4 = candidate_sqrt(mv_chain(4));
    REQUIRE(c4.violation);
    CHECK(c4.violation->elements.at(0) == chain_el(1));
    CHECK(c4.violation->trace.find("r(x) = 2") != std::string::npos);
}

TEST_CASE("candidate on an infinite carrier is only a diagnostic") {
    CandidateResult res = candidate_sqrt(ratchain(), CheckOptions{64, 0});
    REQUIRE(res.witness);
    CHECK(res.witness->verified() == VerifyLevel::Unverified);
    CHECK(res.note.find("not a decision") != std::string::npos);
    // the grid maximum is a lower bound for the true square root
    AlgebraPtr M = ratchain();
    SqrtWitness exact = *closed_form_sqrt(M).witness;
    for (const auto& x : M->sample(GridOptions{64, 0}))
        CHECK(M->leq((*res.witness)(x), exact(x)));
}

TEST_CASE("closed-form square root on the rational chain") {
    AlgebraPtr M = ratchain();
    ClosedFormResult res = closed_form_sqrt(M);
    REQUIRE(res.witness);
    const SqrtWitness& r = *res.witness;
    CHECK(r.form() == SqrtWitness::Form::ClosedHalfUnit);
    CHECK(r.verified() == VerifyLevel::Sampled);
    CHECK(r(M->zero()) == qe(M, {Q(1, 2)}));
    CHECK(r(qe(M, {Q(1, 4)})) == qe(M, {Q(5, 8)}));
    CHECK(is_strict(M, r));
}

TEST_CASE("closed-form square root on the cocycle algebra") {
    AlgebraPtr M = cocycle_algebra();
    ClosedFormResult res = closed_form_sqrt(M);
    REQUIRE(res.witness);
    const SqrtWitness& r = *res.witness;
    PmvElement x = qe(M, {Q(1, 2), Q(1), Q(0), Q(0)});
    PmvElement rx = r(x);
    CHECK(rx == qe(M, {Q(3, 4), Q(1, 2), Q(0), Q(0)}));
    CHECK(M->odot(rx, rx) == x); // Sq1 re-verified by direct evaluation
    CHECK(r(M->zero()) == qe(M, {Q(1, 2), Q(0), Q(0), Q(0)}));
    CHECK(is_strict(M, r));
}

TEST_CASE("closed form is absent without two-divisibility") {
    ClosedFormResult res = closed_form_sqrt(mv_chain(4));
    CHECK(!res.witness);
    CHECK(res.reason.find("two-divisible") != std::string::npos);
}

TEST_CASE("componentwise witness over a product") {
    AlgebraPtr B = mv_chain(1);
    AlgebraPtr R = ratchain();
    AlgebraPtr M = product_algebra({B, R});
    SqrtWitness idw = *candidate_sqrt(B).witness;
    SqrtWitness rw = *closed_form_sqrt(R).witness;
    SqrtWitness w = product_sqrt(M, {idw, rw});
    CHECK(w.verified() == VerifyLevel::Sampled); // weakest component level
    PmvElement x(std::vector<PmvElement>{chain_el(1), qe(R, {Q(0)})});
    PmvElement rx = w(x);
    CHECK(rx == PmvElement(std::vector<PmvElement>{chain_el(1), qe(R, {Q(1, 2)})}));
    CHECK(verify_sqrt(M, w).passed());

    SqrtWitness ids = product_sqrt(product_algebra({B, B}), {idw, idw});
    CHECK(ids(PmvElement(std::vector<PmvElement>{chain_el(1), chain_el(0)})) ==
          PmvElement(std::vector<PmvElement>{chain_el(1), chain_el(0)}));
}

TEST_CASE("double rational closed form componentwise") {
    AlgebraPtr R = ratchain();
    AlgebraPtr M = product_algebra({R, R});
    SqrtWitness w = product_sqrt(M, {*closed_form_sqrt(R).witness, *closed_form_sqrt(R).witness});
    PmvElement z = M->zero();
    CHECK(w(z) == PmvElement(std::vector<PmvElement>{qe(R, {Q(1, 2)}), qe(R, {Q(1, 2)})}));
}

TEST_CASE("lexicographic-pair square root") {
    AlgebraPtr M = lexpair_algebra();
    ClosedFormResult res = hperfect_sqrt(M);
    REQUIRE(res.witness);
    const SqrtWitness& r = *res.witness;
    CHECK(r.form() == SqrtWitness::Form::HPerfect);
    CHECK(r(M->zero()) == qe(M, {Q(1, 2), Q(0)}));
    CHECK(r(qe(M, {Q(0), Q(3)})) == qe(M, {Q(1, 2), Q(3, 2)}));
    for (long g = -3; g <= 3; g++)
        CHECK(r(qe(M, {Q(1, 2), Q(g)})) == qe(M, {Q(3, 4), Q(g, 2)}));
    // Sq1 re-verified at a sample point
    PmvElement x = qe(M, {Q(0), Q(3)});
    CHECK(M->odot(r(x), r(x)) == x);
}

TEST_CASE("lexicographic pair over the integers") {
    // nontrivial second component: no square root
    auto d_bad = GroupDescriptor::lex_pair(GroupDescriptor::int_vector(1),
                                           GroupDescriptor::rat_vector(1));
    AlgebraPtr bad = gamma_construct(UnitalGroup::make(d_bad, g_make(d_bad, {Q(1), Q(0)})));
    ClosedFormResult res = hperfect_sqrt(bad);
    CHECK(!res.witness);
    CHECK(res.reason.find("integers") != std::string::npos);

    // trivial second component: the two-element Boolean algebra, identity root
    auto d_ok = GroupDescriptor::lex_pair(GroupDescriptor::int_vector(1),
                                          GroupDescriptor::rat_vector(0));
    AlgebraPtr ok = gamma_construct(UnitalGroup::make(d_ok, g_make(d_ok, {Q(1)})));
    ClosedFormResult res2 = hperfect_sqrt(ok);
    REQUIRE(res2.witness);
    CHECK(res2.witness->form() == SqrtWitness::Form::Identity);
}

TEST_CASE("the two lex-pair forms agree wherever both apply") {
    AlgebraPtr M = lexpair_algebra();
    SqrtWitness hp = *hperfect_sqrt(M).witness;
    SqrtWitness ch = *closed_form_sqrt(M).witness;
    for (const auto& x : M->sample(GridOptions{256, 0})) CHECK(hp(x) == ch(x));
}

TEST_CASE("verify_sqrt rejects a bad map") {
    AlgebraPtr M = mv_chain(4);
    SqrtFn all_one = [&](const PmvElement&) { return chain_el(1); };
    SuiteReport rep = verify_sqrt(M, all_one);
    CHECK(!rep.passed());
    REQUIRE(rep.counterexample);
    CHECK(rep.counterexample->property == "Sq1");
    CHECK(replay_sqrt_condition(M, all_one, *rep.counterexample));
}

TEST_CASE("verify_sqrt accepts the identity on Boolean cubes") {
    AlgebraPtr M = boolean_cube(3);
    SqrtWitness w = SqrtWitness::identity(M);
    SuiteReport rep = verify_sqrt(M, w);
    CHECK(rep.status == SuiteStatus::Pass);
}

TEST_CASE("weak verification skips the negation condition") {
    AlgebraPtr M = ratchain();
    SqrtWitness w = *closed_form_sqrt(M).witness;
    SuiteReport rep = verify_sqrt(M, w, CheckOptions{}, true);
    CHECK(rep.passed());
    for (const auto& sub : rep.sub) CHECK(sub.name != "Sq3");
    CHECK(rep.sub.size() == 2);
}

TEST_CASE("strictness and classification") {
    AlgebraPtr R = ratchain();
    SqrtWitness rr = *closed_form_sqrt(R).witness;
    ClassifyResult strict = w_and_classify(R, rr);
    CHECK(strict.kind == AlgebraClass::Strict);
    CHECK(strict.w == R->zero());

    AlgebraPtr B = boolean_cube(2);
    SqrtWitness rb = *candidate_sqrt(B).witness;
    ClassifyResult boolean = w_and_classify(B, rb);
    CHECK(boolean.kind == AlgebraClass::Boolean);
    CHECK(boolean.w == B->one());

    ClassifyResult degenerate = w_and_classify(mv_chain(0), *candidate_sqrt(mv_chain(0)).witness);
    CHECK(degenerate.kind == AlgebraClass::Degenerate);
}

TEST_CASE("mixed classification splits into Boolean and strict parts") {
    AlgebraPtr M = mixed_product();
    CandidateResult cand = find_sqrt(M);
    REQUIRE(cand.witness);
    ClassifyResult cls = w_and_classify(M, *cand.witness);
    CHECK(cls.kind == AlgebraClass::Mixed);
    AlgebraPtr R = ratchain();
    PmvElement v(std::vector<PmvElement>{chain_el(1), qe(R, {Q(0)})});
    CHECK(cls.v == v);
    CHECK(cls.w == v);
    CHECK(cls.details.passed());
    REQUIRE(cls.boolean_part);
    CHECK(cls.boolean_part->size() == 2);
    CandidateResult bc = candidate_sqrt(cls.boolean_part);
    REQUIRE(bc.witness);
    CHECK(bc.witness->form() == SqrtWitness::Form::Identity);
    REQUIRE(cls.strict_part);
    CHECK(!cls.strict_part->is_finite());
}

TEST_CASE("R and f: both routes, bounds, and halving") {
    AlgebraPtr M = ratchain();
    SqrtWitness r = *closed_form_sqrt(M).witness;
    RfResult a = R_and_f(M, r, M->one());
    CHECK(a.R == qe(M, {Q(1, 2)}));
    RfResult b = R_and_f(M, r, M->zero());
    CHECK(b.R == M->zero());
    RfResult c = R_and_f(M, r, qe(M, {Q(1, 2)}));
    CHECK(c.R == qe(M, {Q(1, 4)}));
    for (const auto& x : M->sample(GridOptions{128, 0})) {
        RfResult rf = R_and_f(M, r, x); // internal assertions run here
        CHECK(M->oplus(rf.R, rf.R) == x);
    }
}

TEST_CASE("induced operations on the lower interval") {
    AlgebraPtr M = ratchain();
    SqrtWitness r = *closed_form_sqrt(M).witness;
    PmvElement q14 = qe(M, {Q(1, 4)});
    InducedOps ops = induced_interval_ops(M, r, q14, q14);
    CHECK(ops.minus_r_x == q14); // (3/4).(1/2) = 1/4
    CHECK(ops.oplus_r == qe(M, {Q(1, 2)}));
    CHECK(ops.sim_r_x == q14);

    InducedOps zero_ops = induced_interval_ops(M, r, M->zero(), q14);
    CHECK(zero_ops.oplus_r == q14);

    // matches (x (+) y) ^ r(0)- pointwise here
    auto pts = M->sample(GridOptions{24, 0});
    PmvElement b = M->minus(r(M->zero()));
    for (const auto& p : pts)
        for (const auto& q : pts) {
            PmvElement x = M->meet(p, b), y = M->meet(q, b);
            CHECK(induced_interval_ops(M, r, x, y).oplus_r == M->meet(M->oplus(x, y), b));
        }
}

TEST_CASE("reconstruction from b and a halving bijection") {
    AlgebraPtr M = ratchain();
    SqrtFn halves = [&](const PmvElement& x) {
        return qe(M, {x.group().coords[0].half()});
    };
    ReconstructResult res = reconstruct_sqrt(M, qe(M, {Q(1, 2)}), &halves);
    REQUIRE(res.ok);
    SqrtWitness closed = *closed_form_sqrt(M).witness;
    for (const auto& x : M->sample(GridOptions{128, 0})) CHECK(res.map(x) == closed(x));
}

TEST_CASE("reconstruction on the Boolean cube uses the identity halving") {
    AlgebraPtr M = boolean_cube(2);
    SqrtFn id = [](const PmvElement& x) { return x; };
    ReconstructResult res = reconstruct_sqrt(M, M->one(), &id);
    REQUIRE(res.ok);
    for (const auto& x : M->enumerate()) CHECK(res.map(x) == x);
}

TEST_CASE("reconstruction is rejected on the 5-element chain") {
    ReconstructResult res = reconstruct_sqrt(mv_chain(4), chain_el(3));
    CHECK(!res.ok);
    CHECK(res.rejection.find("no valid f") != std::string::npos);
    CHECK(res.rejection.find("x = 1") != std::string::npos);
}

TEST_CASE("reconstruction rejects b below its own negation") {
    ReconstructResult res = reconstruct_sqrt(mv_chain(4), chain_el(1));
    CHECK(!res.ok);
    CHECK(res.rejection.find("not below") != std::string::npos);
}

TEST_CASE("round-trip: rebuild each bundled witness from r(0)- and f") {
    struct Item {
        AlgebraPtr M;
        SqrtWitness r;
    };
    std::vector<Item> items;
    items.push_back({ratchain(), *closed_form_sqrt(ratchain()).witness});
    items.push_back({cocycle_algebra(), *closed_form_sqrt(cocycle_algebra()).witness});
    items.push_back({lexpair_algebra(), *hperfect_sqrt(lexpair_algebra()).witness});
    items.push_back({boolean_cube(2), *candidate_sqrt(boolean_cube(2)).witness});
    for (const auto& item : items) {
        const AlgebraPtr& M = item.M;
        const SqrtWitness& r = item.r;
        PmvElement b = M->minus(r(M->zero()));
        SqrtFn f = [&M, &r](const PmvElement& x) { return M->sim(r(M->minus(x))); };
        ReconstructResult res = reconstruct_sqrt(M, b, &f);
        REQUIRE(res.ok);
        for (const auto& x : M->sample(GridOptions{96, 0})) CHECK(res.map(x) == r(x));
    }
}

TEST_CASE("orbit of zero") {
    AlgebraPtr R = ratchain();
    SqrtWitness r = *closed_form_sqrt(R).witness;
    auto orbit = r_orbit(R, r, 3);
    REQUIRE(orbit.size() == 3);
    CHECK(orbit[0] == qe(R, {Q(1, 2)}));
    CHECK(orbit[1] == qe(R, {Q(3, 4)}));
    CHECK(orbit[2] == qe(R, {Q(7, 8)}));
    for (size_t i = 1; i < orbit.size(); i++) CHECK(R->leq(orbit[i - 1], orbit[i]));

    AlgebraPtr B = boolean_cube(2);
    for (const auto& v : r_orbit(B, *candidate_sqrt(B).witness, 4)) CHECK(v == B->zero());

    AlgebraPtr L = lexpair_algebra();
    auto lorbit = r_orbit(L, *hperfect_sqrt(L).witness, 2);
    CHECK(lorbit[0] == qe(L, {Q(1, 2), Q(0)}));
    CHECK(lorbit[1] == qe(L, {Q(3, 4), Q(0)}));
}

TEST_CASE("orbit law on strict chains, exactly") {
    AlgebraPtr R = ratchain();
    SqrtWitness r = *closed_form_sqrt(R).witness;
    auto orbit = r_orbit(R, r, 10);
    for (size_t k = 1; k <= 10; k++) {
        Rational expect = Rational(1) - Rational(1).div(Rational(mpz_class(mpz_class(1) << k)));
        CHECK(orbit[k - 1] == qe(R, {expect}));
    }
}

TEST_CASE("membership in the tail ideal") {
    AlgebraPtr L = lexpair_algebra();
    SqrtWitness r = *hperfect_sqrt(L).witness;
    CHECK(hroot0_membership(L, r, qe(L, {Q(0), Q(7)}), 8));
    CHECK(!hroot0_membership(L, r, qe(L, {Q(1, 4), Q(0)}), 3));
    CHECK(hroot0_membership(L, r, L->zero(), 8));
    // exact characterization on the grid: first coordinate zero
    for (const auto& x : L->sample(GridOptions{256, 0})) {
        bool exact = x.group().coords[0].is_zero() && x.group().coords[1].sign() >= 0;
        CHECK(hroot0_membership(L, r, x, 8) == exact);
    }
}

TEST_CASE("find_sqrt resolves every bundled algebra") {
    CHECK(find_sqrt(ratchain()).witness);
    CHECK(find_sqrt(cocycle_algebra()).witness);
    CHECK(find_sqrt(lexpair_algebra()).witness);
    CHECK(find_sqrt(mixed_product()).witness);
    CHECK(find_sqrt(five_factor()).witness);
    CHECK(find_sqrt(boolean_cube(3)).witness);
    CHECK(!find_sqrt(mv_chain(4)).witness);
    auto no = find_sqrt(product_algebra({mv_chain(4), ratchain()}));
    CHECK(!no.witness);
    CHECK(no.note.find("factor") != std::string::npos);
}
