#include "pmv/sqrt.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "pmv/checks.hpp"
#include "pmv/errors.hpp"

namespace pmv {

std::string verify_level_name(VerifyLevel v) {
    switch (v) {
        case VerifyLevel::Exhaustive: return "exhaustive";
        case VerifyLevel::Sampled: return "sampled";
        case VerifyLevel::Unverified: return "unverified";
    }
    return "?";
}

std::string class_name(AlgebraClass c) {
    switch (c) {
        case AlgebraClass::Degenerate: return "Degenerate";
        case AlgebraClass::Boolean: return "Boolean";
        case AlgebraClass::Strict: return "Strict";
        case AlgebraClass::Mixed: return "Mixed";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// SqrtWitness
// ---------------------------------------------------------------------------

SqrtWitness SqrtWitness::identity(AlgebraPtr M) {
    SqrtWitness w;
    w.form_ = Form::Identity;
    w.algebra_ = std::move(M);
    return w;
}

SqrtWitness SqrtWitness::closed_half_unit(AlgebraPtr M) {
    if (M->form() != Algebra::Form::Gamma) throw Error("ClosedHalfUnit needs a Gamma algebra");
    if (!M->group().desc->two_divisible())
        throw Error("ClosedHalfUnit needs a two-divisible carrier");
    SqrtWitness w;
    w.form_ = Form::ClosedHalfUnit;
    w.algebra_ = std::move(M);
    return w;
}

SqrtWitness SqrtWitness::hperfect(AlgebraPtr M) {
    if (M->form() != Algebra::Form::Gamma ||
        M->group().desc->kind() != GroupDescriptor::Kind::LexPair)
        throw Error("HPerfect needs a Gamma algebra over a lexicographic pair");
    SqrtWitness w;
    w.form_ = Form::HPerfect;
    w.algebra_ = std::move(M);
    return w;
}

SqrtWitness SqrtWitness::finite_map(AlgebraPtr M, std::vector<PmvElement> domain,
                                    std::vector<PmvElement> value) {
    if (domain.size() != value.size()) throw Error("finite map arity mismatch");
    std::vector<std::size_t> order(domain.size());
    for (std::size_t i = 0; i < order.size(); i++) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return element_key_less(domain[a], domain[b]);
    });
    SqrtWitness w;
    w.form_ = Form::FiniteMap;
    w.algebra_ = std::move(M);
    w.domain_.reserve(domain.size());
    w.value_.reserve(domain.size());
    for (std::size_t i : order) {
        w.domain_.push_back(std::move(domain[i]));
        w.value_.push_back(std::move(value[i]));
    }
    return w;
}

SqrtWitness SqrtWitness::product_of(AlgebraPtr M, std::vector<SqrtWitness> parts) {
    if (M->form() != Algebra::Form::Product) throw Error("ProductOf needs a product algebra");
    if (parts.size() != M->factors().size()) throw Error("one witness per factor required");
    SqrtWitness w;
    w.form_ = Form::ProductOf;
    w.algebra_ = std::move(M);
    w.parts_ = std::move(parts);
    VerifyLevel lvl = VerifyLevel::Exhaustive;
    for (const auto& p : w.parts_) {
        if (p.verified() == VerifyLevel::Unverified) lvl = VerifyLevel::Unverified;
        else if (p.verified() == VerifyLevel::Sampled && lvl == VerifyLevel::Exhaustive)
            lvl = VerifyLevel::Sampled;
    }
    w.verified_ = lvl;
    return w;
}

PmvElement SqrtWitness::operator()(const PmvElement& x) const {
    const Algebra& M = *algebra_;
    switch (form_) {
        case Form::Identity:
            M.require(x, "sqrt");
            return x;
        case Form::ClosedHalfUnit: {
            M.require(x, "sqrt");
            const UnitalGroup& G = M.group();
            auto h = g_halve(G, g_add(G, x.group(), G.unit));
            if (!h) throw Error("half of " + M.print(x) + "+u does not exist");
            return PmvElement(*h);
        }
        case Form::HPerfect: {
            M.require(x, "sqrt");
            const UnitalGroup& G = M.group();
            const auto& d = *G.desc;
            int hd = d.lex_h()->dims();
            UnitalGroup H{d.lex_h(), g_zero(d.lex_h())};
            UnitalGroup K{d.lex_g(), g_zero(d.lex_g())};
            GroupElement xh = g_make(d.lex_h(), std::vector<Rational>(x.group().coords.begin(),
                                                                      x.group().coords.begin() + hd));
            GroupElement xg = g_make(d.lex_g(), std::vector<Rational>(x.group().coords.begin() + hd,
                                                                      x.group().coords.end()));
            GroupElement uh = g_make(d.lex_h(), std::vector<Rational>(G.unit.coords.begin(),
                                                                      G.unit.coords.begin() + hd));
            auto top = g_halve(H, g_add(H, xh, uh));
            auto bot = g_halve(K, xg);
            if (!top || !bot) throw Error("componentwise halving failed at " + M.print(x));
            std::vector<Rational> coords = top->coords;
            coords.insert(coords.end(), bot->coords.begin(), bot->coords.end());
            return PmvElement(g_make(G.desc, std::move(coords)));
        }
        case Form::ProductOf: {
            M.require(x, "sqrt");
            std::vector<PmvElement> t;
            t.reserve(parts_.size());
            for (std::size_t i = 0; i < parts_.size(); i++) t.push_back(parts_[i](x.tuple()[i]));
            return PmvElement(std::move(t));
        }
        case Form::FiniteMap: {
            auto it = std::lower_bound(
                domain_.begin(), domain_.end(), x,
                [](const PmvElement& a, const PmvElement& b) { return element_key_less(a, b); });
            if (it == domain_.end() || !(*it == x))
                throw Error("finite square-root map undefined at " + M.print(x));
            return value_[static_cast<std::size_t>(it - domain_.begin())];
        }
    }
    throw Error("bad witness form");
}

bool SqrtWitness::is_identity_on(const std::vector<PmvElement>& pts) const {
    for (const auto& x : pts)
        if (!((*this)(x) == x)) return false;
    return true;
}

std::string SqrtWitness::form_name() const {
    switch (form_) {
        case Form::FiniteMap: return "FiniteMap";
        case Form::ClosedHalfUnit: return "ClosedHalfUnit";
        case Form::HPerfect: return "HPerfect";
        case Form::ProductOf: return "ProductOf";
        case Form::Identity: return "Identity";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

namespace {

bool sq_condition_at(const Algebra& M, const SqrtFn& r, const std::string& cond,
                     const std::vector<PmvElement>& e, std::string& trace) {
    if (cond == "Sq1") {
        PmvElement rx = r(e[0]);
        PmvElement sq = M.odot(rx, rx);
        if (sq == e[0]) return true;
        trace = "r(x) = " + M.print(rx) + ", r(x).r(x) = " + M.print(sq) + " != x";
        return false;
    }
    if (cond == "Sq2") {
        // e[0] = y, e[1] = x
        if (!M.leq(M.odot(e[0], e[0]), e[1])) return true;
        PmvElement rx = r(e[1]);
        if (M.leq(e[0], rx)) return true;
        trace = "y.y <= x but y !<= r(x) = " + M.print(rx);
        return false;
    }
    if (cond == "Sq3") {
        PmvElement rx = r(e[0]);
        PmvElement r0 = r(M.zero());
        PmvElement lhs1 = r(M.minus(e[0]));
        PmvElement rhs1 = M.arrow(rx, r0);
        if (!(lhs1 == rhs1)) {
            trace = "r(x-) = " + M.print(lhs1) + " but r(x) -> r(0) = " + M.print(rhs1);
            return false;
        }
        PmvElement lhs2 = r(M.sim(e[0]));
        PmvElement rhs2 = M.squig(rx, r0);
        if (!(lhs2 == rhs2)) {
            trace = "r(x~) = " + M.print(lhs2) + " but r(x) ~> r(0) = " + M.print(rhs2);
            return false;
        }
        return true;
    }
    throw Error("unknown square-root condition " + cond);
}

} // namespace

SuiteReport verify_sqrt(const AlgebraPtr& M, const SqrtFn& r, const CheckOptions& opts, bool weak) {
    CheckSet cs = CheckSet::make(M, opts.budget, opts.seed);
    SuiteReport rep;
    rep.name = weak ? "weak-sqrt-verify" : "sqrt-verify";
    rep.absorb(run_check(cs, "Sq1", 1, [&](const std::vector<PmvElement>& e, std::string& t) {
        return sq_condition_at(*M, r, "Sq1", e, t);
    }));
    rep.absorb(run_check(cs, "Sq2", 2, [&](const std::vector<PmvElement>& e, std::string& t) {
        return sq_condition_at(*M, r, "Sq2", e, t);
    }));
    if (!weak) {
        rep.absorb(run_check(cs, "Sq3", 1, [&](const std::vector<PmvElement>& e, std::string& t) {
            return sq_condition_at(*M, r, "Sq3", e, t);
        }));
    }
    return rep;
}

SuiteReport verify_sqrt(const AlgebraPtr& M, const SqrtWitness& r, const CheckOptions& opts,
                        bool weak) {
    return verify_sqrt(M, [&r](const PmvElement& x) { return r(x); }, opts, weak);
}

bool replay_sqrt_condition(const AlgebraPtr& M, const SqrtFn& r, const Counterexample& cex) {
    std::string trace;
    return !sq_condition_at(*M, r, cex.property, cex.elements, trace);
}

// ---------------------------------------------------------------------------
// Candidate (max-formula)
// ---------------------------------------------------------------------------

CandidateResult candidate_sqrt(const AlgebraPtr& M, const CheckOptions& opts) {
    CandidateResult res;
    bool finite = M->is_finite();
    std::vector<PmvElement> pts = M->sample(GridOptions{finite ? SIZE_MAX / 2 : opts.budget,
                                                        opts.seed});
    std::vector<PmvElement> domain, value;
    domain.reserve(pts.size());
    value.reserve(pts.size());
    for (const auto& x : pts) {
        PmvElement best = M->zero(); // y = 0 contributes 0 ^ (0 -> x) = 0
        for (const auto& y : pts) {
            best = M->join(best, M->meet(y, M->arrow(y, x)));
        }
        domain.push_back(x);
        value.push_back(best);
    }
    SqrtWitness w = SqrtWitness::finite_map(M, domain, value);
    if (!finite) {
        res.witness = w; // grid maximum: lower-bound diagnostic only
        res.note = "infinite carrier: grid maximum computed, not a decision";
        return res;
    }
    SuiteReport verify = verify_sqrt(M, w, opts);
    if (!verify.passed()) {
        res.violation = verify.counterexample;
        res.note = "max-formula map violates " + verify.counterexample->property +
                   "; no square root exists";
        return res;
    }
    if (w.is_identity_on(pts)) {
        SqrtWitness id = SqrtWitness::identity(M);
        id.set_verified(VerifyLevel::Exhaustive);
        res.witness = std::move(id);
    } else {
        w.set_verified(VerifyLevel::Exhaustive);
        res.witness = std::move(w);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

ClosedFormResult closed_form_sqrt(const AlgebraPtr& M, const CheckOptions& opts) {
    ClosedFormResult res;
    if (M->form() != Algebra::Form::Gamma) {
        res.reason = "closed form needs a Gamma algebra, got " + M->describe();
        return res;
    }
    const UnitalGroup& G = M->group();
    if (!G.desc->two_divisible()) {
        res.reason = "carrier " + G.desc->describe() + " is not two-divisible";
        return res;
    }
    auto half = g_halve(G, G.unit);
    if (!half) {
        res.reason = "u/2 does not exist";
        return res;
    }
    Centrality c = is_central(G, *half);
    if (!c.central) {
        res.reason = "u/2 = " + print_element(*half) + " is not central";
        return res;
    }
    SqrtWitness w = SqrtWitness::closed_half_unit(M);
    SuiteReport verify = verify_sqrt(M, w, opts);
    if (!verify.passed()) {
        res.reason = "closed form failed verification: " + verify.summary_line();
        return res;
    }
    w.set_verified(M->is_finite() ? VerifyLevel::Exhaustive : VerifyLevel::Sampled);
    res.witness = std::move(w);
    return res;
}

ClosedFormResult hperfect_sqrt(const AlgebraPtr& M, const CheckOptions& opts) {
    ClosedFormResult res;
    if (M->form() != Algebra::Form::Gamma ||
        M->group().desc->kind() != GroupDescriptor::Kind::LexPair) {
        res.reason = "needs Gamma over a lexicographic pair, got " + M->describe();
        return res;
    }
    const UnitalGroup& G = M->group();
    const auto& d = *G.desc;
    if (d.lex_h()->dims() != 1) {
        res.reason = "first component must be one-dimensional";
        return res;
    }
    int hd = d.lex_h()->dims();
    // unit must be (1, 0)
    if (!(G.unit.coords[0] == Rational(1))) {
        res.reason = "unit must be (1,0), got " + print_element(G.unit);
        return res;
    }
    for (std::size_t i = static_cast<std::size_t>(hd); i < G.unit.coords.size(); i++) {
        if (!G.unit.coords[i].is_zero()) {
            res.reason = "unit must be (1,0), got " + print_element(G.unit);
            return res;
        }
    }
    if (!d.lex_h()->two_divisible()) {
        // H isomorphic to Z: a square root exists only when G is trivial.
        if (d.lex_g()->dims() == 0) {
            SqrtWitness id = SqrtWitness::identity(M);
            SuiteReport verify = verify_sqrt(M, id, opts);
            if (verify.passed()) {
                id.set_verified(M->is_finite() ? VerifyLevel::Exhaustive : VerifyLevel::Sampled);
                res.witness = std::move(id);
                return res;
            }
            res.reason = "identity failed verification on " + M->describe();
            return res;
        }
        res.reason = "first component is the integers and the second is nontrivial: no square root";
        return res;
    }
    if (!d.lex_g()->two_divisible()) {
        res.reason = "second component " + d.lex_g()->describe() + " is not two-divisible";
        return res;
    }
    SqrtWitness w = SqrtWitness::hperfect(M);
    SuiteReport verify = verify_sqrt(M, w, opts);
    if (!verify.passed()) {
        res.reason = "componentwise form failed verification: " + verify.summary_line();
        return res;
    }
    w.set_verified(M->is_finite() ? VerifyLevel::Exhaustive : VerifyLevel::Sampled);
    res.witness = std::move(w);
    return res;
}

SqrtWitness product_sqrt(const AlgebraPtr& product, std::vector<SqrtWitness> parts) {
    return SqrtWitness::product_of(product, std::move(parts));
}

CandidateResult find_sqrt(const AlgebraPtr& M, const CheckOptions& opts) {
    if (M->is_finite()) return candidate_sqrt(M, opts);
    switch (M->form()) {
        case Algebra::Form::Gamma: {
            ClosedFormResult cf = closed_form_sqrt(M, opts);
            if (cf.witness) {
                CandidateResult res;
                res.witness = std::move(cf.witness);
                return res;
            }
            ClosedFormResult hp = hperfect_sqrt(M, opts);
            if (hp.witness) {
                CandidateResult res;
                res.witness = std::move(hp.witness);
                return res;
            }
            CandidateResult res;
            res.note = cf.reason + "; " + hp.reason;
            return res;
        }
        case Algebra::Form::Product: {
            std::vector<SqrtWitness> parts;
            for (const auto& f : M->factors()) {
                CandidateResult sub = find_sqrt(f, opts);
                if (!sub.witness) {
                    CandidateResult res;
                    res.violation = sub.violation;
                    res.note = "factor " + f->describe() + " has no square root" +
                               (sub.note.empty() ? "" : ": " + sub.note);
                    return res;
                }
                parts.push_back(std::move(*sub.witness));
            }
            CandidateResult res;
            res.witness = product_sqrt(M, std::move(parts));
            return res;
        }
        default: {
            CandidateResult res;
            res.note = "no square-root construction for " + M->describe();
            return res;
        }
    }
}

// ---------------------------------------------------------------------------
// Strictness and classification
// ---------------------------------------------------------------------------

bool is_strict(const AlgebraPtr& M, const SqrtWitness& r) {
    PmvElement r0 = r(M->zero());
    return r0 == M->minus(r0);
}

ClassifyResult w_and_classify(const AlgebraPtr& M, const SqrtWitness& r,
                              const CheckOptions& opts) {
    ClassifyResult res;
    PmvElement r0 = r(M->zero());
    PmvElement nr0 = M->minus(r0);
    res.w = M->odot(nr0, nr0);
    res.v = res.w;
    res.details.name = "classify";
    if (M->is_degenerate()) {
        res.kind = AlgebraClass::Degenerate;
        return res;
    }
    if (res.v == M->one()) {
        res.kind = AlgebraClass::Boolean;
        return res;
    }
    if (res.v == M->zero()) {
        res.kind = AlgebraClass::Strict;
        return res;
    }
    res.kind = AlgebraClass::Mixed;
    res.boolean_part = interval_algebra(M, res.v);
    res.strict_part = interval_algebra(M, M->minus(res.v));

    // [0,v] must be Boolean: every element idempotent.
    {
        CheckSet cs = CheckSet::make(res.boolean_part, opts.budget, opts.seed);
        res.details.absorb(run_check(
            cs, "boolean-part", 1, [&](const std::vector<PmvElement>& e, std::string& t) {
                if (res.boolean_part->is_boolean_elem(e[0])) return true;
                t = "x (+) x != x in [0,v]";
                return false;
            }));
    }
    // [0,v-] with the restriction of r must be a strict square root.
    {
        AlgebraPtr S = res.strict_part;
        PmvElement vneg = M->minus(res.v);
        SqrtFn restricted = [&, vneg](const PmvElement& x) { return M->meet(r(x), vneg); };
        SuiteReport ver = verify_sqrt(S, restricted, opts);
        ver.name = "strict-part-sqrt";
        res.details.absorb(std::move(ver));
        PmvElement s0 = restricted(S->zero());
        SuiteReport strictness;
        strictness.name = "strict-part-strictness";
        strictness.points = 1;
        strictness.status = SuiteStatus::Pass;
        if (!(s0 == S->minus(s0))) {
            strictness.status = SuiteStatus::Fail;
            Counterexample cex;
            cex.property = "strictness";
            cex.trace = "restricted r(0) = " + S->print(s0) + " differs from its left negation " +
                        S->print(S->minus(s0));
            strictness.counterexample = std::move(cex);
        }
        res.details.absorb(std::move(strictness));
    }
    return res;
}

// ---------------------------------------------------------------------------
// R, f, induced operations, reconstruction
// ---------------------------------------------------------------------------

RfResult R_and_f(const AlgebraPtr& M, const SqrtWitness& r, const PmvElement& x) {
    RfResult out;
    out.R = M->minus(r(M->sim(x)));
    out.f = M->sim(r(M->minus(x)));
    if (!(out.R == out.f))
        throw Error("R(x) = " + M->print(out.R) + " and f(x) = " + M->print(out.f) +
                    " disagree at x = " + M->print(x));
    PmvElement r0 = r(M->zero());
    if (!M->leq(out.R, M->minus(r0)))
        throw Error("R(x) = " + M->print(out.R) + " exceeds r(0)- at x = " + M->print(x));
    if (!(M->oplus(out.R, r0) == r(x)))
        throw Error("R(x) (+) r(0) != r(x) at x = " + M->print(x));
    if (!(M->oplus(out.R, out.R) == x))
        throw Error("R(x) (+) R(x) != x at x = " + M->print(x));
    return out;
}

InducedOps induced_interval_ops(const AlgebraPtr& M, const SqrtWitness& r, const PmvElement& x,
                                const PmvElement& y) {
    PmvElement r0 = r(M->zero());
    PmvElement b = M->minus(r0);
    if (!M->leq(x, b) || !M->leq(y, b))
        throw Error("induced operations need x, y in [0, r(0)-]");
    // x = f(a) with a = x oplus x, same for y
    PmvElement a = M->oplus(x, x);
    PmvElement c = M->oplus(y, y);
    InducedOps out;
    out.oplus_r = M->minus(r(M->sim(M->oplus(a, c))));
    out.minus_r_x = M->odot(M->minus(x), b);
    out.sim_r_x = M->odot(M->sim(x), b);
    return out;
}

ReconstructResult reconstruct_sqrt(const AlgebraPtr& M, const PmvElement& b, const SqrtFn* f,
                                   const CheckOptions& opts) {
    ReconstructResult res;
    M->require(b, "reconstruct_sqrt");
    PmvElement bneg = M->minus(b);
    if (!M->leq(bneg, b)) {
        res.rejection = "b- = " + M->print(bneg) + " is not below b = " + M->print(b);
        return res;
    }
    bool finite = M->is_finite();
    std::vector<PmvElement> pts =
        M->sample(GridOptions{finite ? SIZE_MAX / 2 : opts.budget, opts.seed});
    for (const auto& x : pts) {
        if (!(M->odot(b, x) == M->odot(x, b))) {
            res.rejection = "b does not commute under odot at x = " + M->print(x);
            return res;
        }
    }

    SqrtFn halves;
    if (f) {
        halves = *f;
    } else if (finite) {
        // for each x pick the join of all y <= b with y oplus y = x
        std::vector<PmvElement> domain, value;
        for (const auto& x : pts) {
            std::optional<PmvElement> pick;
            for (const auto& y : pts) {
                if (!M->leq(y, b) || !(M->oplus(y, y) == x)) continue;
                pick = pick ? M->join(*pick, y) : y;
            }
            if (!pick || !(M->oplus(*pick, *pick) == x)) {
                res.rejection = "no valid f with f(x) (+) f(x) = x at x = " + M->print(x);
                return res;
            }
            domain.push_back(x);
            value.push_back(*pick);
        }
        auto table = std::make_shared<SqrtWitness>(
            SqrtWitness::finite_map(M, std::move(domain), std::move(value)));
        halves = [table](const PmvElement& x) { return (*table)(x); };
    } else {
        res.rejection = "an explicit f is required on infinite carriers";
        return res;
    }

    for (const auto& x : pts) {
        PmvElement fx = halves(x);
        if (!M->leq(fx, b)) {
            res.rejection = "f(x) = " + M->print(fx) + " leaves [0,b] at x = " + M->print(x);
            return res;
        }
        if (!(M->oplus(fx, fx) == x)) {
            res.rejection = "no valid f with f(x) (+) f(x) = x at x = " + M->print(x);
            return res;
        }
    }

    SqrtFn built = [M, bneg, halves](const PmvElement& x) {
        auto sum = M->partial_add(bneg, halves(x));
        if (!sum) throw Error("b- + f(x) undefined at x = " + M->print(x));
        return *sum;
    };
    SuiteReport verify = verify_sqrt(M, built, opts);
    if (!verify.passed()) {
        res.rejection = "reconstructed map failed " + verify.counterexample->property + " at " +
                        (verify.counterexample->printed.empty() ? std::string("?")
                                                                : verify.counterexample->printed[0]);
        res.verification = std::move(verify);
        return res;
    }
    res.ok = true;
    res.map = std::move(built);
    res.verification = std::move(verify);
    return res;
}

// ---------------------------------------------------------------------------
// Orbits and the tail ideal
// ---------------------------------------------------------------------------

std::vector<PmvElement> r_orbit(const AlgebraPtr& M, const SqrtWitness& r, std::size_t n) {
    std::vector<PmvElement> out;
    PmvElement cur = M->zero();
    for (std::size_t i = 0; i < n; i++) {
        cur = r(cur);
        out.push_back(cur);
    }
    return out;
}

bool hroot0_membership(const AlgebraPtr& M, const SqrtWitness& r, const PmvElement& x,
                       std::size_t depth) {
    M->require(x, "hroot0_membership");
    PmvElement cur = M->zero();
    for (std::size_t i = 0; i < depth; i++) {
        cur = r(cur);
        if (!M->leq(x, M->minus(cur))) return false;
    }
    return true;
}

} // namespace pmv
