#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pmv/algebra.hpp"
#include "pmv/report.hpp"

namespace pmv {

enum class VerifyLevel { Exhaustive, Sampled, Unverified };

std::string verify_level_name(VerifyLevel v);

/// A square-root witness: either an explicit finite map or a closed form,
/// bound to its algebra, together with the level at which it passed
/// verification.
///
/// Closed forms:
///  - ClosedHalfUnit: r(x) = (x+u)/2 on a two-divisible Gamma carrier with
///    central half-unit.
///  - HPerfect: r((x,y)) = ((x+1)/2, y/2) on Gamma over LexPair with unit
///    (1,0); evaluated componentwise, independently of ClosedHalfUnit.
///  - Identity: r(x) = x (Boolean algebras).
///  - ProductOf: componentwise over product factors.
class SqrtWitness {
public:
    enum class Form { FiniteMap, ClosedHalfUnit, HPerfect, ProductOf, Identity };

    static SqrtWitness identity(AlgebraPtr M);
    static SqrtWitness closed_half_unit(AlgebraPtr M);
    static SqrtWitness hperfect(AlgebraPtr M);
    static SqrtWitness finite_map(AlgebraPtr M, std::vector<PmvElement> domain,
                                  std::vector<PmvElement> value);
    static SqrtWitness product_of(AlgebraPtr M, std::vector<SqrtWitness> parts);

    Form form() const { return form_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    VerifyLevel verified() const { return verified_; }
    void set_verified(VerifyLevel v) { verified_ = v; }
    const std::vector<SqrtWitness>& parts() const { return parts_; }

    PmvElement operator()(const PmvElement& x) const;

    /// True when the witness evaluates to x at every tested point.
    bool is_identity_on(const std::vector<PmvElement>& pts) const;

    std::string form_name() const;

private:
    SqrtWitness() = default;

    Form form_ = Form::Identity;
    AlgebraPtr algebra_;
    std::vector<PmvElement> domain_; // FiniteMap, sorted by element key
    std::vector<PmvElement> value_;
    std::vector<SqrtWitness> parts_; // ProductOf
    VerifyLevel verified_ = VerifyLevel::Unverified;
};

using SqrtFn = std::function<PmvElement(const PmvElement&)>;

/// Checks the defining conditions of a square root for an arbitrary map:
/// Sq1: r(x) odot r(x) = x; Sq2: y odot y <= x implies y <= r(x);
/// Sq3 (skipped when weak): r(x-) = r(x) -> r(0) and r(x~) = r(x) ~> r(0).
SuiteReport verify_sqrt(const AlgebraPtr& M, const SqrtFn& r, const CheckOptions& opts = {},
                        bool weak = false);
SuiteReport verify_sqrt(const AlgebraPtr& M, const SqrtWitness& r, const CheckOptions& opts = {},
                        bool weak = false);

bool replay_sqrt_condition(const AlgebraPtr& M, const SqrtFn& r, const Counterexample& cex);

struct CandidateResult {
    std::optional<SqrtWitness> witness;
    /// When absent on a finite carrier: the recorded violation of the
    /// max-formula map, which is the only possible square root.
    std::optional<Counterexample> violation;
    std::string note;
};

/// The max-formula candidate r(x) = max{ y ^ (y -> x) | y }.  On finite
/// carriers this decides existence: the candidate is returned iff it passes
/// Sq1-Sq3, and any square root necessarily equals it.  On infinite carriers
/// the grid maximum is only a lower-bound diagnostic (witness unverified).
CandidateResult candidate_sqrt(const AlgebraPtr& M, const CheckOptions& opts = {});

struct ClosedFormResult {
    std::optional<SqrtWitness> witness;
    std::string reason; // set when absent
};

/// r(x) = (x+u)/2 on a Gamma carrier; requires a two-divisible group and a
/// central half-unit.  Verified before being returned.
ClosedFormResult closed_form_sqrt(const AlgebraPtr& M, const CheckOptions& opts = {});

/// r((x,y)) = ((x+1)/2, y/2) on Gamma(LexPair(H,G), (1,0)).  When H is the
/// integers the algebra has a square root only for the trivial G, where the
/// identity is returned.
ClosedFormResult hperfect_sqrt(const AlgebraPtr& M, const CheckOptions& opts = {});

/// Componentwise witness over a product algebra; verified at the weakest
/// component level.
SqrtWitness product_sqrt(const AlgebraPtr& product, std::vector<SqrtWitness> parts);

/// Resolver: candidate decision on finite carriers, closed forms on Gamma,
/// componentwise recursion on products.
CandidateResult find_sqrt(const AlgebraPtr& M, const CheckOptions& opts = {});

bool is_strict(const AlgebraPtr& M, const SqrtWitness& r);

enum class AlgebraClass { Degenerate, Boolean, Strict, Mixed };

std::string class_name(AlgebraClass c);

/// Classification along w = v = r(0)- odot r(0)-: Boolean when v = 1,
/// strict when v = 0, mixed otherwise.  In the mixed case [0,v] is checked
/// Boolean and [0,v-] strict (with the restricted map as its square root).
struct ClassifyResult {
    AlgebraClass kind = AlgebraClass::Degenerate;
    PmvElement w;
    PmvElement v;
    AlgebraPtr boolean_part; // [0, v], mixed only
    AlgebraPtr strict_part;  // [0, v-], mixed only
    SuiteReport details;
};
ClassifyResult w_and_classify(const AlgebraPtr& M, const SqrtWitness& r,
                              const CheckOptions& opts = {});

/// R(x) computed as r(x~)- and f(x) as r(x-)~; the two routes must agree,
/// and R(x) <= r(0)-, R(x) oplus r(0) = r(x), R(x) oplus R(x) = x.
struct RfResult {
    PmvElement R;
    PmvElement f;
};
RfResult R_and_f(const AlgebraPtr& M, const SqrtWitness& r, const PmvElement& x);

/// Operations induced on [0, r(0)-] through f: x oplus_r y = f(a oplus b)
/// for x = f(a), y = f(b); x-_r = x- odot r(0)-; x~_r = x~ odot r(0)-.
struct InducedOps {
    PmvElement oplus_r;
    PmvElement minus_r_x;
    PmvElement sim_r_x;
};
InducedOps induced_interval_ops(const AlgebraPtr& M, const SqrtWitness& r, const PmvElement& x,
                                const PmvElement& y);

/// Rebuilds a square root from b and a halving bijection f as
/// r(x) = b- + f(x).  Preconditions: b- <= b, b commutes with every tested
/// element under odot, and f(x) oplus f(x) = x.  When f is omitted on a
/// finite carrier an exhaustive search for pointwise halves is attempted.
/// Rejection (with the failed precondition) is a value, not an error.
struct ReconstructResult {
    bool ok = false;
    std::string rejection;
    SqrtFn map;               // valid when ok
    SuiteReport verification; // the final verify run
};
ReconstructResult reconstruct_sqrt(const AlgebraPtr& M, const PmvElement& b,
                                   const SqrtFn* f = nullptr, const CheckOptions& opts = {});

/// [r(0), r^2(0), ..., r^n(0)].
std::vector<PmvElement> r_orbit(const AlgebraPtr& M, const SqrtWitness& r, std::size_t n);

/// Truncated test of x <= r^n(0)- for all n up to depth.
bool hroot0_membership(const AlgebraPtr& M, const SqrtWitness& r, const PmvElement& x,
                       std::size_t depth);

} // namespace pmv
