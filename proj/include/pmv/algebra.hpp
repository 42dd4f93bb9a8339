#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pmv/element.hpp"
#include "pmv/grid.hpp"
#include "pmv/group.hpp"
#include "pmv/report.hpp"

namespace pmv {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Explicit operation tables over indices 0..n-1.  Tables must be total;
/// zero and one are present (they may coincide: degenerate algebras are
/// legal values).
struct FiniteTableData {
    std::size_t n = 0;
    std::vector<std::size_t> oplus; // n*n, row-major: oplus[x*n+y]
    std::vector<std::size_t> minus; // left negation x-
    std::vector<std::size_t> sim;   // right negation x~
    std::size_t zero = 0;
    std::size_t one = 0;
    std::vector<std::string> labels; // optional; defaults to indices

    bool same_tables(const FiniteTableData& o) const;
};

enum class MulMode { Circled, Partial };

/// A pseudo MV-algebra (M; oplus, -, ~, 0, 1).  Forms:
///  - Table: explicit finite tables.
///  - Gamma: the interval [0,u] of a unital l-group, with
///      x oplus y = (x+y)^u,  x- = u-x,  x~ = -x+u.
///  - Product: componentwise over a list of factors.
///  - Interval: [0,a] of a base algebra, with x oplus_a y = (x oplus y)^a,
///      x-_a = a odot x-,  x~_a = x~ odot a.
///
/// The multiplicative operation is odot(x,y) = (x-u+y) v 0 on Gamma
/// carriers, equivalently sim(oplus(minus(y), minus(x))); note the operand
/// order: (x- oplus y-)~ evaluates to odot(y,x).
///
/// Values are immutable and operations pure; algebras are shareable across
/// threads without locks.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    enum class Form { Table, Gamma, Product, Interval };

    static AlgebraPtr gamma(UnitalGroup G);
    static AlgebraPtr table(FiniteTableData data);
    static AlgebraPtr product(std::vector<AlgebraPtr> factors);
    /// Interval below `a`; canonicalizes (a = 1 gives the base back,
    /// intervals of products split componentwise, nested intervals flatten).
    static AlgebraPtr interval(AlgebraPtr base, const PmvElement& a);

    Form form() const { return form_; }
    const UnitalGroup& group() const;
    const FiniteTableData& table_data() const;
    const std::vector<AlgebraPtr>& factors() const;
    const AlgebraPtr& interval_base() const;
    const PmvElement& interval_bound() const;

    PmvElement zero() const;
    PmvElement one() const;
    bool is_degenerate() const { return zero() == one(); }

    bool contains(const PmvElement& x) const;
    void require(const PmvElement& x, const char* where) const;

    PmvElement oplus(const PmvElement& x, const PmvElement& y) const;
    PmvElement minus(const PmvElement& x) const;
    PmvElement sim(const PmvElement& x) const;
    PmvElement odot(const PmvElement& x, const PmvElement& y) const;

    PmvElement join(const PmvElement& x, const PmvElement& y) const;
    PmvElement meet(const PmvElement& x, const PmvElement& y) const;
    PmvElement arrow(const PmvElement& x, const PmvElement& y) const; // x-  oplus y
    PmvElement squig(const PmvElement& x, const PmvElement& y) const; // y oplus x~

    Cmp compare(const PmvElement& x, const PmvElement& y) const;
    bool leq(const PmvElement& x, const PmvElement& y) const;

    /// Defined iff odot(y,x) = 0; then equal to oplus(x,y).
    std::optional<PmvElement> partial_add(const PmvElement& x, const PmvElement& y) const;

    /// Circled: n.x = (n-1).x oplus x, always defined.
    /// Partial: nx = (n-1)x + x, defined only when every step is.
    std::optional<PmvElement> nat_mul(unsigned long n, const PmvElement& x, MulMode mode) const;

    /// x odot ... odot x, n >= 1 factors.
    PmvElement odot_pow(const PmvElement& x, unsigned long n) const;

    bool is_boolean_elem(const PmvElement& x) const;

    bool is_finite() const;
    std::size_t size() const; // finite only
    /// Fixed enumeration order (also the canonical-representative order).
    std::vector<PmvElement> enumerate() const;
    /// Finite: enumeration (capped at budget); infinite: deterministic grid.
    std::vector<PmvElement> sample(const GridOptions& opts) const;

    std::string print(const PmvElement& x) const;
    std::string describe() const;

private:
    Algebra() = default;

    Form form_ = Form::Table;
    // Table
    FiniteTableData table_;
    // Gamma
    std::optional<UnitalGroup> group_;
    // Product
    std::vector<AlgebraPtr> factors_;
    // Interval
    AlgebraPtr base_;
    PmvElement bound_;
};

/// The pseudo MV-algebra Gamma(G,u) on [0,u].
AlgebraPtr gamma_construct(const UnitalGroup& G);
AlgebraPtr product_algebra(std::vector<AlgebraPtr> factors);
AlgebraPtr interval_algebra(const AlgebraPtr& M, const PmvElement& a);

/// Convenience: the (n+1)-element chain Gamma(Z, n).
AlgebraPtr mv_chain(long n);
/// The Boolean cube with 2^dims elements.
AlgebraPtr boolean_cube(int dims);

/// x is Boolean iff x oplus x = x.
bool is_boolean(const AlgebraPtr& M, const PmvElement& x);

/// All Boolean elements.  Finite carriers enumerate; infinite Gamma uses the
/// closed form (per-coordinate {0, u_i} under the product order, {0, u} on
/// chains).  Throws on carriers with neither.
std::vector<PmvElement> boolean_skeleton(const AlgebraPtr& M);

struct CheckOptions {
    std::size_t budget = 512; // test tuples per check on sampled carriers
    uint64_t seed = 0;
};

/// Runs the eight defining axioms; exhaustive over finite carriers (ternary
/// loops capped at ~2e6 tuples), grid-sampled otherwise.  One sub-report per
/// axiom with the first counterexample found.
SuiteReport check_axioms(const AlgebraPtr& M, const CheckOptions& opts = {});

/// Re-evaluates a reported axiom violation; true when it still violates.
bool replay_axiom(const AlgebraPtr& M, const Counterexample& cex);

struct SymmetryResult {
    bool symmetric = false;
    bool exhaustive = false;
    std::optional<PmvElement> witness; // x with x- != x~
};
SymmetryResult is_symmetric(const AlgebraPtr& M, const CheckOptions& opts = {});

struct DivisibilityResult {
    bool divisible = false;
    bool exhaustive = false;
    std::optional<PmvElement> witness; // x with no n-th part
};
/// n-divisibility: every x has y with n.y = x and (n-1).y odot y- = 0.
/// Exhaustive witness search on finite carriers; closed form y = x/n on
/// divisible Gamma carriers; sampled otherwise.
DivisibilityResult is_n_divisible(const AlgebraPtr& M, unsigned long n,
                                  const CheckOptions& opts = {});

/// Compiles a finite algebra to explicit tables in enumeration order.
FiniteTableData compile_table(const AlgebraPtr& M);

} // namespace pmv
