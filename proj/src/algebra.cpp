#include "pmv/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "pmv/checks.hpp"
#include "pmv/errors.hpp"

namespace pmv {

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

bool element_key_less(const PmvElement& a, const PmvElement& b) {
    if (a.v.index() != b.v.index()) return a.v.index() < b.v.index();
    if (a.is_index()) return a.index() < b.index();
    if (a.is_group()) return element_key_less(a.group(), b.group());
    const auto& ta = a.tuple();
    const auto& tb = b.tuple();
    size_t n = std::min(ta.size(), tb.size());
    for (size_t i = 0; i < n; i++) {
        if (element_key_less(ta[i], tb[i])) return true;
        if (element_key_less(tb[i], ta[i])) return false;
    }
    return ta.size() < tb.size();
}

namespace {
struct ElemLess {
    bool operator()(const PmvElement& a, const PmvElement& b) const {
        return element_key_less(a, b);
    }
};
} // namespace

// ---------------------------------------------------------------------------
// FiniteTableData
// ---------------------------------------------------------------------------

bool FiniteTableData::same_tables(const FiniteTableData& o) const {
    return n == o.n && oplus == o.oplus && minus == o.minus && sim == o.sim && zero == o.zero &&
           one == o.one;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

AlgebraPtr Algebra::gamma(UnitalGroup G) {
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->form_ = Form::Gamma;
    a->group_ = std::move(G);
    return a;
}

AlgebraPtr Algebra::table(FiniteTableData data) {
    if (data.n == 0) throw Error("finite table needs at least one element");
    if (data.oplus.size() != data.n * data.n || data.minus.size() != data.n ||
        data.sim.size() != data.n)
        throw Error("finite table has wrong arity");
    auto in_range = [&](size_t i) { return i < data.n; };
    for (size_t i : data.oplus)
        if (!in_range(i)) throw Error("oplus table entry out of range");
    for (size_t i : data.minus)
        if (!in_range(i)) throw Error("minus table entry out of range");
    for (size_t i : data.sim)
        if (!in_range(i)) throw Error("sim table entry out of range");
    if (!in_range(data.zero) || !in_range(data.one)) throw Error("table constants out of range");
    if (data.labels.empty()) {
        for (size_t i = 0; i < data.n; i++) data.labels.push_back(std::to_string(i));
    } else if (data.labels.size() != data.n) {
        throw Error("label count does not match carrier size");
    }
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->form_ = Form::Table;
    a->table_ = std::move(data);
    return a;
}

AlgebraPtr Algebra::product(std::vector<AlgebraPtr> factors) {
    if (factors.empty()) throw Error("product needs at least one factor");
    for (const auto& f : factors)
        if (!f) throw Error("null product factor");
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->form_ = Form::Product;
    a->factors_ = std::move(factors);
    return a;
}

AlgebraPtr Algebra::interval(AlgebraPtr base, const PmvElement& a) {
    if (!base) throw Error("interval over null algebra");
    base->require(a, "interval");
    if (a == base->one()) return base;
    if (base->form() == Form::Product) {
        const auto& bounds = a.tuple();
        std::vector<AlgebraPtr> parts;
        parts.reserve(bounds.size());
        for (size_t i = 0; i < bounds.size(); i++)
            parts.push_back(interval(base->factors()[i], bounds[i]));
        return product(std::move(parts));
    }
    if (base->form() == Form::Interval) return interval(base->interval_base(), a);
    auto out = std::shared_ptr<Algebra>(new Algebra());
    out->form_ = Form::Interval;
    out->base_ = std::move(base);
    out->bound_ = a;
    return out;
}

AlgebraPtr gamma_construct(const UnitalGroup& G) { return Algebra::gamma(G); }

AlgebraPtr product_algebra(std::vector<AlgebraPtr> factors) {
    return Algebra::product(std::move(factors));
}

AlgebraPtr interval_algebra(const AlgebraPtr& M, const PmvElement& a) {
    return Algebra::interval(M, a);
}

AlgebraPtr mv_chain(long n) {
    if (n < 0) throw Error("mv_chain needs n >= 0");
    auto desc = GroupDescriptor::int_vector(1);
    return Algebra::gamma(UnitalGroup::make(desc, g_make(desc, {Rational(n)})));
}

AlgebraPtr boolean_cube(int dims) {
    if (dims < 1) throw Error("boolean_cube needs dims >= 1");
    std::vector<AlgebraPtr> parts(static_cast<size_t>(dims), mv_chain(1));
    if (dims == 1) return parts[0];
    return Algebra::product(std::move(parts));
}

// ---------------------------------------------------------------------------
// Accessors
// ---------------------------------------------------------------------------

const UnitalGroup& Algebra::group() const {
    if (form_ != Form::Gamma) throw Error("not a Gamma algebra");
    return *group_;
}
const FiniteTableData& Algebra::table_data() const {
    if (form_ != Form::Table) throw Error("not a table algebra");
    return table_;
}
const std::vector<AlgebraPtr>& Algebra::factors() const {
    if (form_ != Form::Product) throw Error("not a product algebra");
    return factors_;
}
const AlgebraPtr& Algebra::interval_base() const {
    if (form_ != Form::Interval) throw Error("not an interval algebra");
    return base_;
}
const PmvElement& Algebra::interval_bound() const {
    if (form_ != Form::Interval) throw Error("not an interval algebra");
    return bound_;
}

PmvElement Algebra::zero() const {
    switch (form_) {
        case Form::Table: return PmvElement(table_.zero);
        case Form::Gamma: return PmvElement(g_zero(group_->desc));
        case Form::Product: {
            std::vector<PmvElement> t;
            t.reserve(factors_.size());
            for (const auto& f : factors_) t.push_back(f->zero());
            return PmvElement(std::move(t));
        }
        case Form::Interval: return base_->zero();
    }
    throw Error("bad form");
}

PmvElement Algebra::one() const {
    switch (form_) {
        case Form::Table: return PmvElement(table_.one);
        case Form::Gamma: return PmvElement(group_->unit);
        case Form::Product: {
            std::vector<PmvElement> t;
            t.reserve(factors_.size());
            for (const auto& f : factors_) t.push_back(f->one());
            return PmvElement(std::move(t));
        }
        case Form::Interval: return bound_;
    }
    throw Error("bad form");
}

bool Algebra::contains(const PmvElement& x) const {
    switch (form_) {
        case Form::Table: return x.is_index() && x.index() < table_.n;
        case Form::Gamma:
            return x.is_group() && x.group().desc && x.group().desc->same_as(*group_->desc) &&
                   g_in_unit_interval(*group_, x.group());
        case Form::Product: {
            if (!x.is_tuple() || x.tuple().size() != factors_.size()) return false;
            for (size_t i = 0; i < factors_.size(); i++)
                if (!factors_[i]->contains(x.tuple()[i])) return false;
            return true;
        }
        case Form::Interval: return base_->contains(x) && base_->leq(x, bound_);
    }
    return false;
}

void Algebra::require(const PmvElement& x, const char* where) const {
    if (!contains(x))
        throw Error(std::string(where) + ": element " + print_raw(x) + " outside " + describe());
}

// ---------------------------------------------------------------------------
// Basic operations
// ---------------------------------------------------------------------------

PmvElement Algebra::oplus(const PmvElement& x, const PmvElement& y) const {
    require(x, "oplus");
    require(y, "oplus");
    switch (form_) {
        case Form::Table: return PmvElement(table_.oplus[x.index() * table_.n + y.index()]);
        case Form::Gamma: {
            GroupElement s = g_add(*group_, x.group(), y.group());
            return PmvElement(g_meet_join(*group_, s, group_->unit).first);
        }
        case Form::Product: {
            std::vector<PmvElement> t;
            t.reserve(factors_.size());
            for (size_t i = 0; i < factors_.size(); i++)
                t.push_back(factors_[i]->oplus(x.tuple()[i], y.tuple()[i]));
            return PmvElement(std::move(t));
        }
        case Form::Interval: return base_->meet(base_->oplus(x, y), bound_);
    }
    throw Error("bad form");
}

PmvElement Algebra::minus(const PmvElement& x) const {
    require(x, "minus");
    switch (form_) {
        case Form::Table: return PmvElement(table_.minus[x.index()]);
        case Form::Gamma:
            return PmvElement(g_sub(*group_, group_->unit, x.group())); // u - x
        case Form::Product: {
            std::vector<PmvElement> t;
            t.reserve(factors_.size());
            for (size_t i = 0; i < factors_.size(); i++)
                t.push_back(factors_[i]->minus(x.tuple()[i]));
            return PmvElement(std::move(t));
        }
        case Form::Interval: return base_->odot(bound_, base_->minus(x));
    }
    throw Error("bad form");
}

PmvElement Algebra::sim(const PmvElement& x) const {
    require(x, "sim");
    switch (form_) {
        case Form::Table: return PmvElement(table_.sim[x.index()]);
        case Form::Gamma:
            return PmvElement(g_add(*group_, g_neg(*group_, x.group()), group_->unit)); // -x + u
        case Form::Product: {
            std::vector<PmvElement> t;
            t.reserve(factors_.size());
            for (size_t i = 0; i < factors_.size(); i++)
                t.push_back(factors_[i]->sim(x.tuple()[i]));
            return PmvElement(std::move(t));
        }
        case Form::Interval: return base_->odot(base_->sim(x), bound_);
    }
    throw Error("bad form");
}

PmvElement Algebra::odot(const PmvElement& x, const PmvElement& y) const {
    if (form_ == Form::Gamma) {
        require(x, "odot");
        require(y, "odot");
        // (x - u + y) v 0
        GroupElement s =
            g_add(*group_, g_sub(*group_, x.group(), group_->unit), y.group());
        return PmvElement(g_meet_join(*group_, s, g_zero(group_->desc)).second);
    }
    return sim(oplus(minus(y), minus(x)));
}

PmvElement Algebra::arrow(const PmvElement& x, const PmvElement& y) const {
    return oplus(minus(x), y);
}

PmvElement Algebra::squig(const PmvElement& x, const PmvElement& y) const {
    return oplus(y, sim(x));
}

PmvElement Algebra::join(const PmvElement& x, const PmvElement& y) const {
    switch (form_) {
        case Form::Gamma: {
            require(x, "join");
            require(y, "join");
            return PmvElement(g_meet_join(*group_, x.group(), y.group()).second);
        }
        case Form::Product: {
            require(x, "join");
            require(y, "join");
            std::vector<PmvElement> t;
            t.reserve(factors_.size());
            for (size_t i = 0; i < factors_.size(); i++)
                t.push_back(factors_[i]->join(x.tuple()[i], y.tuple()[i]));
            return PmvElement(std::move(t));
        }
        case Form::Interval: return base_->join(x, y);
        case Form::Table: return oplus(x, odot(sim(x), y));
    }
    throw Error("bad form");
}

PmvElement Algebra::meet(const PmvElement& x, const PmvElement& y) const {
    switch (form_) {
        case Form::Gamma: {
            require(x, "meet");
            require(y, "meet");
            return PmvElement(g_meet_join(*group_, x.group(), y.group()).first);
        }
        case Form::Product: {
            require(x, "meet");
            require(y, "meet");
            std::vector<PmvElement> t;
            t.reserve(factors_.size());
            for (size_t i = 0; i < factors_.size(); i++)
                t.push_back(factors_[i]->meet(x.tuple()[i], y.tuple()[i]));
            return PmvElement(std::move(t));
        }
        case Form::Interval: return base_->meet(x, y);
        case Form::Table: return odot(x, oplus(minus(x), y));
    }
    throw Error("bad form");
}

Cmp Algebra::compare(const PmvElement& x, const PmvElement& y) const {
    if (form_ == Form::Gamma) return g_compare(*group_, x.group(), y.group());
    if (x == y) return Cmp::EQ;
    PmvElement m = meet(x, y);
    if (m == x) return Cmp::LT;
    if (m == y) return Cmp::GT;
    return Cmp::Incomparable;
}

bool Algebra::leq(const PmvElement& x, const PmvElement& y) const {
    Cmp c = compare(x, y);
    return c == Cmp::LT || c == Cmp::EQ;
}

std::optional<PmvElement> Algebra::partial_add(const PmvElement& x, const PmvElement& y) const {
    if (!(odot(y, x) == zero())) return std::nullopt;
    return oplus(x, y);
}

std::optional<PmvElement> Algebra::nat_mul(unsigned long n, const PmvElement& x,
                                           MulMode mode) const {
    require(x, "nat_mul");
    PmvElement acc = zero();
    for (unsigned long i = 0; i < n; i++) {
        if (mode == MulMode::Circled) {
            acc = oplus(acc, x);
        } else {
            auto next = partial_add(acc, x);
            if (!next) return std::nullopt;
            acc = *next;
        }
    }
    return acc;
}

PmvElement Algebra::odot_pow(const PmvElement& x, unsigned long n) const {
    if (n == 0) throw Error("odot_pow needs n >= 1");
    PmvElement acc = x;
    for (unsigned long i = 1; i < n; i++) acc = odot(acc, x);
    return acc;
}

bool Algebra::is_boolean_elem(const PmvElement& x) const { return oplus(x, x) == x; }

// ---------------------------------------------------------------------------
// Enumeration and sampling
// ---------------------------------------------------------------------------

bool Algebra::is_finite() const {
    switch (form_) {
        case Form::Table: return true;
        case Form::Gamma: {
            if (PmvElement(group_->unit) == zero()) return true;
            const auto& d = *group_->desc;
            return d.kind() == GroupDescriptor::Kind::IntVector &&
                   (d.dims() <= 1 || d.order() == VecOrder::Product);
        }
        case Form::Product:
            for (const auto& f : factors_)
                if (!f->is_finite()) return false;
            return true;
        case Form::Interval:
            if (base_->is_finite()) return true;
            return bound_ == base_->zero();
    }
    return false;
}

std::size_t Algebra::size() const { return enumerate().size(); }

std::vector<PmvElement> Algebra::enumerate() const {
    if (!is_finite()) throw Error("cannot enumerate infinite carrier " + describe());
    switch (form_) {
        case Form::Table: {
            std::vector<PmvElement> out;
            out.reserve(table_.n);
            for (size_t i = 0; i < table_.n; i++) out.emplace_back(i);
            return out;
        }
        case Form::Gamma: {
            if (PmvElement(group_->unit) == zero()) return {zero()};
            // integer box 0..u_i, last coordinate fastest
            const auto& u = group_->unit.coords;
            int d = group_->desc->dims();
            std::vector<long> maxes(static_cast<size_t>(d));
            for (int i = 0; i < d; i++) maxes[static_cast<size_t>(i)] = u[static_cast<size_t>(i)].num().get_si();
            std::vector<long> cur(static_cast<size_t>(d), 0);
            std::vector<PmvElement> out;
            while (true) {
                std::vector<Rational> coords;
                coords.reserve(static_cast<size_t>(d));
                for (long v : cur) coords.emplace_back(v);
                out.emplace_back(g_make(group_->desc, std::move(coords)));
                int i = d - 1;
                while (i >= 0 && ++cur[static_cast<size_t>(i)] > maxes[static_cast<size_t>(i)])
                    cur[static_cast<size_t>(i--)] = 0;
                if (i < 0) break;
            }
            return out;
        }
        case Form::Product: {
            std::vector<std::vector<PmvElement>> parts;
            parts.reserve(factors_.size());
            for (const auto& f : factors_) parts.push_back(f->enumerate());
            std::vector<PmvElement> out;
            std::vector<size_t> idx(parts.size(), 0);
            while (true) {
                std::vector<PmvElement> t;
                t.reserve(parts.size());
                for (size_t i = 0; i < parts.size(); i++) t.push_back(parts[i][idx[i]]);
                out.emplace_back(std::move(t));
                int i = static_cast<int>(parts.size()) - 1;
                while (i >= 0 && ++idx[static_cast<size_t>(i)] == parts[static_cast<size_t>(i)].size())
                    idx[static_cast<size_t>(i--)] = 0;
                if (i < 0) break;
            }
            return out;
        }
        case Form::Interval: {
            if (!base_->is_finite()) return {zero()}; // bound == 0
            std::vector<PmvElement> out;
            for (const auto& x : base_->enumerate())
                if (base_->leq(x, bound_)) out.push_back(x);
            return out;
        }
    }
    throw Error("bad form");
}

std::vector<PmvElement> Algebra::sample(const GridOptions& opts) const {
    if (is_finite()) {
        auto all = enumerate();
        if (all.size() > opts.budget) all.resize(opts.budget);
        return all;
    }
    switch (form_) {
        case Form::Gamma: {
            std::vector<PmvElement> out;
            std::set<PmvElement, ElemLess> seen;
            auto push = [&](PmvElement e) {
                if (seen.insert(e).second) out.push_back(std::move(e));
            };
            push(zero());
            push(one());
            GridOptions gopts = opts;
            gopts.budget = opts.budget * 2;
            for (auto& g : group_grid(group_->desc, gopts)) {
                if (out.size() >= opts.budget) break;
                GroupElement clamped =
                    g_meet_join(*group_, g_meet_join(*group_, g, g_zero(group_->desc)).second,
                                group_->unit)
                        .first;
                push(PmvElement(std::move(clamped)));
            }
            // midpoint closure inside [0,u]
            if (group_->desc->two_divisible()) {
                size_t lo = 0;
                while (out.size() < opts.budget) {
                    size_t n = out.size();
                    bool grew = false;
                    for (size_t i = lo; i < n && out.size() < opts.budget; i++) {
                        for (size_t j = 0; j < i && out.size() < opts.budget; j++) {
                            auto mid = g_halve(*group_,
                                               g_add(*group_, out[i].group(), out[j].group()));
                            if (mid && seen.insert(PmvElement(*mid)).second) {
                                out.emplace_back(*mid);
                                grew = true;
                            }
                        }
                    }
                    if (!grew) break;
                    lo = n;
                }
            }
            return out;
        }
        case Form::Product: {
            std::vector<std::vector<PmvElement>> parts;
            parts.reserve(factors_.size());
            for (const auto& f : factors_) parts.push_back(f->sample(opts));
            // diagonal enumeration: tuples ordered by total index sum
            std::vector<PmvElement> out;
            size_t k = parts.size();
            size_t max_total = 0;
            for (const auto& p : parts) max_total += p.size() - 1;
            for (size_t total = 0; total <= max_total && out.size() < opts.budget; total++) {
                std::vector<size_t> idx(k, 0);
                // enumerate all index tuples with the given sum, lexicographically
                std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t remaining) {
                    if (out.size() >= opts.budget) return;
                    if (pos + 1 == k) {
                        if (remaining < parts[pos].size()) {
                            idx[pos] = remaining;
                            std::vector<PmvElement> t;
                            t.reserve(k);
                            for (size_t i = 0; i < k; i++) t.push_back(parts[i][idx[i]]);
                            out.emplace_back(std::move(t));
                        }
                        return;
                    }
                    size_t lim = std::min(remaining, parts[pos].size() - 1);
                    for (size_t v = 0; v <= lim; v++) {
                        idx[pos] = v;
                        rec(pos + 1, remaining - v);
                        if (out.size() >= opts.budget) return;
                    }
                };
                rec(0, total);
            }
            return out;
        }
        case Form::Interval: {
            auto base_pts = base_->sample(opts);
            std::vector<PmvElement> out;
            std::set<PmvElement, ElemLess> seen;
            for (auto& x : base_pts) {
                PmvElement clamped = base_->meet(x, bound_);
                if (seen.insert(clamped).second) out.push_back(std::move(clamped));
                if (out.size() >= opts.budget) break;
            }
            return out;
        }
        case Form::Table:
            return enumerate();
    }
    throw Error("bad form");
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {
std::string print_raw_impl(const PmvElement& x) {
    if (x.is_index()) return "#" + std::to_string(x.index());
    if (x.is_group()) return print_element(x.group());
    std::string out = "(";
    const auto& t = x.tuple();
    for (size_t i = 0; i < t.size(); i++) {
        if (i) out += ",";
        out += print_raw_impl(t[i]);
    }
    return out + ")";
}
} // namespace

std::string print_raw(const PmvElement& x) { return print_raw_impl(x); }

std::string Algebra::print(const PmvElement& x) const {
    switch (form_) {
        case Form::Table:
            if (x.is_index() && x.index() < table_.n) return table_.labels[x.index()];
            break;
        case Form::Gamma:
            if (x.is_group()) return print_element(x.group());
            break;
        case Form::Product:
            if (x.is_tuple() && x.tuple().size() == factors_.size()) {
                std::string out = "(";
                for (size_t i = 0; i < factors_.size(); i++) {
                    if (i) out += ",";
                    out += factors_[i]->print(x.tuple()[i]);
                }
                return out + ")";
            }
            break;
        case Form::Interval:
            return base_->print(x);
    }
    return print_raw_impl(x);
}

std::string Algebra::describe() const {
    switch (form_) {
        case Form::Table: return "table(" + std::to_string(table_.n) + " elements)";
        case Form::Gamma:
            return "Gamma(" + group_->desc->describe() + ", u=" + print_element(group_->unit) + ")";
        case Form::Product: {
            std::string out = "product(";
            for (size_t i = 0; i < factors_.size(); i++) {
                if (i) out += " x ";
                out += factors_[i]->describe();
            }
            return out + ")";
        }
        case Form::Interval:
            return "interval(" + base_->describe() + ", a=" + base_->print(bound_) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Boolean skeleton
// ---------------------------------------------------------------------------

bool is_boolean(const AlgebraPtr& M, const PmvElement& x) { return M->is_boolean_elem(x); }

std::vector<PmvElement> boolean_skeleton(const AlgebraPtr& M) {
    if (M->is_finite()) {
        std::vector<PmvElement> out;
        for (const auto& x : M->enumerate())
            if (M->is_boolean_elem(x)) out.push_back(x);
        return out;
    }
    switch (M->form()) {
        case Algebra::Form::Gamma: {
            const auto& G = M->group();
            const auto& d = *G.desc;
            bool vector_product =
                (d.kind() == GroupDescriptor::Kind::IntVector ||
                 d.kind() == GroupDescriptor::Kind::RatVector) &&
                d.dims() > 1 && d.order() == VecOrder::Product;
            if (vector_product) {
                // per-coordinate {0, u_i}
                std::vector<PmvElement> out;
                int dims = d.dims();
                for (unsigned long mask = 0; mask < (1ul << dims); mask++) {
                    std::vector<Rational> coords;
                    for (int i = 0; i < dims; i++)
                        coords.push_back((mask >> i) & 1 ? G.unit.coords[static_cast<size_t>(i)]
                                                         : Rational(0));
                    out.emplace_back(g_make(G.desc, std::move(coords)));
                }
                std::sort(out.begin(), out.end(), ElemLess{});
                return out;
            }
            if (d.linearly_ordered()) return {M->zero(), M->one()};
            throw Error("boolean_skeleton: unsupported carrier " + M->describe());
        }
        case Algebra::Form::Product: {
            std::vector<std::vector<PmvElement>> parts;
            for (const auto& f : M->factors()) parts.push_back(boolean_skeleton(f));
            std::vector<PmvElement> out;
            std::vector<size_t> idx(parts.size(), 0);
            while (true) {
                std::vector<PmvElement> t;
                for (size_t i = 0; i < parts.size(); i++) t.push_back(parts[i][idx[i]]);
                out.emplace_back(std::move(t));
                int i = static_cast<int>(parts.size()) - 1;
                while (i >= 0 && ++idx[static_cast<size_t>(i)] == parts[static_cast<size_t>(i)].size())
                    idx[static_cast<size_t>(i--)] = 0;
                if (i < 0) break;
            }
            return out;
        }
        default:
            throw Error("boolean_skeleton: unsupported carrier " + M->describe());
    }
}

// ---------------------------------------------------------------------------
// Axiom checker
// ---------------------------------------------------------------------------

namespace {

std::string eq_trace(const Algebra& M, const std::string& lhs_expr, const PmvElement& lhs,
                     const std::string& rhs_expr, const PmvElement& rhs) {
    return lhs_expr + " = " + M.print(lhs) + " but " + rhs_expr + " = " + M.print(rhs);
}

} // namespace

bool axiom_holds_at(const AlgebraPtr& M, const std::string& axiom,
                    const std::vector<PmvElement>& e, std::string& trace) {
    const Algebra& A = *M;
    if (axiom == "A1") {
        PmvElement l = A.oplus(e[0], A.oplus(e[1], e[2]));
        PmvElement r = A.oplus(A.oplus(e[0], e[1]), e[2]);
        if (l == r) return true;
        trace = eq_trace(A, "x+(y+z)", l, "(x+y)+z", r);
        return false;
    }
    if (axiom == "A2") {
        PmvElement l = A.oplus(e[0], A.zero());
        PmvElement r = A.oplus(A.zero(), e[0]);
        if (l == e[0] && r == e[0]) return true;
        trace = eq_trace(A, "x+0", l, "0+x", r);
        return false;
    }
    if (axiom == "A3") {
        PmvElement l = A.oplus(e[0], A.one());
        PmvElement r = A.oplus(A.one(), e[0]);
        if (l == A.one() && r == A.one()) return true;
        trace = eq_trace(A, "x+1", l, "1+x", r);
        return false;
    }
    if (axiom == "A4") {
        PmvElement l = A.minus(A.one());
        PmvElement r = A.sim(A.one());
        if (l == A.zero() && r == A.zero()) return true;
        trace = eq_trace(A, "1-", l, "1~", r);
        return false;
    }
    if (axiom == "A5") {
        PmvElement l = A.sim(A.oplus(A.minus(e[0]), A.minus(e[1])));
        PmvElement r = A.minus(A.oplus(A.sim(e[0]), A.sim(e[1])));
        if (l == r) return true;
        trace = eq_trace(A, "(x- + y-)~", l, "(x~ + y~)-", r);
        return false;
    }
    if (axiom == "A6") {
        PmvElement e1 = A.oplus(e[0], A.odot(A.sim(e[0]), e[1]));
        PmvElement e2 = A.oplus(e[1], A.odot(A.sim(e[1]), e[0]));
        PmvElement e3 = A.oplus(A.odot(e[0], A.minus(e[1])), e[1]);
        PmvElement e4 = A.oplus(A.odot(e[1], A.minus(e[0])), e[0]);
        if (e1 == e2 && e2 == e3 && e3 == e4) return true;
        trace = "x+(x~. y) = " + A.print(e1) + ", y+(y~. x) = " + A.print(e2) +
                ", (x. y-)+y = " + A.print(e3) + ", (y. x-)+x = " + A.print(e4);
        return false;
    }
    if (axiom == "A7") {
        PmvElement l = A.odot(e[0], A.oplus(A.minus(e[0]), e[1]));
        PmvElement r = A.odot(A.oplus(e[0], A.sim(e[1])), e[1]);
        if (l == r) return true;
        trace = eq_trace(A, "x.(x- + y)", l, "(x + y~).y", r);
        return false;
    }
    if (axiom == "A8") {
        PmvElement l = A.sim(A.minus(e[0]));
        if (l == e[0]) return true;
        trace = eq_trace(A, "(x-)~", l, "x", e[0]);
        return false;
    }
    throw Error("unknown axiom " + axiom);
}

SuiteReport check_axioms(const AlgebraPtr& M, const CheckOptions& opts) {
    // Finite carriers run against their compiled index tables (the exhaustive
    // ternary loop is pure table lookups); counterexamples are translated
    // back to the original elements so they replay through M.
    AlgebraPtr target = M;
    std::vector<PmvElement> original;
    bool compiled = false;
    if (M->is_finite() && M->form() != Algebra::Form::Table) {
        original = M->enumerate();
        target = Algebra::table(compile_table(M));
        compiled = true;
    }
    CheckSet cs = CheckSet::make(target, opts.budget, opts.seed);
    SuiteReport report;
    report.name = "axioms";
    struct Ax {
        const char* name;
        int arity;
    };
    static const Ax axioms[] = {{"A1", 3}, {"A2", 1}, {"A3", 1}, {"A4", 0},
                                  {"A5", 2}, {"A6", 2}, {"A7", 2}, {"A8", 1}};
    for (const auto& ax : axioms) {
        std::string name = ax.name;
        SuiteReport sub =
            run_check(cs, name, ax.arity,
                      [&target, name](const std::vector<PmvElement>& e, std::string& trace) {
                          return axiom_holds_at(target, name, e, trace);
                      });
        if (compiled && sub.counterexample) {
            for (auto& e : sub.counterexample->elements) e = original[e.index()];
        }
        report.absorb(std::move(sub));
    }
    return report;
}

bool replay_axiom(const AlgebraPtr& M, const Counterexample& cex) {
    std::string trace;
    return !axiom_holds_at(M, cex.property, cex.elements, trace);
}

// ---------------------------------------------------------------------------
// Symmetry and divisibility
// ---------------------------------------------------------------------------

SymmetryResult is_symmetric(const AlgebraPtr& M, const CheckOptions& opts) {
    SymmetryResult res;
    res.exhaustive = M->is_finite();
    auto pts = M->sample(GridOptions{opts.budget, opts.seed});
    for (const auto& x : pts) {
        if (!(M->minus(x) == M->sim(x))) {
            res.symmetric = false;
            res.witness = x;
            return res;
        }
    }
    res.symmetric = true;
    return res;
}

namespace {

// y witnesses n-divisibility of x when the n-fold partial sum ny exists and
// equals x (each step non-truncating, so the circled and partial multiples
// coincide along the way).
bool divisibility_witness_ok(const Algebra& A, unsigned long n, const PmvElement& x,
                             const PmvElement& y) {
    auto ny = A.nat_mul(n, y, MulMode::Partial);
    return ny && *ny == x;
}

} // namespace

DivisibilityResult is_n_divisible(const AlgebraPtr& M, unsigned long n, const CheckOptions& opts) {
    if (n < 2) throw Error("is_n_divisible needs n >= 2");
    DivisibilityResult res;
    if (M->is_finite()) {
        res.exhaustive = true;
        auto all = M->enumerate();
        for (const auto& x : all) {
            bool found = false;
            for (const auto& y : all) {
                if (divisibility_witness_ok(*M, n, x, y)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                res.divisible = false;
                res.witness = x;
                return res;
            }
        }
        res.divisible = true;
        return res;
    }
    if (M->form() == Algebra::Form::Gamma && M->group().desc->two_divisible()) {
        // closed form y = x/n, checked on the grid
        const auto& G = M->group();
        res.exhaustive = false;
        for (const auto& x : M->sample(GridOptions{opts.budget, opts.seed})) {
            auto y = g_divn(G, n, x.group());
            if (!y || !divisibility_witness_ok(*M, n, x, PmvElement(*y))) {
                res.divisible = false;
                res.witness = x;
                return res;
            }
        }
        res.divisible = true;
        return res;
    }
    // sampled witness search
    res.exhaustive = false;
    auto pts = M->sample(GridOptions{opts.budget, opts.seed});
    for (const auto& x : pts) {
        bool found = false;
        for (const auto& y : pts) {
            if (divisibility_witness_ok(*M, n, x, y)) {
                found = true;
                break;
            }
        }
        if (!found) {
            res.divisible = false;
            res.witness = x;
            return res;
        }
    }
    res.divisible = true;
    return res;
}

// ---------------------------------------------------------------------------
// Table compilation
// ---------------------------------------------------------------------------

FiniteTableData compile_table(const AlgebraPtr& M) {
    auto elems = M->enumerate();
    std::map<PmvElement, size_t, ElemLess> index;
    for (size_t i = 0; i < elems.size(); i++) index.emplace(elems[i], i);
    auto idx_of = [&](const PmvElement& x) {
        auto it = index.find(x);
        if (it == index.end()) throw Error("operation left the carrier during compilation");
        return it->second;
    };
    FiniteTableData t;
    t.n = elems.size();
    t.oplus.resize(t.n * t.n);
    t.minus.resize(t.n);
    t.sim.resize(t.n);
    for (size_t i = 0; i < t.n; i++) {
        t.minus[i] = idx_of(M->minus(elems[i]));
        t.sim[i] = idx_of(M->sim(elems[i]));
        for (size_t j = 0; j < t.n; j++) t.oplus[i * t.n + j] = idx_of(M->oplus(elems[i], elems[j]));
        t.labels.push_back(M->print(elems[i]));
    }
    t.zero = idx_of(M->zero());
    t.one = idx_of(M->one());
    return t;
}

} // namespace pmv
