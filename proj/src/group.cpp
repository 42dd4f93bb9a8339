#include "pmv/group.hpp"

#include <algorithm>
#include <set>

#include "pmv/errors.hpp"

namespace pmv {

// ---------------------------------------------------------------------------
// Descriptors
// ---------------------------------------------------------------------------

DescriptorPtr GroupDescriptor::int_vector(int dims, VecOrder order) {
    if (dims < 0) throw Error("int_vector dims must be >= 0");
    auto d = std::shared_ptr<GroupDescriptor>(new GroupDescriptor());
    d->kind_ = Kind::IntVector;
    d->dims_ = dims;
    d->order_ = order;
    return d;
}

DescriptorPtr GroupDescriptor::rat_vector(int dims, VecOrder order) {
    if (dims < 0) throw Error("rat_vector dims must be >= 0");
    auto d = std::shared_ptr<GroupDescriptor>(new GroupDescriptor());
    d->kind_ = Kind::RatVector;
    d->dims_ = dims;
    d->order_ = order;
    return d;
}

DescriptorPtr GroupDescriptor::cocycle_q4() {
    auto d = std::shared_ptr<GroupDescriptor>(new GroupDescriptor());
    d->kind_ = Kind::CocycleQ4;
    d->dims_ = 4;
    return d;
}

DescriptorPtr GroupDescriptor::lex_pair(DescriptorPtr h, DescriptorPtr g) {
    if (!h || !g) throw Error("lex_pair components must be non-null");
    if (!h->linearly_ordered())
        throw Error("lex_pair requires a linearly ordered first component, got " + h->describe());
    auto d = std::shared_ptr<GroupDescriptor>(new GroupDescriptor());
    d->kind_ = Kind::LexPair;
    d->dims_ = h->dims() + g->dims();
    d->lex_h_ = std::move(h);
    d->lex_g_ = std::move(g);
    return d;
}

bool GroupDescriptor::linearly_ordered() const {
    switch (kind_) {
        case Kind::IntVector:
        case Kind::RatVector:
            return dims_ <= 1 || order_ == VecOrder::Lex;
        case Kind::CocycleQ4:
            return true;
        case Kind::LexPair:
            return lex_g_->linearly_ordered();
    }
    return false;
}

bool GroupDescriptor::two_divisible() const {
    switch (kind_) {
        case Kind::IntVector:
            return dims_ == 0;
        case Kind::RatVector:
            return true;
        case Kind::CocycleQ4:
            return true;
        case Kind::LexPair:
            return lex_h_->two_divisible() && lex_g_->two_divisible();
    }
    return false;
}

bool GroupDescriptor::integral_coords() const {
    switch (kind_) {
        case Kind::IntVector:
            return true;
        case Kind::RatVector:
        case Kind::CocycleQ4:
            return false;
        case Kind::LexPair:
            return lex_h_->integral_coords() && lex_g_->integral_coords();
    }
    return false;
}

bool GroupDescriptor::same_as(const GroupDescriptor& o) const {
    if (kind_ != o.kind_ || dims_ != o.dims_) return false;
    switch (kind_) {
        case Kind::IntVector:
        case Kind::RatVector:
            return dims_ <= 1 || order_ == o.order_;
        case Kind::CocycleQ4:
            return true;
        case Kind::LexPair:
            return lex_h_->same_as(*o.lex_h_) && lex_g_->same_as(*o.lex_g_);
    }
    return false;
}

std::string GroupDescriptor::describe() const {
    switch (kind_) {
        case Kind::IntVector:
            return "Z^" + std::to_string(dims_) +
                   (dims_ > 1 ? (order_ == VecOrder::Lex ? "(lex)" : "(product)") : "");
        case Kind::RatVector:
            return "Q^" + std::to_string(dims_) +
                   (dims_ > 1 ? (order_ == VecOrder::Lex ? "(lex)" : "(product)") : "");
        case Kind::CocycleQ4:
            return "cocycle_q4";
        case Kind::LexPair:
            return "lex(" + lex_h_->describe() + ", " + lex_g_->describe() + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Coordinate-span kernels (LexPair recurses on slices)
// ---------------------------------------------------------------------------

namespace {

void add_span(const GroupDescriptor& d, const Rational* x, const Rational* y, Rational* out) {
    switch (d.kind()) {
        case GroupDescriptor::Kind::IntVector:
        case GroupDescriptor::Kind::RatVector:
            for (int i = 0; i < d.dims(); i++) out[i] = x[i] + y[i];
            break;
        case GroupDescriptor::Kind::CocycleQ4:
            out[0] = x[0] + y[0];
            out[1] = x[1] + y[1];
            out[2] = x[2] + y[2];
            out[3] = x[3] + y[3] + x[1] * y[2];
            break;
        case GroupDescriptor::Kind::LexPair: {
            int hd = d.lex_h()->dims();
            add_span(*d.lex_h(), x, y, out);
            add_span(*d.lex_g(), x + hd, y + hd, out + hd);
            break;
        }
    }
}

void neg_span(const GroupDescriptor& d, const Rational* x, Rational* out) {
    switch (d.kind()) {
        case GroupDescriptor::Kind::IntVector:
        case GroupDescriptor::Kind::RatVector:
            for (int i = 0; i < d.dims(); i++) out[i] = -x[i];
            break;
        case GroupDescriptor::Kind::CocycleQ4:
            out[0] = -x[0];
            out[1] = -x[1];
            out[2] = -x[2];
            out[3] = -x[3] + x[1] * x[2];
            break;
        case GroupDescriptor::Kind::LexPair: {
            int hd = d.lex_h()->dims();
            neg_span(*d.lex_h(), x, out);
            neg_span(*d.lex_g(), x + hd, out + hd);
            break;
        }
    }
}

Cmp lex_cmp_span(const Rational* x, const Rational* y, int n) {
    for (int i = 0; i < n; i++) {
        int c = x[i].cmp(y[i]);
        if (c < 0) return Cmp::LT;
        if (c > 0) return Cmp::GT;
    }
    return Cmp::EQ;
}

Cmp compare_span(const GroupDescriptor& d, const Rational* x, const Rational* y) {
    switch (d.kind()) {
        case GroupDescriptor::Kind::IntVector:
        case GroupDescriptor::Kind::RatVector:
            if (d.dims() > 1 && d.order() == VecOrder::Product) {
                bool le = true, ge = true;
                for (int i = 0; i < d.dims(); i++) {
                    int c = x[i].cmp(y[i]);
                    if (c < 0) ge = false;
                    if (c > 0) le = false;
                }
                if (le && ge) return Cmp::EQ;
                if (le) return Cmp::LT;
                if (ge) return Cmp::GT;
                return Cmp::Incomparable;
            }
            return lex_cmp_span(x, y, d.dims());
        case GroupDescriptor::Kind::CocycleQ4:
            return lex_cmp_span(x, y, 4);
        case GroupDescriptor::Kind::LexPair: {
            int hd = d.lex_h()->dims();
            Cmp ch = compare_span(*d.lex_h(), x, y);
            if (ch != Cmp::EQ) return ch;
            return compare_span(*d.lex_g(), x + hd, y + hd);
        }
    }
    return Cmp::Incomparable;
}

void meet_join_span(const GroupDescriptor& d, const Rational* x, const Rational* y, Rational* mt,
                    Rational* jn) {
    switch (d.kind()) {
        case GroupDescriptor::Kind::IntVector:
        case GroupDescriptor::Kind::RatVector:
            if (d.dims() > 1 && d.order() == VecOrder::Product) {
                for (int i = 0; i < d.dims(); i++) {
                    mt[i] = min(x[i], y[i]);
                    jn[i] = max(x[i], y[i]);
                }
                return;
            }
            [[fallthrough]];
        case GroupDescriptor::Kind::CocycleQ4: {
            Cmp c = compare_span(d, x, y);
            const Rational* lo = (c == Cmp::GT) ? y : x;
            const Rational* hi = (c == Cmp::GT) ? x : y;
            for (int i = 0; i < d.dims(); i++) {
                mt[i] = lo[i];
                jn[i] = hi[i];
            }
            return;
        }
        case GroupDescriptor::Kind::LexPair: {
            int hd = d.lex_h()->dims();
            Cmp ch = compare_span(*d.lex_h(), x, y);
            if (ch == Cmp::EQ) {
                for (int i = 0; i < hd; i++) {
                    mt[i] = x[i];
                    jn[i] = x[i];
                }
                meet_join_span(*d.lex_g(), x + hd, y + hd, mt + hd, jn + hd);
            } else {
                const Rational* lo = (ch == Cmp::GT) ? y : x;
                const Rational* hi = (ch == Cmp::GT) ? x : y;
                for (int i = 0; i < d.dims(); i++) {
                    mt[i] = lo[i];
                    jn[i] = hi[i];
                }
            }
            return;
        }
    }
}

bool divn_span(const GroupDescriptor& d, unsigned long n, const Rational* x, Rational* out) {
    switch (d.kind()) {
        case GroupDescriptor::Kind::IntVector:
            for (int i = 0; i < d.dims(); i++) {
                mpz_class num = x[i].num();
                if (num % static_cast<long>(n) != 0) return false;
                out[i] = Rational(mpz_class(num / static_cast<long>(n)));
            }
            return true;
        case GroupDescriptor::Kind::RatVector:
            for (int i = 0; i < d.dims(); i++) out[i] = x[i].div_int(static_cast<long>(n));
            return true;
        case GroupDescriptor::Kind::CocycleQ4: {
            // k*(p,q,s,t) has fourth coordinate k*t + k(k-1)/2 * q*s, so the
            // n-th part of (a,b,c,d) is (a/n, b/n, c/n, d/n - (n-1)bc/(2n^2)).
            long ln = static_cast<long>(n);
            out[0] = x[0].div_int(ln);
            out[1] = x[1].div_int(ln);
            out[2] = x[2].div_int(ln);
            Rational corr = (x[1] * x[2] * Rational(ln - 1)).div(Rational(2 * ln * ln));
            out[3] = x[3].div_int(ln) - corr;
            return true;
        }
        case GroupDescriptor::Kind::LexPair: {
            int hd = d.lex_h()->dims();
            return divn_span(*d.lex_h(), n, x, out) && divn_span(*d.lex_g(), n, x + hd, out + hd);
        }
    }
    return false;
}

} // namespace

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

GroupElement g_zero(const DescriptorPtr& desc) {
    GroupElement e;
    e.desc = desc;
    e.coords.assign(static_cast<size_t>(desc->dims()), Rational(0));
    return e;
}

GroupElement g_make(const DescriptorPtr& desc, std::vector<Rational> coords) {
    if (static_cast<int>(coords.size()) != desc->dims())
        throw Error("element has " + std::to_string(coords.size()) + " coordinates, " +
                    desc->describe() + " needs " + std::to_string(desc->dims()));
    if (desc->kind() == GroupDescriptor::Kind::IntVector) {
        for (const auto& c : coords)
            if (!c.is_integer()) throw Error("non-integer coordinate " + c.str() + " in " + desc->describe());
    } else if (desc->kind() == GroupDescriptor::Kind::LexPair) {
        int hd = desc->lex_h()->dims();
        g_make(desc->lex_h(), std::vector<Rational>(coords.begin(), coords.begin() + hd));
        g_make(desc->lex_g(), std::vector<Rational>(coords.begin() + hd, coords.end()));
    }
    GroupElement e;
    e.desc = desc;
    e.coords = std::move(coords);
    return e;
}

namespace {

void require_same(const UnitalGroup& G, const GroupElement& x, const char* where) {
    if (!x.desc || !x.desc->same_as(*G.desc))
        throw Error(std::string(where) + ": descriptor mismatch (element is " +
                    (x.desc ? x.desc->describe() : "untagged") + ", carrier is " + G.desc->describe() + ")");
}

} // namespace

GroupElement g_add(const UnitalGroup& G, const GroupElement& x, const GroupElement& y) {
    require_same(G, x, "g_add");
    require_same(G, y, "g_add");
    GroupElement out = g_zero(G.desc);
    add_span(*G.desc, x.coords.data(), y.coords.data(), out.coords.data());
    return out;
}

GroupElement g_neg(const UnitalGroup& G, const GroupElement& x) {
    require_same(G, x, "g_neg");
    GroupElement out = g_zero(G.desc);
    neg_span(*G.desc, x.coords.data(), out.coords.data());
    return out;
}

GroupElement g_sub(const UnitalGroup& G, const GroupElement& x, const GroupElement& y) {
    return g_add(G, x, g_neg(G, y));
}

Cmp g_compare(const UnitalGroup& G, const GroupElement& x, const GroupElement& y) {
    require_same(G, x, "g_compare");
    require_same(G, y, "g_compare");
    return compare_span(*G.desc, x.coords.data(), y.coords.data());
}

bool g_leq(const UnitalGroup& G, const GroupElement& x, const GroupElement& y) {
    Cmp c = g_compare(G, x, y);
    return c == Cmp::LT || c == Cmp::EQ;
}

std::pair<GroupElement, GroupElement> g_meet_join(const UnitalGroup& G, const GroupElement& x,
                                                  const GroupElement& y) {
    require_same(G, x, "g_meet_join");
    require_same(G, y, "g_meet_join");
    GroupElement mt = g_zero(G.desc), jn = g_zero(G.desc);
    meet_join_span(*G.desc, x.coords.data(), y.coords.data(), mt.coords.data(), jn.coords.data());
    return {mt, jn};
}

GroupElement g_nmul(const UnitalGroup& G, unsigned long n, const GroupElement& x) {
    require_same(G, x, "g_nmul");
    GroupElement acc = g_zero(G.desc);
    for (unsigned long i = 0; i < n; i++) acc = g_add(G, acc, x);
    return acc;
}

std::optional<GroupElement> g_halve(const UnitalGroup& G, const GroupElement& x) {
    return g_divn(G, 2, x);
}

std::optional<GroupElement> g_divn(const UnitalGroup& G, unsigned long n, const GroupElement& x) {
    require_same(G, x, "g_divn");
    if (n == 0) throw Error("g_divn with n = 0");
    GroupElement out = g_zero(G.desc);
    if (!divn_span(*G.desc, n, x.coords.data(), out.coords.data())) return std::nullopt;
    return out;
}

bool is_two_divisible(const UnitalGroup& G) { return G.desc->two_divisible(); }

Centrality is_central(const UnitalGroup& G, const GroupElement& x) {
    require_same(G, x, "is_central");
    switch (G.desc->kind()) {
        case GroupDescriptor::Kind::IntVector:
        case GroupDescriptor::Kind::RatVector:
            return {true, true, "abelian carrier"};
        case GroupDescriptor::Kind::CocycleQ4: {
            // (a,b,c,d) commutes with every (x,y,z,w) iff b*z = y*c for all
            // y,z, which forces b = c = 0.
            bool central = x.coords[1].is_zero() && x.coords[2].is_zero();
            return {central, true, "cocycle center: coordinates 2 and 3 vanish"};
        }
        case GroupDescriptor::Kind::LexPair: {
            UnitalGroup H{G.desc->lex_h(), g_zero(G.desc->lex_h())};
            UnitalGroup K{G.desc->lex_g(), g_zero(G.desc->lex_g())};
            int hd = G.desc->lex_h()->dims();
            GroupElement xh = g_make(G.desc->lex_h(),
                                     std::vector<Rational>(x.coords.begin(), x.coords.begin() + hd));
            GroupElement xg = g_make(G.desc->lex_g(),
                                     std::vector<Rational>(x.coords.begin() + hd, x.coords.end()));
            Centrality ch = is_central(H, xh);
            Centrality cg = is_central(K, xg);
            return {ch.central && cg.central, ch.proved && cg.proved, "componentwise"};
        }
    }
    return {false, false, ""};
}

bool g_commutes(const UnitalGroup& G, const GroupElement& x, const GroupElement& y) {
    return g_add(G, x, y) == g_add(G, y, x);
}

std::pair<GroupElement, GroupElement> pos_neg_parts(const UnitalGroup& G, const GroupElement& g) {
    GroupElement zero = g_zero(G.desc);
    GroupElement gplus = g_meet_join(G, g, zero).second;
    GroupElement gminus = g_meet_join(G, g_neg(G, g), zero).second;
    return {gplus, gminus};
}

bool g_in_unit_interval(const UnitalGroup& G, const GroupElement& x) {
    return g_leq(G, g_zero(G.desc), x) && g_leq(G, x, G.unit);
}

bool element_key_less(const GroupElement& a, const GroupElement& b) {
    size_t n = std::min(a.coords.size(), b.coords.size());
    for (size_t i = 0; i < n; i++) {
        int c = a.coords[i].cmp(b.coords[i]);
        if (c != 0) return c < 0;
    }
    return a.coords.size() < b.coords.size();
}

std::string print_element(const GroupElement& x) {
    if (x.coords.size() == 1) return x.coords[0].str();
    std::string out = "(";
    for (size_t i = 0; i < x.coords.size(); i++) {
        if (i) out += ",";
        out += x.coords[i].str();
    }
    out += ")";
    return out;
}

// ---------------------------------------------------------------------------
// Grids and construction checks
// ---------------------------------------------------------------------------

namespace {

const std::vector<Rational>& coordinate_pool() {
    static const std::vector<Rational> pool = {
        Rational(0),      Rational(1),     Rational(-1),     Rational(1, 2),
        Rational(-1, 2),  Rational(1, 4),  Rational(-1, 4),  Rational(3, 4),
        Rational(-3, 4),  Rational(2),     Rational(-2)};
    return pool;
}

Rational magnitude_key(const GroupElement& e) {
    Rational s(0);
    for (const auto& c : e.coords) s += (c.sign() < 0 ? -c : c);
    return s;
}

void coordinate_integrality(const GroupDescriptor& d, std::vector<bool>& out) {
    switch (d.kind()) {
        case GroupDescriptor::Kind::IntVector:
            out.insert(out.end(), static_cast<size_t>(d.dims()), true);
            break;
        case GroupDescriptor::Kind::RatVector:
        case GroupDescriptor::Kind::CocycleQ4:
            out.insert(out.end(), static_cast<size_t>(d.dims()), false);
            break;
        case GroupDescriptor::Kind::LexPair:
            coordinate_integrality(*d.lex_h(), out);
            coordinate_integrality(*d.lex_g(), out);
            break;
    }
}

struct KeyLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const {
        return element_key_less(a, b);
    }
};

} // namespace

std::vector<GroupElement> group_grid(const DescriptorPtr& desc, const GridOptions& opts) {
    const int d = desc->dims();
    std::vector<bool> integral;
    coordinate_integrality(*desc, integral);
    std::vector<GroupElement> out;
    std::set<GroupElement, KeyLess> seen;
    auto push = [&](GroupElement e) {
        if (seen.insert(e).second) out.push_back(std::move(e));
    };

    if (d == 0) {
        push(g_zero(desc));
        return out;
    }

    // Per-coordinate pools (integer coordinates keep only integral values),
    // combinations sorted small magnitudes first.
    std::vector<std::vector<Rational>> pools(static_cast<size_t>(d));
    for (int i = 0; i < d; i++) {
        for (const auto& c : coordinate_pool())
            if (!integral[static_cast<size_t>(i)] || c.is_integer())
                pools[static_cast<size_t>(i)].push_back(c);
    }
    double combos = 1;
    for (const auto& p : pools) {
        combos *= static_cast<double>(p.size());
        if (combos > 1e6) break;
    }
    if (combos <= 60000) {
        std::vector<GroupElement> all;
        std::vector<size_t> idx(static_cast<size_t>(d), 0);
        while (true) {
            std::vector<Rational> coords;
            coords.reserve(static_cast<size_t>(d));
            for (int i = 0; i < d; i++) coords.push_back(pools[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]]);
            all.push_back(g_make(desc, std::move(coords)));
            int i = d - 1;
            while (i >= 0 && ++idx[static_cast<size_t>(i)] == pools[static_cast<size_t>(i)].size())
                idx[static_cast<size_t>(i--)] = 0;
            if (i < 0) break;
        }
        std::stable_sort(all.begin(), all.end(), [](const GroupElement& a, const GroupElement& b) {
            Rational ka = magnitude_key(a), kb = magnitude_key(b);
            int c = ka.cmp(kb);
            if (c != 0) return c < 0;
            return element_key_less(a, b);
        });
        for (auto& e : all) {
            if (out.size() >= opts.budget) break;
            push(std::move(e));
        }
    } else {
        push(g_zero(desc));
    }

    // Seeded pseudorandom vectors, denominators <= 16.
    SplitMix64 rng(opts.seed);
    size_t attempts = 0;
    while (out.size() < opts.budget && attempts < opts.budget * 8 + 64) {
        attempts++;
        std::vector<Rational> coords;
        coords.reserve(static_cast<size_t>(d));
        for (int i = 0; i < d; i++) {
            if (integral[static_cast<size_t>(i)]) {
                long v = static_cast<long>(rng.below(9)) - 4;
                coords.emplace_back(v);
            } else {
                long den = static_cast<long>(rng.below(16)) + 1;
                long num = static_cast<long>(rng.below(static_cast<uint64_t>(4 * den + 1))) - 2 * den;
                coords.emplace_back(num, den);
            }
        }
        push(g_make(desc, std::move(coords)));
    }

    // Midpoint closure for density.
    if (desc->two_divisible()) {
        UnitalGroup G{desc, g_zero(desc)};
        size_t lo = 0;
        while (out.size() < opts.budget) {
            size_t n = out.size();
            bool grew = false;
            for (size_t i = lo; i < n && out.size() < opts.budget; i++) {
                for (size_t j = 0; j < i && out.size() < opts.budget; j++) {
                    auto mid = g_halve(G, g_add(G, out[i], out[j]));
                    if (mid && seen.insert(*mid).second) {
                        out.push_back(*mid);
                        grew = true;
                    }
                }
            }
            if (!grew) break;
            lo = n;
        }
    }

    if (out.size() > opts.budget) out.resize(opts.budget);
    return out;
}

void check_strong_unit(const UnitalGroup& G, const std::vector<GroupElement>& sample) {
    for (const auto& g : sample) {
        GroupElement nu = G.unit;
        bool ok = false;
        for (int k = 0; k < 40; k++) {
            if (g_leq(G, g, nu)) {
                ok = true;
                break;
            }
            nu = g_add(G, nu, nu);
        }
        if (!ok)
            throw Error("unit " + print_element(G.unit) + " is not a strong unit: sampled element " +
                        print_element(g) + " exceeds every tested multiple");
    }
}

UnitalGroup UnitalGroup::make(DescriptorPtr desc, GroupElement unit) {
    UnitalGroup G{desc, unit};
    require_same(G, unit, "UnitalGroup");
    GroupElement zero = g_zero(desc);
    if (!g_leq(G, zero, unit)) throw Error("unit " + print_element(unit) + " is not >= 0");
    if (!(unit == zero)) {
        check_strong_unit(G, group_grid(desc, GridOptions{128, 0}));
    }
    return G;
}

} // namespace pmv
