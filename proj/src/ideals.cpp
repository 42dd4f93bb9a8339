#include "pmv/ideals.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "pmv/errors.hpp"

namespace pmv {

namespace {

struct ElemLess {
    bool operator()(const PmvElement& a, const PmvElement& b) const {
        return element_key_less(a, b);
    }
};

/// Finite working view: elements in enumeration order plus op shortcuts on
/// indices.
struct FiniteView {
    AlgebraPtr M;
    std::vector<PmvElement> elems;
    std::map<PmvElement, std::size_t, ElemLess> index;

    explicit FiniteView(const AlgebraPtr& m) : M(m) {
        if (!M->is_finite())
            throw Error("ideal machinery needs a finite algebra, got " + M->describe());
        elems = M->enumerate();
        for (std::size_t i = 0; i < elems.size(); i++) index.emplace(elems[i], i);
    }

    std::size_t n() const { return elems.size(); }
    std::size_t of(const PmvElement& x) const {
        auto it = index.find(x);
        if (it == index.end()) throw Error("element outside carrier");
        return it->second;
    }
    std::size_t oplus(std::size_t a, std::size_t b) const {
        return of(M->oplus(elems[a], elems[b]));
    }
    std::size_t odot(std::size_t a, std::size_t b) const { return of(M->odot(elems[a], elems[b])); }
    std::size_t minus(std::size_t a) const { return of(M->minus(elems[a])); }
    std::size_t sim(std::size_t a) const { return of(M->sim(elems[a])); }
    std::size_t meet(std::size_t a, std::size_t b) const { return of(M->meet(elems[a], elems[b])); }
    bool leq(std::size_t a, std::size_t b) const { return M->leq(elems[a], elems[b]); }
    std::size_t zero() const { return of(M->zero()); }
};

bool is_ideal_mask(const FiniteView& V, const std::vector<bool>& in) {
    if (!in[V.zero()]) return false;
    for (std::size_t x = 0; x < V.n(); x++) {
        if (!in[x]) continue;
        for (std::size_t y = 0; y < V.n(); y++) {
            if (V.leq(y, x) && !in[y]) return false; // downward closed
            if (in[y] && !in[V.oplus(x, y)]) return false;
        }
    }
    return true;
}

bool is_normal_mask(const FiniteView& V, const std::vector<bool>& in) {
    // x + I = I + x as sets, for every x
    for (std::size_t x = 0; x < V.n(); x++) {
        std::set<std::size_t> left, right;
        for (std::size_t i = 0; i < V.n(); i++) {
            if (!in[i]) continue;
            left.insert(V.oplus(x, i));
            right.insert(V.oplus(i, x));
        }
        if (left != right) return false;
    }
    // cross-validate with the element criterion: x.y- in I iff y~.x in I
    for (std::size_t x = 0; x < V.n(); x++) {
        for (std::size_t y = 0; y < V.n(); y++) {
            bool a = in[V.odot(x, V.minus(y))];
            bool b = in[V.odot(V.sim(y), x)];
            if (a != b)
                throw Error("normality criteria disagree at " + V.M->print(V.elems[x]) + ", " +
                            V.M->print(V.elems[y]));
        }
    }
    return true;
}

bool is_proper_mask(const FiniteView& V, const std::vector<bool>& in) {
    for (std::size_t i = 0; i < V.n(); i++)
        if (!in[i]) return true;
    return false;
}

bool is_prime_mask(const FiniteView& V, const std::vector<bool>& in) {
    if (!is_proper_mask(V, in)) return false;
    for (std::size_t x = 0; x < V.n(); x++)
        for (std::size_t y = 0; y < V.n(); y++)
            if (in[V.meet(x, y)] && !in[x] && !in[y]) return false;
    return true;
}

std::vector<bool> mask_of(const FiniteView& V, const IdealSet& S) {
    std::vector<bool> in(V.n(), false);
    for (std::size_t i : S.members) {
        if (i >= V.n()) throw Error("ideal member index out of range");
        in[i] = true;
    }
    return in;
}

std::vector<std::vector<bool>> all_ideal_masks(const FiniteView& V) {
    // Down-sets first, then oplus-closure filter.
    std::size_t n = V.n();
    std::vector<std::vector<bool>> downsets;
    std::vector<bool> start(n, false);
    start[V.zero()] = true;
    std::set<std::vector<bool>> seen{start};
    std::vector<std::vector<bool>> queue{start};
    while (!queue.empty()) {
        std::vector<bool> cur = queue.back();
        queue.pop_back();
        downsets.push_back(cur);
        for (std::size_t add = 0; add < n; add++) {
            if (cur[add]) continue;
            std::vector<bool> next = cur;
            next[add] = true;
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t x = 0; x < n; x++) {
                    if (next[x]) continue;
                    for (std::size_t y = 0; y < n; y++) {
                        if (next[y] && V.leq(x, y)) {
                            next[x] = true;
                            changed = true;
                            break;
                        }
                    }
                }
            }
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::vector<std::vector<bool>> out;
    for (auto& d : downsets) {
        bool closed = true;
        for (std::size_t x = 0; x < n && closed; x++) {
            if (!d[x]) continue;
            for (std::size_t y = 0; y < n; y++) {
                if (d[y] && !d[V.oplus(x, y)]) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) out.push_back(std::move(d));
    }
    // deterministic order: by size, then membership-lexicographic
    std::sort(out.begin(), out.end(), [](const std::vector<bool>& a, const std::vector<bool>& b) {
        std::size_t ca = static_cast<std::size_t>(std::count(a.begin(), a.end(), true));
        std::size_t cb = static_cast<std::size_t>(std::count(b.begin(), b.end(), true));
        if (ca != cb) return ca < cb;
        return a > b;
    });
    return out;
}

IdealSet set_from_mask(const AlgebraPtr& M, const std::vector<bool>& mask) {
    IdealSet S;
    S.base = M;
    for (std::size_t i = 0; i < mask.size(); i++)
        if (mask[i]) S.members.push_back(i);
    return S;
}

} // namespace

bool IdealSet::contains_index(std::size_t i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

IdealSet ideal_from_elements(const AlgebraPtr& M, const std::vector<PmvElement>& elems) {
    FiniteView V(M);
    IdealSet S;
    S.base = M;
    std::set<std::size_t> idx;
    for (const auto& e : elems) idx.insert(V.of(e));
    S.members.assign(idx.begin(), idx.end());
    return S;
}

bool ideal_predicate(const AlgebraPtr& M, const IdealSet& S, IdealKind which) {
    FiniteView V(M);
    std::vector<bool> in = mask_of(V, S);
    switch (which) {
        case IdealKind::Ideal: return is_ideal_mask(V, in);
        case IdealKind::Normal: return is_ideal_mask(V, in) && is_normal_mask(V, in);
        case IdealKind::Prime: return is_ideal_mask(V, in) && is_prime_mask(V, in);
        case IdealKind::Maximal: {
            if (!is_ideal_mask(V, in) || !is_proper_mask(V, in)) return false;
            for (const auto& other : all_ideal_masks(V)) {
                bool is_super = true, equal = true;
                for (std::size_t i = 0; i < V.n(); i++) {
                    if (in[i] && !other[i]) is_super = false;
                    if (in[i] != other[i]) equal = false;
                }
                if (is_super && !equal && is_proper_mask(V, other)) return false;
            }
            return true;
        }
    }
    return false;
}

std::vector<IdealSet> enumerate_ideals(const AlgebraPtr& M, std::size_t max_size,
                                       const IdealFilter& filter) {
    FiniteView V(M);
    if (V.n() > max_size)
        throw Error("ideal enumeration bound exceeded (" + std::to_string(V.n()) + " > " +
                    std::to_string(max_size) + ")");
    std::vector<IdealSet> out;
    for (const auto& mask : all_ideal_masks(V)) {
        IdealSet S = set_from_mask(M, mask);
        if (!filter || filter(S)) out.push_back(std::move(S));
    }
    return out;
}

AlgebraPtr quotient_algebra(const AlgebraPtr& M, const IdealSet& I) {
    FiniteView V(M);
    std::vector<bool> in = mask_of(V, I);
    if (!is_ideal_mask(V, in) || !is_normal_mask(V, in))
        throw Error("quotient requires a normal ideal of " + M->describe());

    std::size_t n = V.n();
    auto related = [&](std::size_t x, std::size_t y) {
        return in[V.odot(x, V.minus(y))] && in[V.odot(y, V.minus(x))];
    };
    std::vector<std::size_t> cls(n, SIZE_MAX);
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < n; x++) {
        if (cls[x] != SIZE_MAX) continue;
        std::size_t c = reps.size();
        reps.push_back(x); // minimal in enumeration order: the canonical representative
        cls[x] = c;
        for (std::size_t y = x + 1; y < n; y++)
            if (cls[y] == SIZE_MAX && related(x, y)) cls[y] = c;
    }
    FiniteTableData t;
    t.n = reps.size();
    t.oplus.resize(t.n * t.n);
    t.minus.resize(t.n);
    t.sim.resize(t.n);
    for (std::size_t a = 0; a < t.n; a++) {
        t.minus[a] = cls[V.minus(reps[a])];
        t.sim[a] = cls[V.sim(reps[a])];
        for (std::size_t b = 0; b < t.n; b++) t.oplus[a * t.n + b] = cls[V.oplus(reps[a], reps[b])];
        t.labels.push_back("[" + M->print(V.elems[reps[a]]) + "]");
    }
    t.zero = cls[V.zero()];
    t.one = cls[V.of(M->one())];
    // the projection must be a homomorphism, and class sizes must tile |M|
    for (std::size_t x = 0; x < n; x++) {
        if (cls[V.minus(x)] != t.minus[cls[x]] || cls[V.sim(x)] != t.sim[cls[x]])
            throw Error("quotient projection failed to respect negations");
        for (std::size_t y = 0; y < n; y++)
            if (cls[V.oplus(x, y)] != t.oplus[cls[x] * t.n + cls[y]])
                throw Error("quotient projection failed to respect oplus");
    }
    std::size_t zero_class_size = 0;
    for (std::size_t x = 0; x < n; x++)
        if (cls[x] == t.zero) zero_class_size++;
    if (t.n * zero_class_size != n)
        throw Error("quotient class-size consistency failed: " + std::to_string(t.n) +
                    " classes, |0/I| = " + std::to_string(zero_class_size) +
                    ", |M| = " + std::to_string(n));
    return Algebra::table(std::move(t));
}

bool is_representable(const AlgebraPtr& M) {
    FiniteView V(M);
    for (std::size_t a = 0; a < V.n(); a++) {
        IdealSet S;
        S.base = M;
        for (std::size_t x = 0; x < V.n(); x++)
            if (V.meet(x, a) == V.zero()) S.members.push_back(x);
        std::vector<bool> in = mask_of(V, S);
        if (!is_ideal_mask(V, in) || !is_normal_mask(V, in)) return false;
    }
    return true;
}

} // namespace pmv
