#include "gmol/triple.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmol/oracle.hpp"
#include "gmol/pair.hpp"

namespace gmol {

const char* to_string(TripleVerdict::Reason r) {
    switch (r) {
        case TripleVerdict::Reason::none: return "none";
        case TripleVerdict::Reason::cond1: return "cond1";
        case TripleVerdict::Reason::projection: return "projection";
        case TripleVerdict::Reason::sign: return "sign";
        case TripleVerdict::Reason::middle_gap: return "middle-gap";
        case TripleVerdict::Reason::triple_sign: return "triple-sign";
    }
    return "?";
}

namespace {

void require_triple(const Subcomplex& x) {
    if (x.sig.arity != 3) throw std::invalid_argument("triple operation: arity must be 3");
    if (x.empty()) throw std::invalid_argument("triple operation: empty subcomplex");
    for (const Atom& a : x.ms)
        for (int f = 0; f < 3; ++f)
            if (a[f].sign == top) throw std::invalid_argument("triple operation: Top cell not allowed");
}

int min_dim(const Atom& a, const Atom& b, int f) { return std::min(a[f].dim, b[f].dim); }

TripleVerdict violate(TripleVerdict::Reason r, std::vector<Atom> ws, int axis = -1, int level = -1) {
    TripleVerdict v;
    v.ok = false;
    v.reason = r;
    v.axis = axis;
    v.level = level;
    v.witnesses = std::move(ws);
    return v;
}

}  // namespace

Subcomplex project(const Subcomplex& x, int axis, int I) {
    if (axis < 0 || axis >= x.sig.arity)
        throw std::invalid_argument("project: bad axis");
    Signature sig;
    sig.arity = x.sig.arity - 1;
    int out = 0;
    for (int f = 0; f < x.sig.arity; ++f) {
        if (f == axis) continue;
        int8_t t = x.sig.twists[static_cast<size_t>(f)];
        if (f > axis) t = static_cast<int8_t>((t + I) & 1);
        sig.twists[static_cast<size_t>(out)] = t;
        if (x.sig.caps) {
            if (!sig.caps) sig.caps.emplace();
            (*sig.caps)[static_cast<size_t>(out)] = (*x.sig.caps)[static_cast<size_t>(f)];
        }
        ++out;
    }
    std::vector<Atom> ms;
    for (const Atom& a : x.ms) {
        if (a[axis].dim < I) continue;
        Atom b;
        b.arity = static_cast<int8_t>(sig.arity);
        int o = 0;
        for (int f = 0; f < x.sig.arity; ++f)
            if (f != axis) b[o++] = a[f];
        ms.push_back(b);
    }
    return normalize(sig, std::move(ms));
}

TripleVerdict triple_is_pairwise_def(const Subcomplex& x) {
    require_triple(x);
    if (auto bad = condition1_violation(x))
        return violate(TripleVerdict::Reason::cond1, {bad->first, bad->second});
    for (int axis = 0; axis < 3; ++axis) {
        int hi = 0;
        for (const Atom& a : x.ms) hi = std::max<int>(hi, a[axis].dim);
        for (int I = 0; I <= hi; ++I) {
            Subcomplex pr = project(x, axis, I);
            if (pr.empty()) continue;
            PairVerdict pv = pair_is_molecule(pr);
            if (!pv.ok)
                return violate(TripleVerdict::Reason::projection, {pv.w1, pv.w2}, axis, I);
        }
    }
    return TripleVerdict::pass();
}

bool adjacent3(const Atom& a, const Atom& b, const Subcomplex& x) {
    if (!is_condition1(x)) throw std::invalid_argument("adjacent3: condition 1 required");
    if (a == b) throw std::invalid_argument("adjacent3: atoms must be distinct");
    int base = min_sum(a, b);
    for (const Atom& n : x.ms) {
        bool dominates = true;
        for (int f = 0; f < 3 && dominates; ++f)
            dominates = n[f].dim >= min_dim(a, b, f);
        if (!dominates) continue;
        if (min_sum(a, n) > base && min_sum(b, n) > base) return false;
    }
    return true;
}

bool st_adjacent3(const Atom& a, const Atom& b, const Subcomplex& x, int s, int t) {
    if (!is_condition1(x)) throw std::invalid_argument("st_adjacent3: condition 1 required");
    if (s < 0 || t <= s || t >= 3) throw std::invalid_argument("st_adjacent3: bad factor pair");
    for (const Atom& n : x.ms) {
        if (n == a || n == b) continue;
        bool blocks = n[s].dim > min_dim(a, b, s) && n[t].dim > min_dim(a, b, t);
        for (int f = 0; f < 3 && blocks; ++f)
            if (f != s && f != t) blocks = n[f].dim >= min_dim(a, b, f);
        if (blocks) return false;
    }
    return true;
}

bool projection_maximal3(const Atom& a, const Subcomplex& x, int axis, int J) {
    if (!is_condition1(x)) throw std::invalid_argument("projection_maximal3: condition 1 required");
    if (a[axis].dim < J) return false;
    for (const Atom& n : x.ms) {
        if (n[axis].dim < J || n[axis].dim >= a[axis].dim) continue;
        bool dominates = true;
        for (int f = 0; f < x.sig.arity && dominates; ++f)
            if (f != axis) dominates = n[f].dim >= a[f].dim;
        if (dominates) return false;
    }
    return true;
}

TripleVerdict triple_is_pairwise_explicit(const Subcomplex& x) {
    require_triple(x);
    // Condition 1.
    if (auto bad = condition1_violation(x))
        return violate(TripleVerdict::Reason::cond1, {bad->first, bad->second});
    const std::vector<Atom>& ms = x.ms;
    size_t n = ms.size();

    // Condition 3 (any pair): equal dimension with opposite signs in one
    // factor requires a maximal atom strictly above in that factor and
    // weakly above the minima elsewhere.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (int f = 0; f < 3; ++f) {
                if (ms[i][f].dim != ms[j][f].dim || ms[i][f].sign == ms[j][f].sign) continue;
                bool found = false;
                for (size_t w = 0; w < n && !found; ++w) {
                    bool ok = ms[w][f].dim > ms[i][f].dim;
                    for (int g = 0; g < 3 && ok; ++g)
                        if (g != f) ok = ms[w][g].dim >= min_dim(ms[i], ms[j], g);
                    found = ok;
                }
                if (!found) return violate(TripleVerdict::Reason::sign, {ms[i], ms[j]});
            }

    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            adj[i][j] = adj[j][i] = adjacent3(ms[i], ms[j], x);

    // Condition 2 (sign conditions) and condition 4 (middle gap) over
    // adjacent pairs.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (!adj[i][j]) continue;
            for (int s = 0; s < 3; ++s)
                for (int t = s + 1; t < 3; ++t) {
                    // Which atom is strictly smaller in s, strictly larger in t?
                    const Atom *lo = nullptr, *hi = nullptr;
                    if (ms[i][s].dim < ms[j][s].dim && ms[i][t].dim > ms[j][t].dim) {
                        lo = &ms[i];
                        hi = &ms[j];
                    } else if (ms[j][s].dim < ms[i][s].dim && ms[j][t].dim > ms[i][t].dim) {
                        lo = &ms[j];
                        hi = &ms[i];
                    } else {
                        continue;
                    }
                    // lo has the minimal s-dimension, hi the minimal t-dimension.
                    int exp = x.sig.twists[static_cast<size_t>(s)] +
                              x.sig.twists[static_cast<size_t>(t)];
                    for (int h = s; h < t; ++h) exp += min_dim(ms[i], ms[j], h);
                    if ((*hi)[t].sign != sign_pow(exp + 1, (*lo)[s].sign))
                        return violate(TripleVerdict::Reason::sign, {ms[i], ms[j]});
                    // Condition 4: outer factors cross and the middle
                    // minimum is positive.
                    if (s == 0 && t == 2 && min_dim(ms[i], ms[j], 1) > 0) {
                        int jm = min_dim(ms[i], ms[j], 1);
                        bool found = false;
                        for (size_t w = 0; w < n && !found; ++w)
                            found = ms[w][0].dim > min_dim(ms[i], ms[j], 0) &&
                                    ms[w][1].dim == jm - 1 &&
                                    ms[w][2].dim > min_dim(ms[i], ms[j], 2);
                        if (!found)
                            return violate(TripleVerdict::Reason::middle_gap, {ms[i], ms[j]});
                    }
                }
        }

    // Condition 5: three pairwise adjacent atoms, each strictly above the
    // common minima in its own factor, must share a sign somewhere.
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c) {
                if (a == b || a == c || b == c) continue;
                if (!adj[a][b] || !adj[a][c] || !adj[b][c]) continue;
                const Atom &l1 = ms[a], &l2 = ms[b], &l3 = ms[c];
                // l1 = (i1, j, k), l2 = (i, j2, k), l3 = (i, j, k3).
                if (l2[0].dim != l3[0].dim || l1[1].dim != l3[1].dim || l1[2].dim != l2[2].dim)
                    continue;
                if (l1[0].dim <= l2[0].dim || l2[1].dim <= l1[1].dim || l3[2].dim <= l1[2].dim)
                    continue;
                if (l2[0].sign != l3[0].sign && l1[1].sign != l3[1].sign &&
                    l1[2].sign != l2[2].sign)
                    return violate(TripleVerdict::Reason::triple_sign, {l1, l2, l3});
            }
    return TripleVerdict::pass();
}

Subcomplex triple_d(const Subcomplex& x, int p, Sign g) {
    if (!triple_is_pairwise_def(x).ok) throw std::invalid_argument("triple_d: not pairwise molecular");
    return sub_d(x, p, g);
}

Subcomplex triple_compose(const Subcomplex& x, int p, const Subcomplex& y) {
    if (!triple_is_pairwise_def(x).ok || !triple_is_pairwise_def(y).ok)
        throw std::invalid_argument("triple_compose: not pairwise molecular");
    return sub_compose(x, p, y);
}

ExprPtr decompose3(const Subcomplex& x) {
    bool capped = false;
    for (const Atom& a : x.ms)
        for (int f = 0; f < 3; ++f) capped |= a[f].sign == top;
    if (capped) {
        if (!x.sig.caps) throw std::invalid_argument("decompose3: Top cell without caps");
        // Decompose a signed lift and push the leaves back through the cap
        // quotient, which commutes with boundaries and compositions.
        for (const Subcomplex& lift : signed_lifts(x))
            if (triple_is_pairwise_def(lift).ok)
                return expr_cap_leaves(decompose_subcomplex(lift), *x.sig.caps);
        throw std::invalid_argument("decompose3: not pairwise molecular");
    }
    if (!triple_is_pairwise_def(x).ok) throw std::invalid_argument("decompose3: not pairwise molecular");
    return decompose_subcomplex(x);
}

}  // namespace gmol
