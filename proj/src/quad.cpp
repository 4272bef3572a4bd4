#include "gmol/quad.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmol/oracle.hpp"
#include "gmol/triple.hpp"

namespace gmol {

const char* to_string(QuadVerdict::Reason r) {
    switch (r) {
        case QuadVerdict::Reason::none: return "none";
        case QuadVerdict::Reason::cond1: return "cond1";
        case QuadVerdict::Reason::projection: return "projection";
        case QuadVerdict::Reason::sign: return "sign";
        case QuadVerdict::Reason::flip_cover: return "flip-cover";
        case QuadVerdict::Reason::middle_gap: return "middle-gap";
    }
    return "?";
}

namespace {

void require_quad(const Subcomplex& x) {
    if (x.sig.arity != 4) throw std::invalid_argument("quad operation: arity must be 4");
    if (x.empty()) throw std::invalid_argument("quad operation: empty subcomplex");
    for (const Atom& a : x.ms)
        for (int f = 0; f < 4; ++f)
            if (a[f].sign == top) throw std::invalid_argument("quad operation: Top cell not allowed");
}

int min_dim(const Atom& a, const Atom& b, int f) { return std::min(a[f].dim, b[f].dim); }

// Does the globe atom u[f] contain the intersection of globe atoms x, y?
// The intersection is the smaller atom when comparable, and the full
// sphere one dimension below when the dimensions tie with opposite signs.
bool factor_contains_intersection(Factor f, Factor x, Factor y) {
    if (factor_contains(x, y)) return factor_contains(f, y);
    if (factor_contains(y, x)) return factor_contains(f, x);
    return f.dim >= x.dim;  // both hemispheres below the tied dimension
}

QuadVerdict violate(QuadVerdict::Reason r, std::vector<Atom> ws, int axis = -1, int level = -1,
                    int s = -1, int rr = -1, int t = -1) {
    QuadVerdict v;
    v.ok = false;
    v.reason = r;
    v.axis = axis;
    v.level = level;
    v.s = s;
    v.r = rr;
    v.t = t;
    v.witnesses = std::move(ws);
    return v;
}

}  // namespace

Subcomplex project4(const Subcomplex& x, int axis, int I) {
    if (x.sig.arity != 4) throw std::invalid_argument("project4: arity must be 4");
    return project(x, axis, I);
}

QuadVerdict quad_is_pairwise_def(const Subcomplex& x) {
    require_quad(x);
    if (auto bad = condition1_violation(x))
        return violate(QuadVerdict::Reason::cond1, {bad->first, bad->second});
    for (int axis = 0; axis < 4; ++axis) {
        int hi = 0;
        for (const Atom& a : x.ms) hi = std::max<int>(hi, a[axis].dim);
        for (int I = 0; I <= hi; ++I) {
            Subcomplex pr = project4(x, axis, I);
            if (pr.empty()) continue;
            TripleVerdict tv = triple_is_pairwise_def(pr);
            if (!tv.ok) return violate(QuadVerdict::Reason::projection, tv.witnesses, axis, I);
        }
    }
    return QuadVerdict::pass();
}

bool st_adjacent4(const Atom& a, const Atom& b, const Subcomplex& x, int s, int t) {
    if (!is_condition1(x)) throw std::invalid_argument("st_adjacent4: condition 1 required");
    if (s < 0 || t <= s || t >= 4) throw std::invalid_argument("st_adjacent4: bad factor pair");
    // Crossing profile: max_s + max_t exceeds both same-atom sums.
    int crossing = std::max<int>(a[s].dim, b[s].dim) + std::max<int>(a[t].dim, b[t].dim);
    if (crossing <= std::max(a[s].dim + a[t].dim, b[s].dim + b[t].dim)) return false;
    int base = min_dim(a, b, s) + min_dim(a, b, t);
    for (const Atom& w : x.ms) {
        bool dominates = true;
        for (int f = 0; f < 4 && dominates; ++f)
            dominates = w[f].dim >= min_dim(a, b, f);
        if (!dominates) continue;
        int va = std::min<int>(a[s].dim, w[s].dim) + std::min<int>(a[t].dim, w[t].dim);
        int vb = std::min<int>(b[s].dim, w[s].dim) + std::min<int>(b[t].dim, w[t].dim);
        if (va > base && vb > base) return false;
    }
    return true;
}

bool adjacent4(const Atom& a, const Atom& b, const Subcomplex& x) {
    if (!is_condition1(x)) throw std::invalid_argument("adjacent4: condition 1 required");
    if (a == b) throw std::invalid_argument("adjacent4: atoms must be distinct");
    int base = min_sum(a, b);
    for (const Atom& w : x.ms) {
        bool dominates = true;
        for (int f = 0; f < 4 && dominates; ++f)
            dominates = w[f].dim >= min_dim(a, b, f);
        if (!dominates) continue;
        if (min_sum(a, w) > base && min_sum(b, w) > base) return false;
    }
    return true;
}

QuadVerdict quad_is_pairwise_explicit(const Subcomplex& x) {
    require_quad(x);
    if (auto bad = condition1_violation(x))
        return violate(QuadVerdict::Reason::cond1, {bad->first, bad->second});
    const std::vector<Atom>& ms = x.ms;
    size_t n = ms.size();

    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const Atom &a = ms[i], &b = ms[j];

            // Condition 2: coordinate-pair sign conditions.
            for (int s = 0; s < 4; ++s)
                for (int t = s + 1; t < 4; ++t) {
                    const Atom *lo = nullptr, *hi = nullptr;
                    if (a[s].dim < b[s].dim && a[t].dim > b[t].dim) {
                        lo = &a;
                        hi = &b;
                    } else if (b[s].dim < a[s].dim && b[t].dim > a[t].dim) {
                        lo = &b;
                        hi = &a;
                    } else {
                        continue;
                    }
                    if (!st_adjacent4(a, b, x, s, t)) continue;
                    int exp = 0;
                    for (int h = s; h < t; ++h) exp += min_dim(a, b, h);
                    if ((*hi)[t].sign != sign_pow(exp + 1, (*lo)[s].sign))
                        return violate(QuadVerdict::Reason::sign, {a, b}, -1, -1, s, -1, t);

                    // Condition 4: for every factor strictly between a
                    // crossing pair with positive minimum, a bridging atom
                    // one level below that minimum must exist.
                    for (int r = s + 1; r < t; ++r) {
                        int mr = min_dim(a, b, r);
                        if (mr == 0) continue;
                        bool found = false;
                        for (size_t w = 0; w < n && !found; ++w) {
                            bool ok = ms[w][s].dim > (*lo)[s].dim &&
                                      ms[w][r].dim == mr - 1 && ms[w][t].dim > (*hi)[t].dim;
                            for (int f = 0; f < 4 && ok; ++f)
                                if (f != s && f != r && f != t)
                                    ok = ms[w][f].dim >= min_dim(a, b, f);
                            found = ok;
                        }
                        if (!found)
                            return violate(QuadVerdict::Reason::middle_gap, {a, b}, -1, -1, s, r, t);
                    }
                }

            // Condition 3: equal dimension, opposite sign in factor s.
            for (int s = 0; s < 4; ++s) {
                if (a[s].dim != b[s].dim || a[s].sign == b[s].sign) continue;
                for (int t = 0; t < 4; ++t) {
                    if (t == s) continue;
                    bool found = false;
                    for (size_t w = 0; w < n && !found; ++w) {
                        bool ok = ms[w][s].dim > a[s].dim &&
                                  ms[w][t].dim >= min_dim(a, b, t);
                        for (int r = 0; r < 4 && ok; ++r)
                            if (r != s && r != t)
                                ok = factor_contains_intersection(ms[w][r], a[r], b[r]);
                        found = ok;
                    }
                    if (!found)
                        return violate(QuadVerdict::Reason::flip_cover, {a, b}, -1, -1, s, -1, t);
                }
            }
        }
    return QuadVerdict::pass();
}

Subcomplex quad_d(const Subcomplex& x, int p, Sign g) {
    if (!quad_is_pairwise_def(x).ok) throw std::invalid_argument("quad_d: not pairwise molecular");
    return sub_d(x, p, g);
}

Subcomplex quad_compose(const Subcomplex& x, int p, const Subcomplex& y) {
    if (!quad_is_pairwise_def(x).ok || !quad_is_pairwise_def(y).ok)
        throw std::invalid_argument("quad_compose: not pairwise molecular");
    return sub_compose(x, p, y);
}

ExprPtr decompose4(const Subcomplex& x) {
    bool capped = false;
    for (const Atom& a : x.ms)
        for (int f = 0; f < 4; ++f) capped |= a[f].sign == top;
    if (capped) {
        if (!x.sig.caps) throw std::invalid_argument("decompose4: Top cell without caps");
        // Decompose a signed lift and push the leaves back through the cap
        // quotient, which commutes with boundaries and compositions.
        for (const Subcomplex& lift : signed_lifts(x))
            if (quad_is_pairwise_def(lift).ok)
                return expr_cap_leaves(decompose_subcomplex(lift), *x.sig.caps);
        throw std::invalid_argument("decompose4: not pairwise molecular");
    }
    if (!quad_is_pairwise_def(x).ok) throw std::invalid_argument("decompose4: not pairwise molecular");
    return decompose_subcomplex(x);
}

}  // namespace gmol
