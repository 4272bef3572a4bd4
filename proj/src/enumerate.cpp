#include "gmol/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

#include "gmol/oracle.hpp"

namespace gmol {

namespace {

constexpr int unbounded = std::numeric_limits<int>::max();

void require_untwisted_triple(const Signature& sig) {
    if (sig.arity != 3) throw std::invalid_argument("enumeration: arity must be 3");
    for (int f = 0; f < 3; ++f)
        if (sig.twists[static_cast<size_t>(f)] != 0)
            throw std::invalid_argument("enumeration: twists must be zero");
}

// Third-factor sign opposite to the induced one: eps == -(-1)^{i+J} alpha.
bool flipped(const Atom& lam, int J) {
    return lam[2].sign == sign_pow(lam[0].dim + J + 1, lam[0].sign);
}

bool staircase(const std::vector<Atom>& xs, int lo, int hi) {
    for (size_t t = 1; t < xs.size(); ++t)
        if (xs[t][lo].dim >= xs[t - 1][lo].dim || xs[t][hi].dim <= xs[t - 1][hi].dim)
            return false;
    return true;
}

}  // namespace

std::vector<Atom> lowest_above_level(const std::vector<Atom>& atoms, int J) {
    std::vector<Atom> above;
    for (const Atom& a : atoms)
        if (a[1].dim > J) above.push_back(a);
    std::vector<Atom> low;
    for (const Atom& a : above) {
        bool dominated = false;
        for (const Atom& b : above) {
            if (a == b) continue;
            bool ab = factor_contains(b[0], a[0]) && factor_contains(b[2], a[2]);
            bool ba = factor_contains(a[0], b[0]) && factor_contains(a[2], b[2]);
            if (ab && (!ba || b[1].dim > a[1].dim)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) low.push_back(a);
    }
    std::sort(low.begin(), low.end(), [](const Atom& a, const Atom& b) {
        if (a[0].dim != b[0].dim) return a[0].dim > b[0].dim;
        return a[2].dim < b[2].dim;
    });
    return low;
}

ValidateResult validate_maximal_atom_set(const std::vector<Atom>& atoms, const Signature& sig) {
    require_untwisted_triple(sig);
    if (atoms.empty()) throw std::invalid_argument("validate_maximal_atom_set: empty set");
    for (const Atom& a : atoms) {
        if (a.arity != 3) throw std::invalid_argument("validate_maximal_atom_set: arity must be 3");
        for (int f = 0; f < 3; ++f)
            if (a[f].sign == top)
                throw std::invalid_argument("validate_maximal_atom_set: Top cell not allowed");
    }

    auto fail = [](const char* clause, int J) {
        ValidateResult r;
        r.ok = false;
        r.clause = clause;
        r.level = J;
        return r;
    };

    int Jmax = 0;
    for (const Atom& a : atoms) Jmax = std::max<int>(Jmax, a[1].dim);

    for (int J = Jmax; J >= 0; --J) {
        std::vector<Atom> mu;
        for (const Atom& a : atoms)
            if (a[1].dim == J) mu.push_back(a);
        std::sort(mu.begin(), mu.end(), [](const Atom& a, const Atom& b) {
            if (a[0].dim != b[0].dim) return a[0].dim > b[0].dim;
            return a[2].dim < b[2].dim;
        });
        if (!staircase(mu, 0, 2)) return fail("staircase", J);

        std::vector<Atom> lam = lowest_above_level(atoms, J);
        if (!staircase(lam, 0, 2)) return fail("staircase", J);

        int S = static_cast<int>(lam.size());
        int T = static_cast<int>(mu.size());
        auto I = [&](int s) { return static_cast<int>(lam[static_cast<size_t>(s)][0].dim); };
        auto K = [&](int s) { return static_cast<int>(lam[static_cast<size_t>(s)][2].dim); };
        auto Al = [&](int s) { return lam[static_cast<size_t>(s)][0].sign; };
        auto Ep = [&](int s) { return lam[static_cast<size_t>(s)][2].sign; };
        auto L = [&](int t) { return static_cast<int>(mu[static_cast<size_t>(t)][0].dim); };
        auto N = [&](int t) { return static_cast<int>(mu[static_cast<size_t>(t)][2].dim); };
        auto Si = [&](int t) { return mu[static_cast<size_t>(t)][0].sign; };
        auto Ta = [&](int t) { return mu[static_cast<size_t>(t)][1].sign; };
        auto Om = [&](int t) { return mu[static_cast<size_t>(t)][2].sign; };

        // A level-J atom below-or-at a lowest atom in the first factor
        // must pass it in the third.
        for (int s = 0; s < S; ++s)
            for (int t = 0; t < T; ++t)
                if (L(t) <= I(s) && N(t) <= K(s)) return fail("overhang", J);

        // Bridging atom between consecutive lowest atoms.
        for (int s = 1; s < S; ++s) {
            bool found = false;
            for (int t = 0; t < T && !found; ++t)
                found = L(t) > I(s) && N(t) > K(s - 1);
            if (!found) return fail("bridge", J);
        }

        // Middle signs of bridging atoms.
        for (int t = 0; t < T; ++t) {
            for (int s = 1; s < S; ++s)
                if (L(t) > I(s) && N(t) > K(s - 1)) {
                    if (Ta(t) != sign_pow(I(s) + 1, Al(s))) return fail("middle-sign", J);
                    if (Ta(t) != sign_pow(J + 1, Ep(s - 1))) return fail("middle-sign", J);
                }
            if (S > 0 && L(t) > I(0) && Ta(t) != sign_pow(I(0) + 1, Al(0)))
                return fail("middle-sign", J);
            if (S > 0 && N(t) > K(S - 1) && Ta(t) != sign_pow(J + 1, Ep(S - 1)))
                return fail("middle-sign", J);
        }
        if (J == Jmax)
            for (int t = 1; t < T; ++t)
                if (Ta(t) != Ta(0)) return fail("middle-sign", J);

        // Linking sign between consecutive level-J atoms with no lowest
        // atom in between.
        for (int t = 1; t < T; ++t) {
            bool blocked = false;
            for (int s = 0; s < S && !blocked; ++s)
                blocked = I(s) > L(t) && K(s) > N(t - 1);
            if (!blocked && Om(t - 1) != sign_pow(L(t) + J + 1, Si(t))) return fail("below-sign", J);
        }

        for (int s = 0; s < S; ++s)
            for (int t = 0; t < T; ++t) {
                if (N(t) < K(s) && ((t + 1 < T && L(t + 1) <= I(s)) || (s == S - 1 && t == T - 1)))
                    if (Om(t) != sign_pow(I(s) + J + 1, Al(s))) return fail("cross-sign-upper", J);
                if (L(t) < I(s) && ((t > 0 && N(t - 1) <= K(s)) || (s == 0 && t == 0)))
                    if (Si(t) != sign_pow(L(t) + J + 1, Ep(s))) return fail("cross-sign-lower", J);
                if (I(s) == L(t) && ((t > 0 && K(s) > N(t - 1)) || (s == 0 && t == 0)))
                    if (Al(s) != Si(t)) return fail("equal-sign-upper", J);
                if (K(s) == N(t) && ((t + 1 < T && I(s) > L(t + 1)) || (s == S - 1 && t == T - 1)))
                    if (Ep(s) != Om(t)) return fail("equal-sign-lower", J);
                if (t + 1 < T && I(s) == L(t + 1) && K(s) == N(t))
                    if (Al(s) != Si(t + 1) && Ep(s) != Om(t)) return fail("split-sign", J);
            }
    }
    return ValidateResult::pass();
}

namespace {

// Shared context of one next_level_choices run.
struct LevelGen {
    int J;
    int cap_u, cap_w;
    const std::vector<Atom>& lam;  // lowest atoms above level J
    std::vector<LevelChoice>& out;
    std::vector<Atom> row;

    int S() const { return static_cast<int>(lam.size()); }
    int I(int s) const { return lam[static_cast<size_t>(s)][0].dim; }
    int K(int s) const { return lam[static_cast<size_t>(s)][2].dim; }
    Sign Al(int s) const { return lam[static_cast<size_t>(s)][0].sign; }
    Sign Ep(int s) const { return lam[static_cast<size_t>(s)][2].sign; }
    bool flip(int s) const { return flipped(lam[static_cast<size_t>(s)], J); }

    Sign tau_of(int l) const {
        if (l > I(0)) return sign_pow(I(0) + 1, Al(0));
        for (int s = 1; s < S(); ++s)
            if (I(s) < l && l <= I(s - 1)) return sign_pow(I(s) + 1, Al(s));
        return sign_pow(J + 1, Ep(S() - 1));
    }

    // Interval of legal third dimensions for a new atom with first
    // dimension l, after a previous third dimension n_prev (-1 if this is
    // the first atom of the row).  Upper bound `unbounded` means the cap
    // is the only limit.
    std::pair<int, int> n_interval(int l, int n_prev) const {
        int lo, hi = unbounded;
        if (l > I(0)) {
            lo = n_prev + 1;
            for (int s = 0; s < S(); ++s)
                if (flip(s)) {
                    hi = K(s);
                    break;
                }
        } else if (l <= I(S() - 1)) {
            lo = std::max(n_prev, K(S() - 1)) + 1;
        } else {
            int s4 = -1;
            for (int s = 1; s < S(); ++s)
                if (I(s) < l && l <= I(s - 1)) {
                    s4 = s;
                    break;
                }
            assert(s4 > 0);
            lo = std::max(K(s4 - 1), n_prev) + 1;
            for (int s = s4; s < S(); ++s)
                if (flip(s)) {
                    hi = K(s);
                    break;
                }
        }
        // The permitted values always form a nonempty interval before the
        // cap is applied.
        assert(hi == unbounded || lo <= hi);
        return {lo, hi};
    }

    void emit_row() { out.push_back(LevelChoice{row}); }

    // Finish the row: fix the pending third sign of the last atom.
    void stop() {
        if (row.empty()) {
            emit_row();
            return;
        }
        Atom& last = row.back();
        int nT = last[2].dim;
        if (nT > K(S() - 1)) {
            for (Sign w : {minus, plus}) {
                last[2].sign = w;
                emit_row();
            }
        } else if (nT == K(S() - 1)) {
            last[2].sign = Ep(S() - 1);
            emit_row();
        } else {
            last[2].sign = sign_pow(I(S() - 1) + J + 1, Al(S() - 1));
            emit_row();
        }
    }

    // Append an atom (l, sigma; J, tau; n, pending) and continue; the
    // previous atom's third sign becomes omega_prev.
    void push_and_extend(int l, int n, Sign sigma, Sign omega_prev) {
        if (!row.empty()) row.back()[2].sign = omega_prev;
        row.push_back(make_atom({{static_cast<int8_t>(l), sigma},
                                 {static_cast<int8_t>(J), tau_of(l)},
                                 {static_cast<int8_t>(n), minus}}));
        extend();
        row.pop_back();
    }

    // Enumerate sign cases for a new atom after the first.
    void add_next(int l, int n) {
        int n_prev = row.back()[2].dim;
        int hit = -1;
        for (int s = 0; s < S(); ++s)
            if (I(s) >= l && K(s) >= n_prev) {
                assert(hit < 0);
                hit = s;
            }
        if (hit < 0) {
            for (Sign w : {minus, plus})
                push_and_extend(l, n, sign_pow(l + J + 1, w), w);
        } else if (I(hit) > l && K(hit) > n_prev) {
            push_and_extend(l, n, sign_pow(l + J + 1, Ep(hit)), sign_pow(I(hit) + J + 1, Al(hit)));
        } else if (I(hit) == l && K(hit) > n_prev) {
            push_and_extend(l, n, Al(hit), sign_pow(I(hit) + J + 1, Al(hit)));
        } else if (I(hit) > l && K(hit) == n_prev) {
            push_and_extend(l, n, sign_pow(l + J + 1, Ep(hit)), Ep(hit));
        } else if (!flip(hit)) {
            for (Sign w : {minus, plus})
                push_and_extend(l, n, sign_pow(l + J + 1, w), w);
        } else {
            push_and_extend(l, n, Al(hit), Ep(hit));
        }
    }

    void add_first(int l, int n) {
        if (l > I(0)) {
            for (Sign sg : {minus, plus}) push_and_extend(l, n, sg, minus);
        } else if (l == I(0)) {
            push_and_extend(l, n, Al(0), minus);
        } else {
            push_and_extend(l, n, sign_pow(l + J + 1, Ep(0)), minus);
        }
    }

    void for_each_n(int l, bool first) {
        int n_prev = first ? -1 : row.back()[2].dim;
        auto [lo, hi] = n_interval(l, n_prev);
        hi = std::min(hi, cap_w);
        for (int n = lo; n <= hi; ++n)
            first ? add_first(l, n) : add_next(l, n);
    }

    // Extend the row by one more atom, or finish it when permitted.
    void extend() {
        if (row.empty()) {
            if (S() == 1) {
                stop();
                for (int l = 0; l <= cap_u; ++l) for_each_n(l, true);
            } else {
                for (int l = I(1) + 1; l <= cap_u; ++l) for_each_n(l, true);
            }
            return;
        }
        int l_prev = row.back()[0].dim;
        int n_prev = row.back()[2].dim;
        bool optional;
        int lo, hi;
        if (n_prev > K(S() - 1)) {
            optional = true;
            lo = 0;
            hi = l_prev - 1;  // empty when l_prev == 0: no further atoms
        } else if (n_prev == K(S() - 1)) {
            optional = true;
            lo = 0;
            hi = flip(S() - 1) ? I(S() - 1) : l_prev - 1;
        } else if (S() == 1) {
            optional = true;  // n_prev < K(0) with a single lowest atom
            lo = 0;
            hi = l_prev - 1;
        } else if (n_prev < K(0)) {
            optional = false;
            lo = I(1) + 1;
            hi = l_prev - 1;
        } else {
            int s = -1;  // n_prev sits at or between K(s-1) and K(s)
            for (int q = 0; q + 1 < S(); ++q)
                if (n_prev == K(q)) {
                    s = q;
                    break;
                }
            if (s >= 0) {
                optional = false;
                lo = I(s + 1) + 1;
                hi = flip(s) ? I(s) : l_prev - 1;
            } else {
                for (int q = 1; q < S(); ++q)
                    if (K(q - 1) < n_prev && n_prev < K(q)) {
                        s = q;
                        break;
                    }
                assert(s > 0);
                if (s == S() - 1) {
                    optional = true;  // between the last two lowest atoms
                    lo = 0;
                    hi = l_prev - 1;
                } else {
                    optional = false;
                    lo = I(s + 1) + 1;
                    hi = l_prev - 1;
                }
            }
        }
        assert(optional || lo <= hi);
        if (optional) stop();
        hi = std::min(hi, cap_u);
        for (int l = lo; l <= hi; ++l) for_each_n(l, false);
    }
};

}  // namespace

std::vector<LevelChoice> next_level_choices(const LevelState& state) {
    require_untwisted_triple(state.sig);
    if (!state.sig.caps) throw std::invalid_argument("next_level_choices: caps required");
    if (state.lowest_above.empty())
        throw std::invalid_argument("next_level_choices: no atoms above the level");
    std::vector<Atom> lam = state.lowest_above;
    std::sort(lam.begin(), lam.end(), [](const Atom& a, const Atom& b) {
        return a[0].dim > b[0].dim;
    });
    if (!staircase(lam, 0, 2))
        throw std::invalid_argument("next_level_choices: lowest atoms must alternate");
    for (const Atom& a : lam)
        if (a[1].dim <= state.J)
            throw std::invalid_argument("next_level_choices: atom not above the level");
    std::vector<LevelChoice> out;
    LevelGen gen{state.J, (*state.sig.caps)[0], (*state.sig.caps)[2], lam, out, {}};
    gen.extend();
    return out;
}

namespace {

void descend_levels(std::vector<Atom>& acc, int J, const Signature& capped_sig,
                    const std::function<void(const std::vector<Atom>&)>& sink) {
    if (J < 0) {
        sink(acc);
        return;
    }
    LevelState st{J, lowest_above_level(acc, J), capped_sig};
    for (const LevelChoice& ch : next_level_choices(st)) {
        size_t mark = acc.size();
        acc.insert(acc.end(), ch.atoms.begin(), ch.atoms.end());
        descend_levels(acc, J - 1, capped_sig, sink);
        acc.resize(mark);
    }
}

}  // namespace

std::vector<Subcomplex> enumerate3(int cap_u, int cap_v, int cap_w, EnumMode mode) {
    if (cap_u < 0 || cap_v < 0 || cap_w < 0)
        throw std::invalid_argument("enumerate3: caps must be nonnegative");
    Signature capped;
    capped.arity = 3;
    capped.caps = std::array<int8_t, max_arity>{
        static_cast<int8_t>(cap_u), static_cast<int8_t>(cap_v), static_cast<int8_t>(cap_w), 0};
    Signature signed_sig;
    signed_sig.arity = 3;

    std::vector<Subcomplex> result;
    auto sink = [&](const std::vector<Atom>& atoms) {
        Subcomplex x;
        x.sig = signed_sig;
        x.ms = atoms;
        x = normalize(x);
        if (mode == EnumMode::capped) x = cap_quotient(x, *capped.caps);
        result.push_back(std::move(x));
    };

    // Top level: a strictly alternating row of atoms sharing the middle
    // factor, with linked third signs.
    std::vector<int> idims, kdims;
    std::function<void(int, std::vector<Atom>&, int, Sign)> pick_signs =
        [&](int s, std::vector<Atom>& row, int Jbar, Sign beta) {
            int Sbar = static_cast<int>(idims.size());
            if (s < 0) {
                std::vector<Atom> acc = row;
                descend_levels(acc, Jbar - 1, capped,
                               [&](const std::vector<Atom>& atoms) { sink(atoms); });
                return;
            }
            // Choose alpha_s (and eps_Sbar for the last atom); earlier
            // third signs are forced by the link.
            for (Sign alpha : {minus, plus}) {
                auto set_atom = [&](Sign eps) {
                    row[static_cast<size_t>(s)] =
                        make_atom({{static_cast<int8_t>(idims[static_cast<size_t>(s)]), alpha},
                                   {static_cast<int8_t>(Jbar), beta},
                                   {static_cast<int8_t>(kdims[static_cast<size_t>(s)]), eps}});
                };
                if (s == Sbar - 1) {
                    for (Sign eps : {minus, plus}) {
                        set_atom(eps);
                        pick_signs(s - 1, row, Jbar, beta);
                    }
                } else {
                    // eps_s = -(-1)^{i_{s+1}+Jbar} alpha_{s+1}
                    Sign next_alpha = row[static_cast<size_t>(s + 1)][0].sign;
                    set_atom(sign_pow(idims[static_cast<size_t>(s + 1)] + Jbar + 1, next_alpha));
                    pick_signs(s - 1, row, Jbar, beta);
                }
            }
        };

    std::function<void(int, int, int, Sign)> pick_dims = [&](int next_i, int next_k, int Jbar,
                                                             Sign beta) {
        if (!idims.empty()) {
            std::vector<Atom> row(idims.size());
            pick_signs(static_cast<int>(idims.size()) - 1, row, Jbar, beta);
        }
        // Extend the row: first dims strictly decreasing, third strictly
        // increasing.
        for (int i = next_i; i >= 0; --i)
            for (int k = next_k; k <= cap_w; ++k) {
                idims.push_back(i);
                kdims.push_back(k);
                pick_dims(i - 1, k + 1, Jbar, beta);
                idims.pop_back();
                kdims.pop_back();
            }
    };

    for (int Jbar = 0; Jbar <= cap_v; ++Jbar)
        for (Sign beta : {minus, plus}) pick_dims(cap_u, 0, Jbar, beta);

    std::sort(result.begin(), result.end(), [](const Subcomplex& a, const Subcomplex& b) {
        return format_subcomplex(a) < format_subcomplex(b);
    });
    result.erase(std::unique(result.begin(), result.end(),
                             [](const Subcomplex& a, const Subcomplex& b) {
                                 return a.sig == b.sig && a.ms == b.ms;
                             }),
                 result.end());
    return result;
}

}  // namespace gmol
