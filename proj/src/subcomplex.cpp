#include "gmol/subcomplex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gmol {

Subcomplex normalize(const Signature& sig, std::vector<Atom> atoms) {
    std::vector<Atom> keep;
    keep.reserve(atoms.size());
    for (size_t i = 0; i < atoms.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < atoms.size() && !dominated; ++j) {
            if (i == j) continue;
            if (atoms[i] == atoms[j]) {
                dominated = j < i;  // keep the first copy only
            } else {
                dominated = atom_contains(atoms[j], atoms[i]);
            }
        }
        if (!dominated) keep.push_back(atoms[i]);
    }
    std::sort(keep.begin(), keep.end(), atom_less);
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    return Subcomplex{sig, std::move(keep)};
}

Subcomplex sub_union(const Subcomplex& x, const Subcomplex& y) {
    if (!(x.sig == y.sig)) throw std::invalid_argument("sub_union: signature mismatch");
    std::vector<Atom> all = x.ms;
    all.insert(all.end(), y.ms.begin(), y.ms.end());
    return normalize(x.sig, std::move(all));
}

Subcomplex sub_intersect(const Subcomplex& x, const Subcomplex& y) {
    if (!(x.sig == y.sig)) throw std::invalid_argument("sub_intersect: signature mismatch");
    std::vector<Atom> all;
    for (const Atom& a : x.ms)
        for (const Atom& b : y.ms) {
            Subcomplex ab = atom_intersect(a, b, x.sig);
            all.insert(all.end(), ab.ms.begin(), ab.ms.end());
        }
    return normalize(x.sig, std::move(all));
}

bool sub_contains_atom(const Subcomplex& x, const Atom& a) {
    for (const Atom& m : x.ms)
        if (atom_contains(m, a)) return true;
    return false;
}

bool sub_contains(const Subcomplex& x, const Subcomplex& y) {
    for (const Atom& m : y.ms)
        if (!sub_contains_atom(x, m)) return false;
    return true;
}

int sub_dim(const Subcomplex& x) {
    int d = 0;
    for (const Atom& m : x.ms) d = std::max(d, atom_dim(m));
    return d;
}

std::optional<std::pair<Atom, Atom>> condition1_violation(const Subcomplex& x) {
    if (x.empty()) throw std::invalid_argument("condition1: empty subcomplex");
    for (size_t i = 0; i < x.ms.size(); ++i)
        for (size_t j = 0; j < x.ms.size(); ++j) {
            if (i == j) continue;
            bool below = true;
            for (int f = 0; f < x.ms[i].arity && below; ++f)
                below = x.ms[i][f].dim <= x.ms[j][f].dim;
            if (below) return std::make_pair(x.ms[i], x.ms[j]);
        }
    return std::nullopt;
}

Subcomplex sub_d(const Subcomplex& x, int p, Sign g) {
    const Signature& sig = x.sig;
    std::vector<Atom> out;
    // Maximal atoms of dimension < p survive unchanged.
    for (const Atom& m : x.ms)
        if (atom_dim(m) < p) out.push_back(m);
    // If nothing exceeds p the subcomplex is its own p-source/target.
    if (sub_dim(x) <= p) return normalize(sig, std::vector<Atom>(x.ms));

    // Candidate dimension sequences: componentwise below some maximal atom,
    // summing to p.
    std::set<std::array<int8_t, max_arity>> dims;
    for (const Atom& m : x.ms) {
        std::array<int8_t, max_arity> cur{};
        auto rec = [&](auto&& self, int i, int rest) -> void {
            if (i == m.arity) {
                if (rest == 0) dims.insert(cur);
                return;
            }
            int tail = 0;  // capacity of the remaining factors
            for (int j = i + 1; j < m.arity; ++j) tail += m[j].dim;
            for (int d = std::max(0, rest - tail); d <= std::min<int>(m[i].dim, rest); ++d) {
                cur[static_cast<size_t>(i)] = static_cast<int8_t>(d);
                self(self, i + 1, rest - d);
            }
        };
        rec(rec, 0, p);
    }

    for (const auto& dv : dims) {
        Atom a;
        a.arity = static_cast<int8_t>(sig.arity);
        int prefix = 0;  // sum of earlier factor dims of the candidate
        bool ok = true;
        for (int f = 0; f < sig.arity && ok; ++f) {
            a[f].dim = dv[static_cast<size_t>(f)];
            // A witness is a maximal atom dominating the candidate's dims.
            bool strict = false;
            Sign inherited = 0;
            bool have_equal = false;
            for (const Atom& m : x.ms) {
                bool dom = true;
                for (int r = 0; r < sig.arity && dom; ++r)
                    dom = m[r].dim >= dv[static_cast<size_t>(r)];
                if (!dom) continue;
                if (m[f].dim > a[f].dim) {
                    strict = true;
                } else {
                    have_equal = true;
                    inherited = m[f].sign;
                }
            }
            if (strict)
                a[f].sign = sign_pow(sig.twists[static_cast<size_t>(f)] + prefix, g);
            else if (have_equal)
                a[f].sign = inherited;
            else
                ok = false;  // no witness at all: candidate not dominated
            prefix += a[f].dim;
        }
        if (ok) out.push_back(a);
    }
    return normalize(sig, std::move(out));
}

Subcomplex sub_compose(const Subcomplex& x, int p, const Subcomplex& y) {
    Subcomplex xp = sub_d(x, p, plus);
    Subcomplex ym = sub_d(y, p, minus);
    if (!(xp == ym))
        throw std::invalid_argument("compose: boundary mismatch: d^+ = " + format_subcomplex(xp) +
                                    " vs d^- = " + format_subcomplex(ym));
    return sub_union(x, y);
}

int frame_dim(const Subcomplex& x) {
    if (x.ms.size() < 2) throw std::invalid_argument("frame_dim: an atom has no frame dimension");
    int p = 0;
    for (size_t i = 0; i < x.ms.size(); ++i)
        for (size_t j = i + 1; j < x.ms.size(); ++j)
            p = std::max(p, min_sum(x.ms[i], x.ms[j]));
    return p;
}

std::string format_subcomplex(const Subcomplex& x) {
    if (x.empty()) return "{}";
    std::string out;
    for (size_t i = 0; i < x.ms.size(); ++i) {
        if (i) out += ';';
        out += format_atom(x.ms[i]);
    }
    return out;
}

}  // namespace gmol
