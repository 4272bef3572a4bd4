#include "gmol/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace gmol {

CellComplex::CellComplex(const Signature& sig) : sig_(sig) {
    if (!sig.caps) throw std::invalid_argument("CellComplex: signature must be capped");
    size_t count = 1;
    for (int f = 0; f < sig.arity; ++f)
        count *= 2 * static_cast<size_t>((*sig.caps)[static_cast<size_t>(f)]) + 1;
    if (count > max_cells) throw std::invalid_argument("CellComplex: atom count exceeds bound");

    // Factor atoms of a finite globe: two signed atoms per dimension below
    // the cap, one unsigned top cell at the cap.
    std::array<std::vector<Factor>, max_arity> fs;
    for (int f = 0; f < sig.arity; ++f) {
        int cap = (*sig.caps)[static_cast<size_t>(f)];
        for (int d = 0; d < cap; ++d) {
            fs[static_cast<size_t>(f)].push_back(Factor{static_cast<int8_t>(d), minus});
            fs[static_cast<size_t>(f)].push_back(Factor{static_cast<int8_t>(d), plus});
        }
        fs[static_cast<size_t>(f)].push_back(Factor{static_cast<int8_t>(cap), top});
    }
    std::vector<Atom> all;
    Atom cur;
    cur.arity = static_cast<int8_t>(sig.arity);
    auto rec = [&](auto&& self, int f) -> void {
        if (f == sig.arity) {
            all.push_back(cur);
            return;
        }
        for (Factor x : fs[static_cast<size_t>(f)]) {
            cur[f] = x;
            self(self, f + 1);
        }
    };
    rec(rec, 0);
    std::sort(all.begin(), all.end(), atom_less);
    atoms_ = std::move(all);

    for (size_t i = 0; i < atoms_.size(); ++i) {
        index_[format_atom(atoms_[i])] = i;
        dims_.push_back(atom_dim(atoms_[i]));
        max_dim_ = std::max(max_dim_, dims_.back());
    }
    down_.assign(atoms_.size(), Cells{});
    for (size_t i = 0; i < atoms_.size(); ++i)
        for (size_t j = 0; j < atoms_.size(); ++j)
            if (atom_contains(atoms_[i], atoms_[j])) down_[i].set(j);

    // First-principles boundary of each atom, straight from the product
    // rule: factor f contributes its one-step boundary with the ambient
    // sign multiplied by (-1)^{twist_f + sum of earlier factor dims}.
    for (Sign g : {minus, plus}) {
        auto& table = bnd_[g == minus ? 0 : 1];
        table.assign(atoms_.size(), Cells{});
        for (size_t i = 0; i < atoms_.size(); ++i) {
            const Atom& a = atoms_[i];
            int prefix = 0;
            for (int f = 0; f < a.arity; ++f) {
                if (a[f].dim > 0) {
                    Atom b = a;
                    b[f].dim = static_cast<int8_t>(a[f].dim - 1);
                    b[f].sign = sign_pow(sig.twists[static_cast<size_t>(f)] + prefix, g);
                    table[i] |= down_[index(b)];
                }
                prefix += a[f].dim;
            }
        }
    }
}

size_t CellComplex::index(const Atom& a) const {
    auto it = index_.find(format_atom(a));
    if (it == index_.end()) throw std::invalid_argument("CellComplex: unknown atom " + format_atom(a));
    return it->second;
}

Cells CellComplex::to_cells(const Subcomplex& x) const {
    Cells out;
    for (const Atom& m : x.ms) out |= down_[index(m)];
    return out;
}

Subcomplex CellComplex::to_subcomplex(const Cells& x) const {
    std::vector<Atom> ms;
    for (size_t i = 0; i < atoms_.size(); ++i)
        if (x[i]) ms.push_back(atoms_[i]);
    return normalize(sig_, std::move(ms));
}

Cells CellComplex::d(const Cells& x, int n, Sign a) const {
    const auto& table = bnd_[a == minus ? 0 : 1];
    Cells out;
    for (size_t i = 0; i < atoms_.size(); ++i) {
        if (!x[i] || dims_[i] > n) continue;
        bool in = true;
        for (size_t j = 0; j < atoms_.size() && in; ++j)
            if (x[j] && dims_[j] == n + 1 && down_[j][i]) in = table[j][i];
        if (in) out.set(i);
    }
    return out;
}

namespace {

// Memoized per-molecule boundaries for the closure and the axiom suite.
class BoundaryCache {
public:
    explicit BoundaryCache(const CellComplex& K) : K_(K) {}

    const Cells& d(const Cells& x, int n, Sign a) {
        auto& slot = cache_[x];
        size_t levels = static_cast<size_t>(K_.max_dim()) + 1;
        if (slot.empty()) slot.assign(levels, {});
        auto& e = slot[static_cast<size_t>(std::min(n, K_.max_dim()))];
        size_t side = a == minus ? 0 : 1;
        if (!e.have[side]) {
            e.val[side] = K_.d(x, n, a);
            e.have[side] = true;
        }
        return e.val[side];
    }

    bool composable(const Cells& x, int n, const Cells& y) {
        const Cells& xp = d(x, n, plus);
        if (xp != d(y, n, minus)) return false;
        return (x & y) == xp;
    }

private:
    struct Entry {
        Cells val[2];
        bool have[2] = {false, false};
    };
    const CellComplex& K_;
    std::unordered_map<Cells, std::vector<Entry>, CellsHash> cache_;
};

int cells_dim(const CellComplex& K, const Cells& x) {
    int d = 0;
    for (size_t i = 0; i < K.size(); ++i)
        if (x[i]) d = std::max(d, K.dim(i));
    return d;
}

}  // namespace

std::unordered_set<Cells, CellsHash> oracle_enumerate_molecules(const CellComplex& K, size_t bound) {
    BoundaryCache bc(K);
    std::unordered_set<Cells, CellsHash> found;
    std::vector<Cells> list;
    std::deque<size_t> work;

    auto add = [&](const Cells& x) {
        if (found.insert(x).second) {
            if (found.size() > bound)
                throw std::runtime_error("oracle_enumerate_molecules: bound exceeded");
            list.push_back(x);
            work.push_back(list.size() - 1);
        }
    };
    for (size_t i = 0; i < K.size(); ++i) add(K.atom_cells(i));

    while (!work.empty()) {
        size_t xi = work.front();
        work.pop_front();
        // list grows while we iterate; snapshot the current extent.
        for (size_t yi = 0, end = list.size(); yi < end; ++yi) {
            Cells x = list[xi], y = list[yi];
            int levels = std::min(cells_dim(K, x), cells_dim(K, y));
            for (int n = 0; n < levels; ++n) {
                if (bc.composable(x, n, y)) add(x | y);
                if (bc.composable(y, n, x)) add(y | x);
            }
        }
    }
    return found;
}

bool oracle_is_molecule(const CellComplex& K, const Cells& x) {
    // Memoized per signature; complexes are tiny and test-scoped.
    static std::map<std::string, std::unordered_set<Cells, CellsHash>> cache;
    std::string key = std::to_string(K.signature().arity);
    for (int f = 0; f < K.signature().arity; ++f) {
        key += ':' + std::to_string((*K.signature().caps)[static_cast<size_t>(f)]);
        key += 't' + std::to_string(K.signature().twists[static_cast<size_t>(f)]);
    }
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, oracle_enumerate_molecules(K)).first;
    return it->second.count(x) > 0;
}

AxiomReport check_axioms(const CellComplex& K, const std::vector<Cells>& M) {
    BoundaryCache bc(K);
    AxiomReport rep;
    int top_n = K.max_dim();
    auto fail = [&](std::string what) {
        rep.ok = false;
        if (rep.detail.empty()) rep.detail = std::move(what);
    };

    // Axioms 2, 3 and 7: unary laws per molecule.
    for (const Cells& x : M) {
        int p = cells_dim(K, x);
        for (int n = 0; n <= top_n + 1; ++n) {
            for (Sign a : {minus, plus}) {
                Cells dnx = K.d(x, n, a);
                bool fixed = dnx == x;
                if (fixed != (n >= p)) return fail("axiom 7: d fixed-point mismatch"), rep;
                for (int m = 0; m <= top_n; ++m)
                    for (Sign b : {minus, plus}) {
                        Cells lhs = K.d(dnx, m, b);
                        Cells rhs = m < n ? K.d(x, m, b) : dnx;
                        if (lhs != rhs) return fail("axiom 2: d composition mismatch"), rep;
                    }
            }
            if (n <= top_n) {
                Cells s = bc.d(x, n, minus), t = bc.d(x, n, plus);
                if (!bc.composable(s, n, x) || (s | x) != x)
                    return fail("axiom 3: left unit fails"), rep;
                if (!bc.composable(x, n, t) || (x | t) != x)
                    return fail("axiom 3: right unit fails"), rep;
            }
        }
    }

    // Composable pairs per level.
    std::vector<std::vector<std::pair<size_t, size_t>>> pairs(static_cast<size_t>(top_n) + 1);
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < M.size(); ++j)
            for (int n = 0; n <= top_n; ++n)
                if (bc.composable(M[i], n, M[j])) pairs[static_cast<size_t>(n)].push_back({i, j});

    // Axiom 4: boundaries of composites.
    for (int n = 0; n <= top_n; ++n)
        for (auto [i, j] : pairs[static_cast<size_t>(n)]) {
            Cells x = M[i], y = M[j], xy = x | y;
            for (Sign a : {minus, plus}) {
                for (int m = 0; m < n; ++m)
                    if (K.d(xy, m, a) != K.d(x, m, a) || K.d(x, m, a) != K.d(y, m, a))
                        return fail("axiom 4: low boundary of composite"), rep;
                for (int m = n + 1; m <= top_n; ++m) {
                    Cells dx = bc.d(x, m, a), dy = bc.d(y, m, a);
                    if (!bc.composable(dx, n, dy) || K.d(xy, m, a) != (dx | dy))
                        return fail("axiom 4: high boundary of composite"), rep;
                }
            }
            if (K.d(xy, n, minus) != bc.d(x, n, minus) || K.d(xy, n, plus) != bc.d(y, n, plus))
                return fail("axiom 4: level-n boundary of composite"), rep;
        }

    // Axiom 5: associativity (definedness transfers; composites are unions).
    for (int n = 0; n <= top_n; ++n)
        for (auto [i, j] : pairs[static_cast<size_t>(n)])
            for (size_t k = 0; k < M.size(); ++k) {
                bool left = bc.composable(M[i] | M[j], n, M[k]);
                bool right = bc.composable(M[j], n, M[k]) && bc.composable(M[i], n, M[j] | M[k]);
                if (left != right) return fail("axiom 5: associativity definedness"), rep;
            }

    // Axiom 6: interchange for m < n whenever the left side is defined.
    for (int n = 0; n <= top_n; ++n)
        for (int m = 0; m < n; ++m)
            for (auto [i, j] : pairs[static_cast<size_t>(n)])
                for (auto [k, l] : pairs[static_cast<size_t>(n)]) {
                    if (!bc.composable(M[i] | M[j], m, M[k] | M[l])) continue;
                    if (!bc.composable(M[i], m, M[k]) || !bc.composable(M[j], m, M[l]) ||
                        !bc.composable(M[i] | M[k], n, M[j] | M[l]))
                        return fail("axiom 6: interchange definedness"), rep;
                }
    return rep;
}

Subcomplex cap_quotient(const Subcomplex& x, const std::array<int8_t, max_arity>& caps) {
    Signature sig = x.sig;
    sig.caps = caps;
    std::vector<Atom> ms;
    for (Atom a : x.ms) {
        for (int f = 0; f < a.arity; ++f) {
            int cap = caps[static_cast<size_t>(f)];
            if (a[f].dim > cap) throw std::invalid_argument("cap_quotient: dimension exceeds cap");
            if (a[f].dim == cap) a[f].sign = top;
        }
        ms.push_back(a);
    }
    return normalize(sig, std::move(ms));
}

std::vector<Subcomplex> signed_lifts(const Subcomplex& x) {
    Signature sig = x.sig;
    sig.caps.reset();
    // Positions of Top factors across the maximal atoms.
    std::vector<std::pair<size_t, int>> tops;
    for (size_t i = 0; i < x.ms.size(); ++i)
        for (int f = 0; f < x.ms[i].arity; ++f)
            if (x.ms[i][f].sign == top) tops.push_back({i, f});
    std::vector<Subcomplex> out;
    for (size_t mask = 0; mask < (size_t{1} << tops.size()); ++mask) {
        std::vector<Atom> ms = x.ms;
        for (size_t t = 0; t < tops.size(); ++t)
            ms[tops[t].first][tops[t].second].sign = (mask >> t) & 1 ? plus : minus;
        Subcomplex lift = normalize(sig, std::move(ms));
        if (std::find(out.begin(), out.end(), lift) == out.end()) out.push_back(lift);
    }
    return out;
}

}  // namespace gmol
