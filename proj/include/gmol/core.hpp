#pragma once

// Core value types for products of (possibly twisted, possibly capped)
// globes: signs, factor atoms, signatures, and product atoms, together
// with the elementary operations on single atoms (dimension, containment,
// boundary / n-source / n-target, intersection).

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmol {

// A factor sign is -1 (minus), +1 (plus) or 0, which marks the unsigned
// top cell of a capped factor ("Top").
using Sign = int8_t;
inline constexpr Sign minus = -1;
inline constexpr Sign plus = +1;
inline constexpr Sign top = 0;

// (-1)^e * g for a signed g; never applied to Top.
constexpr Sign sign_pow(int e, Sign g) {
    return (e & 1) ? static_cast<Sign>(-g) : g;
}

// Rank used by the canonical order: minus < plus < Top.
constexpr int sign_rank(Sign s) { return s == minus ? 0 : (s == plus ? 1 : 2); }

inline char sign_char(Sign s) { return s == minus ? '-' : (s == plus ? '+' : '*'); }

// One factor of a product atom: a globe atom u[dim, sign], or the unsigned
// top cell of a finite globe when sign == top.
struct Factor {
    int8_t dim = 0;
    Sign sign = minus;

    friend bool operator==(const Factor&, const Factor&) = default;
};

inline constexpr int max_arity = 4;

// Ambient product complex: how many globe factors, the twist parity of
// each factor (globes w^J with J odd flip boundary signs), and optional
// dimension caps (finite globes with an unsigned top cell).
struct Signature {
    int arity = 1;
    std::array<int8_t, max_arity> twists{};          // parities, 0 or 1
    std::optional<std::array<int8_t, max_arity>> caps;

    friend bool operator==(const Signature&, const Signature&) = default;
};

// An atom of the product complex: one factor atom per signature factor.
struct Atom {
    int8_t arity = 0;
    std::array<Factor, max_arity> f{};

    Factor& operator[](int i) { return f[static_cast<size_t>(i)]; }
    const Factor& operator[](int i) const { return f[static_cast<size_t>(i)]; }

    friend bool operator==(const Atom&, const Atom&) = default;
};

inline Atom make_atom(std::initializer_list<Factor> fs) {
    Atom a;
    a.arity = static_cast<int8_t>(fs.size());
    int i = 0;
    for (const Factor& x : fs) a.f[static_cast<size_t>(i++)] = x;
    return a;
}

// dim(a_1 x ... x a_n) = dim a_1 + ... + dim a_n.
inline int atom_dim(const Atom& a) {
    int d = 0;
    for (int i = 0; i < a.arity; ++i) d += a[i].dim;
    return d;
}

// Containment of globe atoms: strictly smaller dimension always nests;
// at equal dimension the signs must agree, except that a Top cell
// contains every atom of its own dimension.
inline bool factor_contains(Factor big, Factor small) {
    if (small.dim < big.dim) return true;
    if (small.dim > big.dim) return false;
    return big.sign == small.sign || big.sign == top;
}

inline bool atom_contains(const Atom& big, const Atom& small) {
    for (int i = 0; i < big.arity; ++i)
        if (!factor_contains(big[i], small[i])) return false;
    return true;
}

// Canonical total order on atoms of one signature: lexicographic on the
// dimension sequence, then on the sign sequence with minus < plus < Top.
inline bool atom_less(const Atom& a, const Atom& b) {
    for (int i = 0; i < a.arity; ++i)
        if (a[i].dim != b[i].dim) return a[i].dim < b[i].dim;
    for (int i = 0; i < a.arity; ++i)
        if (a[i].sign != b[i].sign) return sign_rank(a[i].sign) < sign_rank(b[i].sign);
    return false;
}

std::string format_atom(const Atom& a);

// Checks factor count, caps and Top placement against the signature.
bool atom_well_formed(const Atom& a, const Signature& sig);

struct Subcomplex;  // see subcomplex.hpp

// Maximal atoms of the n-source (g = minus) / n-target (g = plus) of a
// single atom.  If dim a <= p the atom itself is returned.  Otherwise the
// result consists of every atom with componentwise dims <= a's dims summing
// to p; a factor whose dimension is unchanged keeps its sign, and a factor
// that descends takes the sign (-1)^{t_f + sum of earlier result dims} * g.
Subcomplex atom_d(const Atom& a, int p, Sign g, const Signature& sig);

// Maximal atoms of the boundary of a positive-dimensional atom;
// equals atom_d at dimension dim(a) - 1.  Throws on dimension zero.
Subcomplex atom_boundary(const Atom& a, Sign g, const Signature& sig);

// Maximal atoms of the intersection of two atoms (possibly empty).
Subcomplex atom_intersect(const Atom& a, const Atom& b, const Signature& sig);

}  // namespace gmol
