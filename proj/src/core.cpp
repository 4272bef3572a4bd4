#include "gmol/core.hpp"

#include <cassert>

#include "gmol/subcomplex.hpp"

namespace gmol {

std::string format_atom(const Atom& a) {
    std::string out = "(";
    for (int i = 0; i < a.arity; ++i) {
        if (i) out += ',';
        out += std::to_string(static_cast<int>(a[i].dim));
        out += sign_char(a[i].sign);
    }
    out += ')';
    return out;
}

bool atom_well_formed(const Atom& a, const Signature& sig) {
    if (a.arity != sig.arity) return false;
    for (int i = 0; i < a.arity; ++i) {
        if (a[i].dim < 0) return false;
        if (sig.caps) {
            int cap = (*sig.caps)[static_cast<size_t>(i)];
            if (a[i].dim > cap) return false;
            // The cap dimension holds exactly one cell, the unsigned Top;
            // below the cap a factor atom is signed.
            if ((a[i].sign == top) != (a[i].dim == cap)) return false;
        } else if (a[i].sign == top) {
            return false;
        }
    }
    return true;
}

Subcomplex atom_d(const Atom& a, int p, Sign g, const Signature& sig) {
    Subcomplex whole;
    whole.sig = sig;
    whole.ms = {a};
    return sub_d(whole, p, g);
}

Subcomplex atom_boundary(const Atom& a, Sign g, const Signature& sig) {
    int d = atom_dim(a);
    if (d == 0) throw std::invalid_argument("atom_boundary: dimension-zero atom has no boundary");
    return atom_d(a, d - 1, g, sig);
}

namespace {

// Possible factor atoms of the intersection of two globe atoms.
// Empty result means the whole intersection is empty.
std::vector<Factor> factor_intersect(Factor x, Factor y) {
    if (factor_contains(x, y)) return {y};
    if (factor_contains(y, x)) return {x};
    // Same dimension, opposite proper signs: the two hemispheres below,
    // or nothing at dimension zero.
    assert(x.dim == y.dim);
    if (x.dim == 0) return {};
    int8_t d = static_cast<int8_t>(x.dim - 1);
    return {Factor{d, minus}, Factor{d, plus}};
}

}  // namespace

Subcomplex atom_intersect(const Atom& a, const Atom& b, const Signature& sig) {
    std::array<std::vector<Factor>, max_arity> choice;
    for (int i = 0; i < a.arity; ++i) {
        choice[static_cast<size_t>(i)] = factor_intersect(a[i], b[i]);
        if (choice[static_cast<size_t>(i)].empty()) return Subcomplex{sig, {}};
    }
    std::vector<Atom> out;
    Atom cur;
    cur.arity = a.arity;
    // All componentwise combinations.
    auto rec = [&](auto&& self, int i) -> void {
        if (i == a.arity) {
            out.push_back(cur);
            return;
        }
        for (Factor f : choice[static_cast<size_t>(i)]) {
            cur[i] = f;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return normalize(sig, std::move(out));
}

}  // namespace gmol
