#pragma once

// Finite subcomplexes of a product of globes, represented canonically by
// their antichain of maximal atoms, plus the set algebra on them and the
// operations shared by all arities: n-source/n-target, composition and
// frame dimension.

#include <optional>
#include <utility>
#include <vector>

#include "gmol/core.hpp"

namespace gmol {

// Canonical representation: maximal atoms, duplicate- and dominance-free,
// sorted by the canonical atom order.  The empty subcomplex (no maximal
// atoms) is representable; molecule-level operations reject it.
struct Subcomplex {
    Signature sig;
    std::vector<Atom> ms;

    bool empty() const { return ms.empty(); }
    friend bool operator==(const Subcomplex&, const Subcomplex&) = default;
};

// Removes atoms contained in another, deduplicates, sorts canonically.
Subcomplex normalize(const Signature& sig, std::vector<Atom> atoms);
inline Subcomplex normalize(const Subcomplex& x) { return normalize(x.sig, x.ms); }

Subcomplex sub_union(const Subcomplex& x, const Subcomplex& y);
Subcomplex sub_intersect(const Subcomplex& x, const Subcomplex& y);
bool sub_contains_atom(const Subcomplex& x, const Atom& a);
bool sub_contains(const Subcomplex& x, const Subcomplex& y);  // y subset of x

// Largest dimension among maximal atoms.
int sub_dim(const Subcomplex& x);

// Condition 1: no two distinct maximal atoms with componentwise
// comparable dimension sequences.  Returns a violating pair on failure.
std::optional<std::pair<Atom, Atom>> condition1_violation(const Subcomplex& x);
inline bool is_condition1(const Subcomplex& x) { return !condition1_violation(x); }

// n-source / n-target shared by every arity (and by single atoms):
// maximal atoms of dimension < p are kept; a dimension-p atom enters when
// some maximal atom dominates it componentwise, each factor taking the
// descended sign (-1)^{t_f + sum of earlier dims} * g when a dominating
// witness strictly exceeds that factor's dimension, and the witness's own
// sign otherwise.
Subcomplex sub_d(const Subcomplex& x, int p, Sign g);

// Composite x #_p y: defined when sub_d(x,p,+) == sub_d(y,p,-); the
// composite is the union.  Throws std::invalid_argument on mismatch.
Subcomplex sub_compose(const Subcomplex& x, int p, const Subcomplex& y);

// Largest dimension of an intersection of two distinct maximal atoms,
// computed as the maximal componentwise min-sum.  Throws when there are
// fewer than two maximal atoms.
int frame_dim(const Subcomplex& x);

// Componentwise min-sum of two atoms' dimension sequences.
inline int min_sum(const Atom& a, const Atom& b) {
    int s = 0;
    for (int i = 0; i < a.arity; ++i)
        s += a[i].dim < b[i].dim ? a[i].dim : b[i].dim;
    return s;
}

std::string format_subcomplex(const Subcomplex& x);

}  // namespace gmol
