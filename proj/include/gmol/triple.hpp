#pragma once

// Molecules in a product of three (possibly twisted) globes: projection
// maps, the definition-side and explicit pairwise-molecular checkers,
// adjacency, projection-maximal atoms, n-source/n-target, composition and
// decomposition into an expression tree.

#include "gmol/expr.hpp"
#include "gmol/subcomplex.hpp"

namespace gmol {

struct TripleVerdict {
    enum class Reason { none, cond1, projection, sign, middle_gap, triple_sign };
    bool ok = true;
    Reason reason = Reason::none;
    int axis = -1, level = -1;       // for projection violations
    std::vector<Atom> witnesses;

    static TripleVerdict pass() { return {}; }
};

const char* to_string(TripleVerdict::Reason r);

// Erases factor `axis` from every maximal atom whose axis dimension is at
// least I; every remaining factor originally right of the axis has its
// twist parity increased by I.  May be empty.
Subcomplex project(const Subcomplex& x, int axis, int I);

// Pairwise molecular via the definition: condition 1 plus every
// projection (each axis, each level up to the axis maximum) is empty or a
// two-factor molecule.
TripleVerdict triple_is_pairwise_def(const Subcomplex& x);

// Pairwise molecular via the five explicit conditions (condition 1, sign
// conditions on adjacent pairs, opposite-sign cover, middle-factor gap,
// triple sign condition).
TripleVerdict triple_is_pairwise_explicit(const Subcomplex& x);

// Adjacency of two distinct maximal atoms: no maximal atom dominating the
// componentwise minima beats the pair's min-sum against both.
// Precondition: condition 1.
bool adjacent3(const Atom& a, const Atom& b, const Subcomplex& x);

// The weaker coordinate-pair adjacency (0 <= s < t < 3): no third maximal
// atom strictly beats both coordinate minima in factors s and t while
// dominating the remaining minimum.  Implied by adjacency; the converse
// fails in general.
bool st_adjacent3(const Atom& a, const Atom& b, const Subcomplex& x, int s, int t);

// Whether a maximal atom survives as a maximal atom of the (axis, J)
// projection: axis dimension >= J and no maximal atom dominates the other
// two factors with axis dimension in [J, own).
bool projection_maximal3(const Atom& a, const Subcomplex& x, int axis, int J);

Subcomplex triple_d(const Subcomplex& x, int p, Sign g);
Subcomplex triple_compose(const Subcomplex& x, int p, const Subcomplex& y);
ExprPtr decompose3(const Subcomplex& x);

}  // namespace gmol
