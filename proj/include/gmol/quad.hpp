#pragma once

// Molecules in a product of four globes: projections onto twisted
// triples, the definition-side and explicit checkers, coordinate-pair
// adjacency, n-source/n-target, composition and decomposition.

#include "gmol/expr.hpp"
#include "gmol/subcomplex.hpp"

namespace gmol {

struct QuadVerdict {
    enum class Reason { none, cond1, projection, sign, flip_cover, middle_gap };
    bool ok = true;
    Reason reason = Reason::none;
    int axis = -1, level = -1;  // projection violations
    int s = -1, r = -1, t = -1; // factor indices for sign / middle-gap
    std::vector<Atom> witnesses;

    static QuadVerdict pass() { return {}; }
};

const char* to_string(QuadVerdict::Reason r);

// Same erasure as the three-factor projection; the result lives in a
// product of three twisted globes.
Subcomplex project4(const Subcomplex& x, int axis, int I);

// Condition 1 plus every single-axis projection is empty or pairwise
// molecular as a (twisted) triple.
QuadVerdict quad_is_pairwise_def(const Subcomplex& x);

// The four explicit conditions: condition 1, the six coordinate-pair sign
// conditions, the opposite-sign cover condition, and the middle-factor
// gap condition.
QuadVerdict quad_is_pairwise_explicit(const Subcomplex& x);

// (s,t)-adjacency (0 <= s < t < 4): the dimension profiles cross in
// factors s and t, and no maximal atom dominating all four minima beats
// the pair's (s,t) min-sum against both atoms.  Precondition: condition 1.
bool st_adjacent4(const Atom& a, const Atom& b, const Subcomplex& x, int s, int t);

// Full adjacency: the four-coordinate min-sum blocking criterion.
bool adjacent4(const Atom& a, const Atom& b, const Subcomplex& x);

Subcomplex quad_d(const Subcomplex& x, int p, Sign g);
Subcomplex quad_compose(const Subcomplex& x, int p, const Subcomplex& y);
ExprPtr decompose4(const Subcomplex& x);

}  // namespace gmol
