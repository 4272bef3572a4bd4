#pragma once

// Molecules in a product of two (possibly twisted) globes: the staircase
// characterization, n-source/n-target and composition.

#include "gmol/subcomplex.hpp"

namespace gmol {

struct PairVerdict {
    enum class Reason { none, staircase, sign_link };
    bool ok = true;
    Reason reason = Reason::none;
    Atom w1{}, w2{};  // witnesses on failure

    static PairVerdict pass() { return {}; }
    static PairVerdict violate(Reason r, const Atom& a, const Atom& b) {
        return {false, r, a, b};
    }
};

// A two-factor subcomplex is a molecule iff its maximal atoms can be
// listed with first-factor dimensions strictly decreasing, second-factor
// dimensions strictly increasing, and consecutive signs linked by
// beta_{s-1} = -(-1)^{i_s + t_1 + t_2} alpha_s.
PairVerdict pair_is_molecule(const Subcomplex& x);

Subcomplex pair_d(const Subcomplex& x, int p, Sign g);
Subcomplex pair_compose(const Subcomplex& x, int p, const Subcomplex& y);

}  // namespace gmol
