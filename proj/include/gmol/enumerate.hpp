#pragma once

// Level-by-level validation and generation of molecules in a product of
// three untwisted globes.  A maximal-atom set is examined one middle
// dimension ("level") at a time: the checker tests the per-level clauses,
// and the generator builds every legal row of level-J atoms below an
// already-constructed upper part, working from the top level down.

#include <string>
#include <vector>

#include "gmol/subcomplex.hpp"

namespace gmol {

struct ValidateResult {
    bool ok = true;
    std::string clause;  // name of the first violated clause when !ok
    int level = -1;      // the level J at which it failed

    static ValidateResult pass() { return {}; }
};

// True iff the (nonempty, arity-3, untwisted) set of atoms is exactly the
// maximal-atom set of a molecule, checked clause by clause at every level.
ValidateResult validate_maximal_atom_set(const std::vector<Atom>& atoms, const Signature& sig);

struct LevelState {
    int J = 0;                       // the level whose atoms are to be chosen
    std::vector<Atom> lowest_above;  // lowest maximal atoms above level J,
                                     // first dims decreasing, third increasing
    Signature sig;                   // caps bound the generated dimensions
};

struct LevelChoice {
    std::vector<Atom> atoms;  // atoms at level J, first dims decreasing; may be empty
};

// Every legal row of level-J atoms under the given upper part.  The empty
// row appears exactly when the construction permits no atoms at level J.
std::vector<LevelChoice> next_level_choices(const LevelState& state);

// The lowest maximal atoms above level J of a set: those whose first/third
// factor pair is not properly contained in that of another atom above
// level J.  Returned with first dims decreasing.
std::vector<Atom> lowest_above_level(const std::vector<Atom>& atoms, int J);

enum class EnumMode { signed_atoms, capped };

// All molecules of the triple product with the given caps, sorted by
// canonical serialization.  Signed mode lists molecules of the unbounded
// product whose maximal-atom dimensions respect the caps; capped mode
// lists their images in the bounded product (top dimension unsigned),
// deduplicated.
std::vector<Subcomplex> enumerate3(int cap_u, int cap_v, int cap_w, EnumMode mode);

}  // namespace gmol
