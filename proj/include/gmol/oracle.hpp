#pragma once

// Brute-force ground truth on products of finite globes: the full atom
// poset with first-principles boundaries, n-source/n-target computed
// cell-by-cell from the atomic-complex definition, molecule enumeration by
// composition closure, the partial omega-category axiom suite, and the
// cap quotient connecting signed and capped subcomplexes.

#include <bitset>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gmol/core.hpp"
#include "gmol/subcomplex.hpp"

namespace gmol {

// A subcomplex of a finite complex is a down-closed set of atoms,
// identified by the atoms whose interior it includes.
inline constexpr size_t max_cells = 128;
using Cells = std::bitset<max_cells>;

struct CellsHash {
    size_t operator()(const Cells& c) const { return std::hash<Cells>{}(c); }
};

class CellComplex {
public:
    // Builds the complete atom table of a capped signature.  Throws when
    // the signature is uncapped or has more than max_cells atoms.
    explicit CellComplex(const Signature& sig);

    const Signature& signature() const { return sig_; }
    size_t size() const { return atoms_.size(); }
    const Atom& atom(size_t i) const { return atoms_[i]; }
    size_t index(const Atom& a) const;
    int dim(size_t i) const { return dims_[i]; }
    int max_dim() const { return max_dim_; }
    // Down-closure of atom i (including i itself).
    const Cells& down(size_t i) const { return down_[i]; }

    Cells atom_cells(size_t i) const { return down_[i]; }
    Cells to_cells(const Subcomplex& x) const;
    Subcomplex to_subcomplex(const Cells& x) const;

    // n-source (a = minus) / n-target (a = plus), from the atomic-complex
    // membership rule: an atom lies in d_n^a(x) iff it lies in x, has
    // dimension <= n, and lies in d_n^a(b) for every (n+1)-atom b of x
    // containing it.
    Cells d(const Cells& x, int n, Sign a) const;

private:
    Signature sig_;
    std::vector<Atom> atoms_;
    std::vector<int> dims_;
    std::vector<Cells> down_;
    std::vector<Cells> bnd_[2];  // closed boundary of each atom, per sign
    std::unordered_map<std::string, size_t> index_;
    int max_dim_ = 0;
};

// All molecules of the complex: the least set containing every atom's
// closure and closed under x U y whenever x and y are n-composable,
// i.e. x n y = d_n^+(x) = d_n^-(y).  Worklist fixpoint; throws when the
// set of molecules exceeds `bound`.
std::unordered_set<Cells, CellsHash> oracle_enumerate_molecules(const CellComplex& K,
                                                                size_t bound = 1u << 21);

bool oracle_is_molecule(const CellComplex& K, const Cells& x);

// Result of the partial omega-category axiom suite.
struct AxiomReport {
    bool ok = true;
    std::string detail;  // first counterexample found, empty when ok
};

// Checks axioms 2-7 (boundary laws, units, boundary of composites,
// associativity, interchange, dimension axiom) over every applicable
// tuple of molecules in M.
AxiomReport check_axioms(const CellComplex& K, const std::vector<Cells>& M);

// Natural quotient onto a capped signature: every factor atom at its cap
// dimension loses its sign (becomes Top).  Throws when a dimension
// exceeds its cap.
Subcomplex cap_quotient(const Subcomplex& x, const std::array<int8_t, max_arity>& caps);

// All signed preimages of a capped subcomplex under cap_quotient: each
// Top occurrence in each maximal atom is replaced by either sign, and the
// result is normalized over the uncapped signature.  Duplicates removed.
std::vector<Subcomplex> signed_lifts(const Subcomplex& x);

}  // namespace gmol
