#pragma once

// Composition-witness expression trees: leaves are atoms, internal nodes
// carry the composition level.  Serialized form:
//   expr := atom | '(' expr '#' NAT expr ')'

#include <memory>
#include <string>

#include "gmol/subcomplex.hpp"

namespace gmol {

struct MoleculeExpr {
    // Leaf when left and right are null.
    Atom leaf{};
    int level = -1;
    std::shared_ptr<const MoleculeExpr> left, right;

    bool is_leaf() const { return !left; }

    static std::shared_ptr<const MoleculeExpr> make_leaf(const Atom& a) {
        auto e = std::make_shared<MoleculeExpr>();
        e->leaf = a;
        return e;
    }
    static std::shared_ptr<const MoleculeExpr> make_node(std::shared_ptr<const MoleculeExpr> l,
                                                         int level,
                                                         std::shared_ptr<const MoleculeExpr> r) {
        auto e = std::make_shared<MoleculeExpr>();
        e->level = level;
        e->left = std::move(l);
        e->right = std::move(r);
        return e;
    }
};

using ExprPtr = std::shared_ptr<const MoleculeExpr>;

// Evaluates the tree over the signature, verifying at every node that
// d_level^+(left) == d_level^-(right); throws on violation.
Subcomplex eval_expr(const ExprPtr& e, const Signature& sig);

std::string format_expr(const ExprPtr& e);

size_t expr_leaf_count(const ExprPtr& e);

// The total order used to schedule decomposition: factor f is compared
// with an orientation given by the parity of the common dimension prefix;
// even orientation lists minus-signed atoms by ascending dimension, then
// plus-signed by descending dimension; odd orientation is the mirror
// image.  Restricted to the maximal atoms of a condition-1 subcomplex
// this is a strict total order.
bool natural_less(const Atom& a, const Atom& b);

// Rewrites every leaf through the cap quotient: a factor sitting at its
// cap loses its sign.  Node structure and levels are unchanged.
ExprPtr expr_cap_leaves(const ExprPtr& e, const std::array<int8_t, max_arity>& caps);

// Splits at the frame dimension p into d_p^- plus the least maximal atom
// of dimension > p versus d_p^+ plus the remaining ones, recursively,
// yielding an expression tree that evaluates back to the input.  The
// caller is responsible for the molecule precondition.
ExprPtr decompose_subcomplex(const Subcomplex& x);

}  // namespace gmol
