#include "gmol/expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmol {

Subcomplex eval_expr(const ExprPtr& e, const Signature& sig) {
    if (!e) throw std::invalid_argument("eval_expr: null expression");
    if (e->is_leaf()) return normalize(sig, {e->leaf});
    Subcomplex l = eval_expr(e->left, sig);
    Subcomplex r = eval_expr(e->right, sig);
    return sub_compose(l, e->level, r);  // verifies d^+(l) == d^-(r)
}

std::string format_expr(const ExprPtr& e) {
    if (e->is_leaf()) return format_atom(e->leaf);
    return "(" + format_expr(e->left) + "#" + std::to_string(e->level) + format_expr(e->right) + ")";
}

size_t expr_leaf_count(const ExprPtr& e) {
    if (e->is_leaf()) return 1;
    return expr_leaf_count(e->left) + expr_leaf_count(e->right);
}

bool natural_less(const Atom& a, const Atom& b) {
    int prefix = 0;
    for (int f = 0; f < a.arity; ++f) {
        if (a[f] == b[f]) {
            prefix += a[f].dim;
            continue;
        }
        Sign first = (prefix & 1) ? plus : minus;  // listed before the other sign
        if (a[f].sign != b[f].sign) return a[f].sign == first;
        bool ascending = a[f].sign == first;
        return ascending ? a[f].dim < b[f].dim : a[f].dim > b[f].dim;
    }
    return false;
}

ExprPtr expr_cap_leaves(const ExprPtr& e, const std::array<int8_t, max_arity>& caps) {
    if (!e) throw std::invalid_argument("expr_cap_leaves: null expression");
    if (e->is_leaf()) {
        Atom a = e->leaf;
        for (int f = 0; f < a.arity; ++f) {
            if (a[f].dim > caps[static_cast<size_t>(f)])
                throw std::invalid_argument("expr_cap_leaves: dimension exceeds cap");
            if (a[f].dim == caps[static_cast<size_t>(f)]) a[f].sign = top;
        }
        return MoleculeExpr::make_leaf(a);
    }
    return MoleculeExpr::make_node(expr_cap_leaves(e->left, caps), e->level,
                                   expr_cap_leaves(e->right, caps));
}

ExprPtr decompose_subcomplex(const Subcomplex& x) {
    if (x.empty()) throw std::invalid_argument("decompose: empty subcomplex");
    if (x.ms.size() == 1) return MoleculeExpr::make_leaf(x.ms[0]);
    int p = frame_dim(x);
    std::vector<Atom> tops;
    for (const Atom& m : x.ms)
        if (atom_dim(m) > p) tops.push_back(m);
    // The frame dimension is achieved by a pair of maximal atoms, both of
    // dimension > p, so the split below always makes progress.
    if (tops.size() < 2) throw std::logic_error("decompose: fewer than two atoms above frame");
    std::sort(tops.begin(), tops.end(), natural_less);

    Subcomplex low = normalize(x.sig, {tops[0]});
    Subcomplex high = normalize(x.sig, std::vector<Atom>(tops.begin() + 1, tops.end()));
    Subcomplex left = sub_union(sub_d(x, p, minus), low);
    Subcomplex right = sub_union(sub_d(x, p, plus), high);
    return MoleculeExpr::make_node(decompose_subcomplex(left), p, decompose_subcomplex(right));
}

}  // namespace gmol
