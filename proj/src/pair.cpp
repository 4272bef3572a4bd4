#include "gmol/pair.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmol {

namespace {

void require_pair(const Subcomplex& x) {
    if (x.sig.arity != 2) throw std::invalid_argument("pair operation: arity must be 2");
    if (x.empty()) throw std::invalid_argument("pair operation: empty subcomplex");
    for (const Atom& a : x.ms)
        for (int f = 0; f < 2; ++f)
            if (a[f].sign == top) throw std::invalid_argument("pair operation: Top cell not allowed");
}

}  // namespace

PairVerdict pair_is_molecule(const Subcomplex& x) {
    require_pair(x);
    std::vector<Atom> list = x.ms;
    std::sort(list.begin(), list.end(),
              [](const Atom& a, const Atom& b) { return a[0].dim > b[0].dim; });
    int tw = x.sig.twists[0] + x.sig.twists[1];
    for (size_t s = 1; s < list.size(); ++s) {
        const Atom& prev = list[s - 1];
        const Atom& cur = list[s];
        // Staircase: strictly decreasing i, strictly increasing j.
        if (cur[0].dim >= prev[0].dim || cur[1].dim <= prev[1].dim)
            return PairVerdict::violate(PairVerdict::Reason::staircase, prev, cur);
        // Sign link between consecutive atoms.
        if (prev[1].sign != sign_pow(cur[0].dim + tw + 1, cur[0].sign))
            return PairVerdict::violate(PairVerdict::Reason::sign_link, prev, cur);
    }
    return PairVerdict::pass();
}

Subcomplex pair_d(const Subcomplex& x, int p, Sign g) {
    if (!pair_is_molecule(x).ok) throw std::invalid_argument("pair_d: not a molecule");
    return sub_d(x, p, g);
}

Subcomplex pair_compose(const Subcomplex& x, int p, const Subcomplex& y) {
    if (!pair_is_molecule(x).ok || !pair_is_molecule(y).ok)
        throw std::invalid_argument("pair_compose: not a molecule");
    return sub_compose(x, p, y);
}

}  // namespace gmol
