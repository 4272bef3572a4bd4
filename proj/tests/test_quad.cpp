#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gmol/io.hpp"
#include "gmol/oracle.hpp"
#include "gmol/quad.hpp"
#include "gmol/triple.hpp"

using namespace gmol;

namespace {

Signature sig4(std::vector<int> caps = {}) {
    Signature s;
    s.arity = 4;
    if (!caps.empty()) {
        std::array<int8_t, max_arity> cs{};
        for (size_t i = 0; i < caps.size(); ++i) cs[i] = static_cast<int8_t>(caps[i]);
        s.caps = cs;
    }
    return s;
}

const Signature s4 = sig4();

}  // namespace

TEST_CASE("coordinate-pair adjacency can be blocked by a third atom") {
    Subcomplex x = parse_subcomplex("(5-,0-,1-,1-);(0-,5-,1-,2-);(1-,1-,2-,1-)", s4);
    Atom a = parse_atom("(5-,0-,1-,1-)", s4);
    Atom b = parse_atom("(0-,5-,1-,2-)", s4);
    // a and b cross in factors (0,1); the third atom dominates the minima
    // and beats both (0,1) min-sums, so they are not (0,1)-adjacent.
    CHECK(!st_adjacent4(a, b, x, 0, 1));
    // Without the blocker they are.
    Subcomplex y = parse_subcomplex("(5-,0-,1-,1-);(0-,5-,1-,2-)", s4);
    CHECK(st_adjacent4(a, b, y, 0, 1));
    // No crossing in (2,3), hence no (2,3)-adjacency.
    CHECK(!st_adjacent4(a, b, y, 2, 3));
}

TEST_CASE("projections erase one axis and twist the factors to its right") {
    Subcomplex x = parse_subcomplex("(1-,0-,1-,0+);(0-,1+,1-,0+)", s4);
    Subcomplex p = project4(x, 1, 1);
    CHECK(p.sig.arity == 3);
    CHECK(p.sig.twists[1] == 1);
    CHECK(p.sig.twists[2] == 1);
    Signature t3;
    t3.arity = 3;
    t3.twists = {0, 1, 1, 0};
    CHECK(p == parse_subcomplex("(0-,1-,0+)", t3));
}

TEST_CASE("the explicit and definition checkers agree on small products") {
    for (auto caps : {std::vector<int>{1, 1, 1, 0}, std::vector<int>{1, 1, 0, 1}}) {
        Signature s = sig4(caps);
        CellComplex K(s);
        auto mols = oracle_enumerate_molecules(K);
        size_t count = 0;
        for (const Cells& m : mols) {
            Subcomplex capped = K.to_subcomplex(m);
            bool any = false;
            for (const Subcomplex& lift : signed_lifts(capped)) {
                QuadVerdict d = quad_is_pairwise_def(lift);
                QuadVerdict e = quad_is_pairwise_explicit(lift);
                CHECK(d.ok == e.ok);
                any = any || d.ok;
            }
            CHECK(any);
            ++count;
        }
        CHECK(count > 10);
    }
}

TEST_CASE("the explicit checker rejects non-molecules with a reason") {
    Subcomplex c1;
    c1.sig = s4;
    c1.ms = {parse_atom("(1-,0-,0-,0-)", s4), parse_atom("(1-,0-,0-,1-)", s4)};
    CHECK(quad_is_pairwise_explicit(c1).reason == QuadVerdict::Reason::cond1);

    Subcomplex c2 = parse_subcomplex("(1+,0+,0+,0+);(0+,1+,0+,0+)", s4);
    QuadVerdict v = quad_is_pairwise_explicit(c2);
    CHECK(!v.ok);
    CHECK(v.reason == QuadVerdict::Reason::sign);
    CHECK(!quad_is_pairwise_def(c2).ok);

    Subcomplex ok = parse_subcomplex("(1+,0-,0+,0+);(0+,1+,0+,0+)", s4);
    CHECK(quad_is_pairwise_explicit(ok).ok);
    CHECK(quad_is_pairwise_def(ok).ok);
}

TEST_CASE("random low-dimensional agreement between the two checkers") {
    unsigned state = 2024;
    auto rnd = [&](unsigned m) {
        state = state * 1664525u + 1013904223u;
        return (state >> 16) % m;
    };
    for (int trial = 0; trial < 20000; ++trial) {
        Subcomplex x;
        x.sig = s4;
        int n = 1 + static_cast<int>(rnd(3));
        for (int k = 0; k < n; ++k)
            x.ms.push_back(make_atom({{static_cast<int8_t>(rnd(3)), rnd(2) ? plus : minus},
                                      {static_cast<int8_t>(rnd(3)), rnd(2) ? plus : minus},
                                      {static_cast<int8_t>(rnd(3)), rnd(2) ? plus : minus},
                                      {static_cast<int8_t>(rnd(3)), rnd(2) ? plus : minus}}));
        x = normalize(x);
        CHECK(quad_is_pairwise_explicit(x).ok == quad_is_pairwise_def(x).ok);
    }
}

TEST_CASE("boundaries, units and decomposition on a four-factor molecule") {
    Subcomplex x = parse_subcomplex("(1+,0-,0+,0+);(0+,1+,0+,0+)", s4);
    REQUIRE(quad_is_pairwise_explicit(x).ok);
    for (int p = 0; p <= 2; ++p)
        for (Sign g : {minus, plus})
            CHECK(quad_is_pairwise_explicit(quad_d(x, p, g)).ok);
    CHECK(quad_compose(quad_d(x, 0, minus), 0, x) == x);
    ExprPtr e = decompose4(x);
    CHECK(eval_expr(e, s4) == x);
    CHECK(expr_leaf_count(e) == 2);
}

TEST_CASE("every brute-force molecule decomposes and evaluates back") {
    Signature s = sig4({1, 1, 1, 0});
    CellComplex K(s);
    auto mols = oracle_enumerate_molecules(K);
    for (const Cells& m : mols) {
        Subcomplex x = K.to_subcomplex(m);
        ExprPtr e = decompose4(x);
        CHECK(eval_expr(e, s) == x);
    }
}
