#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "gmol/io.hpp"
#include "gmol/oracle.hpp"
#include "gmol/pair.hpp"
#include "gmol/triple.hpp"

using namespace gmol;

namespace {

Signature sig(int arity, std::vector<int> caps = {}) {
    Signature s;
    s.arity = arity;
    if (!caps.empty()) {
        std::array<int8_t, max_arity> cs{};
        for (size_t i = 0; i < caps.size(); ++i) cs[i] = static_cast<int8_t>(caps[i]);
        s.caps = cs;
    }
    return s;
}

const Signature s3 = sig(3);

Subcomplex ten_example() {
    return parse_subcomplex(
        "(8+,2+,1-);(5-,2+,5-);(1-,2+,8+);(9+,1-,2+);(4-,1-,6+);(0+,1+,9+);"
        "(8-,0-,5-);(5-,0+,6+);(4-,0-,7+);(2-,0-,9+)",
        s3);
}

std::set<std::pair<std::string, std::string>> pair_set(
    std::initializer_list<std::pair<const char*, const char*>> ps) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto& p : ps) {
        std::string a = p.first, b = p.second;
        if (b < a) std::swap(a, b);
        out.insert({a, b});
    }
    return out;
}

}  // namespace

TEST_CASE("both checkers accept the ten-atom example") {
    Subcomplex x = ten_example();
    CHECK(triple_is_pairwise_def(x).ok);
    CHECK(triple_is_pairwise_explicit(x).ok);
}

TEST_CASE("the ten-atom example has exactly these seventeen adjacent pairs") {
    // (1-,2+,8+)/(9+,1-,2+) is not adjacent: (5-,2+,5-) dominates the
    // componentwise minima and beats the pair min-sum against both.
    Subcomplex x = ten_example();
    auto expect = pair_set({
        {"(8+,2+,1-)", "(5-,2+,5-)"}, {"(8+,2+,1-)", "(9+,1-,2+)"},
        {"(5-,2+,5-)", "(1-,2+,8+)"}, {"(5-,2+,5-)", "(9+,1-,2+)"},
        {"(5-,2+,5-)", "(4-,1-,6+)"}, {"(5-,2+,5-)", "(8-,0-,5-)"},
        {"(5-,2+,5-)", "(5-,0+,6+)"}, {"(4-,1-,6+)", "(5-,0+,6+)"},
        {"(1-,2+,8+)", "(4-,1-,6+)"}, {"(1-,2+,8+)", "(0+,1+,9+)"},
        {"(1-,2+,8+)", "(2-,0-,9+)"}, {"(9+,1-,2+)", "(8-,0-,5-)"},
        {"(4-,1-,6+)", "(4-,0-,7+)"}, {"(0+,1+,9+)", "(2-,0-,9+)"},
        {"(8-,0-,5-)", "(5-,0+,6+)"}, {"(5-,0+,6+)", "(4-,0-,7+)"},
        {"(4-,0-,7+)", "(2-,0-,9+)"},
    });
    std::set<std::pair<std::string, std::string>> got;
    for (size_t i = 0; i < x.ms.size(); ++i)
        for (size_t j = i + 1; j < x.ms.size(); ++j)
            if (adjacent3(x.ms[i], x.ms[j], x)) {
                std::string a = format_atom(x.ms[i]), b = format_atom(x.ms[j]);
                if (b < a) std::swap(a, b);
                got.insert({a, b});
            }
    CHECK(got == expect);
}

TEST_CASE("coordinate-pair adjacency is weaker than adjacency") {
    Subcomplex x = ten_example();
    Atom a = parse_atom("(5-,2+,5-)", s3);
    Atom b = parse_atom("(4-,0-,7+)", s3);
    CHECK(!adjacent3(a, b, x));
    CHECK(st_adjacent3(a, b, x, 0, 1));
    // Every adjacent pair is (s,t)-adjacent for all s < t.
    for (size_t i = 0; i < x.ms.size(); ++i)
        for (size_t j = i + 1; j < x.ms.size(); ++j)
            if (adjacent3(x.ms[i], x.ms[j], x))
                for (int s = 0; s < 3; ++s)
                    for (int t = s + 1; t < 3; ++t)
                        CHECK(st_adjacent3(x.ms[i], x.ms[j], x, s, t));
}

TEST_CASE("projection-maximal atoms of the ten-atom example") {
    Subcomplex x = ten_example();
    auto maximal = [&](int J) {
        std::vector<std::string> out;
        for (const Atom& a : x.ms)
            if (projection_maximal3(a, x, 1, J)) out.push_back(format_atom(a));
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(maximal(2) == std::vector<std::string>{"(1-,2+,8+)", "(5-,2+,5-)", "(8+,2+,1-)"});
    CHECK(maximal(1) == std::vector<std::string>{"(0+,1+,9+)", "(1-,2+,8+)", "(4-,1-,6+)",
                                                 "(5-,2+,5-)", "(9+,1-,2+)"});
    CHECK(maximal(0) == std::vector<std::string>{"(2-,0-,9+)", "(4-,0-,7+)", "(5-,0+,6+)",
                                                 "(8-,0-,5-)", "(9+,1-,2+)"});
}

TEST_CASE("middle-axis projections of the ten-atom example are pair molecules") {
    Subcomplex x = ten_example();
    Signature twisted = sig(2);
    twisted.twists = {0, 1, 0, 0};
    Subcomplex p1 = project(x, 1, 1);
    CHECK(p1.sig.twists[1] == 1);  // the erased level twists the right factor
    CHECK(p1 == parse_subcomplex("(9+,2+);(5-,5-);(4-,6+);(1-,8+);(0+,9+)", twisted));
    CHECK(pair_is_molecule(p1).ok);
    for (int axis = 0; axis < 3; ++axis) {
        int maxd = 0;
        for (const Atom& a : x.ms) maxd = std::max(maxd, int(a[axis].dim));
        for (int I = 0; I <= maxd; ++I) {
            Subcomplex p = project(x, axis, I);
            if (!p.empty()) CHECK(pair_is_molecule(p).ok);
        }
    }
}

TEST_CASE("explicit checker rejects with the right reason") {
    // Comparable dims.
    Subcomplex c1;
    c1.sig = s3;
    c1.ms = {parse_atom("(1-,1+,0-)", s3), parse_atom("(1-,1+,1+)", s3)};
    CHECK(triple_is_pairwise_explicit(c1).reason == TripleVerdict::Reason::cond1);
    CHECK(triple_is_pairwise_def(c1).reason == TripleVerdict::Reason::cond1);
    // Broken sign link on an adjacent pair.
    Subcomplex c2 = parse_subcomplex("(1+,0+,0+);(0+,0+,1+)", s3);
    TripleVerdict v2 = triple_is_pairwise_explicit(c2);
    CHECK(!v2.ok);
    CHECK(v2.reason == TripleVerdict::Reason::sign);
    CHECK(!triple_is_pairwise_def(c2).ok);
}

TEST_CASE("the two checkers agree on random low-dimensional inputs") {
    // Deterministic LCG; dims <= 2, up to 4 atoms.
    unsigned state = 12345;
    auto rnd = [&](unsigned m) {
        state = state * 1664525u + 1013904223u;
        return (state >> 16) % m;
    };
    int agree = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        Subcomplex x;
        x.sig = s3;
        int n = 1 + static_cast<int>(rnd(4));
        for (int k = 0; k < n; ++k)
            x.ms.push_back(make_atom({{static_cast<int8_t>(rnd(3)), rnd(2) ? plus : minus},
                                      {static_cast<int8_t>(rnd(3)), rnd(2) ? plus : minus},
                                      {static_cast<int8_t>(rnd(3)), rnd(2) ? plus : minus}}));
        x = normalize(x);
        CHECK(triple_is_pairwise_explicit(x).ok == triple_is_pairwise_def(x).ok);
        ++agree;
    }
    CHECK(agree == 20000);
}

TEST_CASE("boundaries and composites of the ten-atom example stay molecular") {
    Subcomplex x = ten_example();
    for (int p = 0; p <= 13; ++p)
        for (Sign g : {minus, plus}) {
            Subcomplex b = triple_d(x, p, g);
            CHECK(triple_is_pairwise_explicit(b).ok);
        }
    // Unit law: composing with the p-source along p is the identity.
    CHECK(triple_compose(triple_d(x, 10, minus), 10, x) == x);
    CHECK(triple_compose(x, 10, triple_d(x, 10, plus)) == x);
}

TEST_CASE("decomposition rebuilds the input expression by expression") {
    Signature cube = sig(3, {1, 1, 1});
    CellComplex K(cube);
    auto mols = oracle_enumerate_molecules(K);
    for (const Cells& m : mols) {
        Subcomplex x = K.to_subcomplex(m);
        ExprPtr e = decompose3(x);
        CHECK(eval_expr(e, cube) == x);
        CHECK(expr_leaf_count(e) >= x.ms.size());
    }
    // A modest signed molecule decomposes too.
    Subcomplex x =
        parse_subcomplex("(0+,0+,2+);(0+,1+,1-);(1+,0-,1-);(1+,1+,0+);(2+,0+,0+)", s3);
    REQUIRE(triple_is_pairwise_def(x).ok);
    ExprPtr e = decompose3(x);
    CHECK(eval_expr(e, s3) == x);
    CHECK(expr_leaf_count(e) >= 5);
}
