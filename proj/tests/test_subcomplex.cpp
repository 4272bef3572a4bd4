#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gmol/io.hpp"
#include "gmol/oracle.hpp"
#include "gmol/subcomplex.hpp"

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

}  // namespace

TEST_CASE("normalize removes dominated atoms and duplicates, sorts canonically") {
    Subcomplex x = normalize(s3, {parse_atom("(1-,1+,0-)", s3), parse_atom("(0-,1+,0-)", s3),
                                  parse_atom("(1-,1+,0-)", s3), parse_atom("(2+,0-,0-)", s3)});
    CHECK(format_subcomplex(x) == "(1-,1+,0-);(2+,0-,0-)");
}

TEST_CASE("union, intersection and containment") {
    Signature cube = sig(3, {1, 1, 1});
    Subcomplex a = parse_subcomplex("(1*,1*,0-);(0+,1*,1*)", cube);
    Subcomplex b = parse_subcomplex("(1*,1*,0-);(1*,0+,1*)", cube);
    CHECK(format_subcomplex(sub_union(a, b)) == "(0+,1*,1*);(1*,0+,1*);(1*,1*,0-)");
    CHECK(sub_intersect(a, b) ==
          parse_subcomplex("(1*,1*,0-);(0+,0+,1*)", cube));
    CHECK(sub_contains(sub_union(a, b), a));
    CHECK(!sub_contains(a, b));
    CHECK(sub_contains_atom(a, parse_atom("(0+,1*,0-)", cube)));
    CHECK(!sub_contains_atom(a, parse_atom("(1*,0-,0+)", cube)));
}

TEST_CASE("union/intersection agree with the brute-force cell sets") {
    Signature s = sig(2, {2, 2});
    CellComplex K(s);
    std::vector<Subcomplex> pool;
    for (size_t i = 0; i < K.size(); ++i)
        for (size_t j = 0; j < K.size(); ++j)
            pool.push_back(K.to_subcomplex(K.down(i) | K.down(j)));
    for (size_t i = 0; i < pool.size(); i += 7)
        for (size_t j = 0; j < pool.size(); j += 5) {
            Cells ci = K.to_cells(pool[i]), cj = K.to_cells(pool[j]);
            CHECK(sub_union(pool[i], pool[j]) == K.to_subcomplex(ci | cj));
            CHECK(sub_intersect(pool[i], pool[j]) == K.to_subcomplex(ci & cj));
        }
}

TEST_CASE("condition 1: no comparable dimension sequences among maximal atoms") {
    CHECK(is_condition1(ten_example()));
    Subcomplex bad;
    bad.sig = s3;
    bad.ms = {parse_atom("(1-,1+,0-)", s3), parse_atom("(2+,1+,0-)", s3)};
    auto v = condition1_violation(bad);
    REQUIRE(v.has_value());
    CHECK(min_sum(v->first, v->second) == 2);
}

TEST_CASE("n-source and n-target of the ten-atom example") {
    Subcomplex x = ten_example();
    CHECK(sub_dim(x) == 13);
    // At or above every maximal dimension both boundaries return the input.
    CHECK(sub_d(x, 13, minus) == x);
    CHECK(sub_d(x, 13, plus) == x);
    // Globularity: d_p d_q = d_p for p < q, and d_p fixes p-dimensional input.
    for (int q = 0; q <= 13; ++q)
        for (Sign g : {minus, plus}) {
            for (int p = 0; p < q; ++p)
                for (Sign h : {minus, plus})
                    CHECK(sub_d(sub_d(x, q, h), p, g) == sub_d(x, p, g));
            CHECK(sub_d(sub_d(x, q, g), q, g) == sub_d(x, q, g));
        }
}

TEST_CASE("boundaries agree with the brute-force complex on every molecule") {
    Signature s = sig(3, {1, 1, 1});
    CellComplex K(s);
    auto mols = oracle_enumerate_molecules(K);
    for (const Cells& m : mols) {
        Subcomplex x = K.to_subcomplex(m);
        for (int p = 0; p <= 3; ++p)
            for (Sign g : {minus, plus})
                CHECK(sub_d(x, p, g) == K.to_subcomplex(K.d(m, p, g)));
    }
}

TEST_CASE("composition requires matching boundaries") {
    Signature s2 = sig(2);
    Subcomplex lhs = parse_subcomplex("(5-,0+);(4-,2+);(2-,3-);(1-,4+);(0-,5+)", s2);
    Subcomplex rhs = parse_subcomplex("(6+,0-);(5-,1+);(3+,2+);(2-,4+);(0-,5+)", s2);
    CHECK(sub_d(lhs, 5, plus) == sub_d(rhs, 5, minus));
    Subcomplex comp = sub_compose(lhs, 5, rhs);
    CHECK(comp == parse_subcomplex("(6+,0-);(5-,1+);(4-,2+);(2-,4+);(0-,5+)", s2));
    CHECK_THROWS_AS(sub_compose(rhs, 5, lhs), std::invalid_argument);
    CHECK_THROWS_AS(sub_compose(lhs, 4, rhs), std::invalid_argument);
}

TEST_CASE("frame dimension is the largest pairwise min-sum") {
    Subcomplex x = ten_example();
    CHECK(frame_dim(x) == 10);
    int expect = 0;
    for (size_t i = 0; i < x.ms.size(); ++i)
        for (size_t j = i + 1; j < x.ms.size(); ++j)
            expect = std::max(expect, min_sum(x.ms[i], x.ms[j]));
    CHECK(frame_dim(x) == expect);
    Signature s2 = sig(2);
    CHECK(frame_dim(parse_subcomplex("(2-,0+);(0-,1+)", s2)) == 0);
    CHECK(frame_dim(parse_subcomplex("(2-,1+);(1-,2+)", s2)) == 2);
    Subcomplex one;
    one.sig = s2;
    one.ms = {parse_atom("(2-,0+)", s2)};
    CHECK_THROWS(frame_dim(one));
}
