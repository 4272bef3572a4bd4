// Command-line front end: molecule checking, boundaries, composition,
// decomposition, projection, enumeration and the brute-force oracle over
// products of globes.  Exit code 0 = affirmative, 1 = negative verdict,
// 2 = input error.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gmol/core.hpp"
#include "gmol/enumerate.hpp"
#include "gmol/expr.hpp"
#include "gmol/io.hpp"
#include "gmol/oracle.hpp"
#include "gmol/pair.hpp"
#include "gmol/quad.hpp"
#include "gmol/subcomplex.hpp"
#include "gmol/triple.hpp"

using namespace gmol;

namespace {

struct SigFlags {
    int factors = 0;
    std::vector<int> twists;
    std::vector<int> caps;

    void attach(CLI::App* cmd, bool caps_required = false) {
        cmd->add_option("--factors", factors, "number of globe factors")->required();
        cmd->add_option("--twists", twists, "twist parities, one per factor")->delimiter(',');
        auto* c = cmd->add_option("--caps", caps, "dimension caps, one per factor")->delimiter(',');
        if (caps_required) c->required();
    }

    Signature make() const {
        if (factors < 1 || factors > max_arity)
            throw CLI::ValidationError("--factors must be between 1 and 4");
        Signature sig;
        sig.arity = factors;
        if (!twists.empty()) {
            if (static_cast<int>(twists.size()) != factors)
                throw CLI::ValidationError("--twists must list one parity per factor");
            for (int f = 0; f < factors; ++f)
                sig.twists[static_cast<size_t>(f)] = static_cast<int8_t>(twists[static_cast<size_t>(f)] & 1);
        }
        if (!caps.empty()) {
            if (static_cast<int>(caps.size()) != factors)
                throw CLI::ValidationError("--caps must list one cap per factor");
            std::array<int8_t, max_arity> cs{};
            for (int f = 0; f < factors; ++f) {
                if (caps[static_cast<size_t>(f)] < 0) throw CLI::ValidationError("caps must be nonnegative");
                cs[static_cast<size_t>(f)] = static_cast<int8_t>(caps[static_cast<size_t>(f)]);
            }
            sig.caps = cs;
        }
        return sig;
    }
};

const char* to_string(PairVerdict::Reason r) {
    switch (r) {
        case PairVerdict::Reason::none: return "none";
        case PairVerdict::Reason::staircase: return "staircase";
        case PairVerdict::Reason::sign_link: return "sign-link";
    }
    return "?";
}

// Molecule verdict for a signed subcomplex of any supported arity.
std::pair<bool, std::string> signed_verdict(const Subcomplex& x) {
    switch (x.sig.arity) {
        case 1:
            if (x.ms.size() == 1) return {true, ""};
            return {false, x.empty() ? "empty" : "cond1"};
        case 2: {
            PairVerdict v = pair_is_molecule(x);
            return {v.ok, v.ok ? "" : to_string(v.reason)};
        }
        case 3: {
            TripleVerdict v = triple_is_pairwise_explicit(x);
            return {v.ok, v.ok ? "" : to_string(v.reason)};
        }
        default: {
            QuadVerdict v = quad_is_pairwise_explicit(x);
            return {v.ok, v.ok ? "" : to_string(v.reason)};
        }
    }
}

std::pair<bool, std::string> verdict(const Subcomplex& x) {
    if (x.empty()) return {false, "empty"};
    bool has_top = false;
    for (const Atom& a : x.ms)
        for (int f = 0; f < a.arity; ++f) has_top |= a[f].sign == top;
    if (!has_top) return {signed_verdict(x)};
    // Capped subcomplex: a molecule iff some signed lift is one.
    std::string reason;
    for (const Subcomplex& lift : signed_lifts(x)) {
        auto [ok, why] = signed_verdict(lift);
        if (ok) return {true, ""};
        reason = why;
    }
    return {false, reason};
}

void print_catalog(const std::vector<Subcomplex>& entries, const std::string& out_path) {
    if (out_path.empty()) {
        for (const std::string& line : catalog_lines(entries)) std::cout << line << "\n";
    } else {
        write_catalog(out_path, entries);
    }
}

std::vector<Subcomplex> sorted_oracle_molecules(const CellComplex& K) {
    std::vector<Subcomplex> entries;
    for (const Cells& m : oracle_enumerate_molecules(K)) entries.push_back(K.to_subcomplex(m));
    std::sort(entries.begin(), entries.end(), [](const Subcomplex& a, const Subcomplex& b) {
        return format_subcomplex(a) < format_subcomplex(b);
    });
    return entries;
}

// ---------------------------------------------------------------------
// verify-paper-examples: the worked examples reproduced from the source
// material, one pass/fail line each.

int run_verify() {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   - " : "FAIL - ") << name << "\n";
        if (!ok) ++failures;
    };

    Signature s3;  // three untwisted unbounded globes
    s3.arity = 3;
    Signature s2;
    s2.arity = 2;
    Signature cube;
    cube.arity = 3;
    cube.caps = std::array<int8_t, max_arity>{1, 1, 1, 0};
    Signature cyl;  // u_2 x v_1
    cyl.arity = 2;
    cyl.caps = std::array<int8_t, max_arity>{2, 1, 0, 0};

    const Subcomplex ten = parse_subcomplex(
        "(8+,2+,1-);(5-,2+,5-);(1-,2+,8+);(9+,1-,2+);(4-,1-,6+);"
        "(0+,1+,9+);(8-,0-,5-);(5-,0+,6+);(4-,0-,7+);(2-,0-,9+)",
        s3);

    try {
        // Single atoms and containment.
        check("atom dimension (8+,2+,1-) = 11", atom_dim(parse_atom("(8+,2+,1-)", s3)) == 11);
        check("edge of the cube lies in its square",
              atom_contains(parse_atom("(1*,1*,0-)", cube), parse_atom("(0-,1*,0-)", cube)));

        // Boundaries of single atoms.
        check("cube source boundary",
              atom_boundary(parse_atom("(1*,1*,1*)", cube), minus, cube) ==
                  parse_subcomplex("(0-,1*,1*);(1*,0+,1*);(1*,1*,0-)", cube));
        check("cylinder source boundary",
              atom_boundary(parse_atom("(2*,1*)", cyl), minus, cyl) ==
                  parse_subcomplex("(1-,1*);(2*,0-)", cyl));

        // Intersections.
        check("square intersection is an edge",
              atom_intersect(parse_atom("(1*,1*,0-)", cube), parse_atom("(0-,1*,1*)", cube), cube) ==
                  parse_subcomplex("(0-,1*,0-)", cube));
        check("edge intersection is a vertex",
              atom_intersect(parse_atom("(1*,0-,0-)", cube), parse_atom("(0-,1*,0-)", cube), cube) ==
                  parse_subcomplex("(0-,0-,0-)", cube));

        // Normalization and union.
        check("ten-atom example already normalized", normalize(ten).ms.size() == 10);
        const Subcomplex item31 = parse_subcomplex("(1*,0+,1*);(1*,1*,0-)", cube);
        check("union of two squares of the cube",
              sub_union(parse_subcomplex("(1*,1*,0-)", cube), parse_subcomplex("(1*,0+,1*)", cube)) ==
                  item31);
        check("cube list item contains edge",
              sub_contains_atom(item31, parse_atom("(0-,1*,0-)", cube)));

        // Condition 1.
        check("ten-atom example satisfies condition 1", is_condition1(ten));
        check("equal-dimension counterexample violates condition 1",
              !is_condition1(parse_subcomplex("(1+,1+,1+);(1+,1-,1-);(1-,1+,1-);(1-,1-,1+)", s3)));

        // Two-factor worked example.
        const Subcomplex lo = parse_subcomplex("(5-,0+);(4-,2+);(2-,3-);(1-,4+);(0-,5+)", s2);
        const Subcomplex hi = parse_subcomplex("(6+,0-);(5-,1+);(3+,2+);(2-,4+);(0-,5+)", s2);
        const Subcomplex mid =
            parse_subcomplex("(5-,0+);(4-,1+);(3+,2+);(2-,3-);(1-,4+);(0-,5+)", s2);
        check("two-factor staircase is a molecule", pair_is_molecule(lo).ok);
        check("two-factor 5-target", pair_d(lo, 5, plus) == mid);
        check("two-factor 5-source of the other side", pair_d(hi, 5, minus) == mid);
        check("two-factor intersection equals the shared boundary", sub_intersect(lo, hi) == mid);
        check("two-factor composite",
              pair_compose(lo, 5, hi) ==
                  parse_subcomplex("(6+,0-);(5-,1+);(4-,2+);(2-,4+);(0-,5+)", s2));

        // Projections of the ten-atom example.
        Signature s2t;  // u x w^1
        s2t.arity = 2;
        s2t.twists = {0, 1, 0, 0};
        check("middle projection at level 1",
              project(ten, 1, 1) ==
                  parse_subcomplex("(9+,2+);(5-,5-);(4-,6+);(1-,8+);(0+,9+)", s2t));
        check("middle projection above the top level is empty", project(ten, 1, 3).empty());

        // Pairwise molecularity, both characterizations.
        check("ten-atom example passes the explicit checker", triple_is_pairwise_explicit(ten).ok);
        check("ten-atom example passes the projection checker", triple_is_pairwise_def(ten).ok);
        check("counterexample fails with cond1",
              triple_is_pairwise_explicit(
                  parse_subcomplex("(1+,1+,1+);(1+,1-,1-);(1-,1+,1-);(1-,1-,1+)", s3))
                      .reason == TripleVerdict::Reason::cond1);

        // Adjacency.
        check("(8+,2+,1-) adjacent to (5-,2+,5-)",
              adjacent3(parse_atom("(8+,2+,1-)", s3), parse_atom("(5-,2+,5-)", s3), ten));
        check("(5-,2+,5-) not adjacent to (4-,0-,7+)",
              !adjacent3(parse_atom("(5-,2+,5-)", s3), parse_atom("(4-,0-,7+)", s3), ten));
        check("but the same pair is (1,2)-adjacent",
              st_adjacent3(parse_atom("(5-,2+,5-)", s3), parse_atom("(4-,0-,7+)", s3), ten, 0, 1));
        check("(8+,2+,1-) not adjacent to (1-,2+,8+)",
              !adjacent3(parse_atom("(8+,2+,1-)", s3), parse_atom("(1-,2+,8+)", s3), ten));

        // Projection-maximal atoms.
        check("(8+,2+,1-) is (v,2)-projection maximal",
              projection_maximal3(parse_atom("(8+,2+,1-)", s3), ten, 1, 2));
        check("(8+,2+,1-) is not (v,1)-projection maximal",
              !projection_maximal3(parse_atom("(8+,2+,1-)", s3), ten, 1, 1));

        // Naturality of projection with boundaries, p = 10, J = 1.
        bool natural = true;
        for (Sign g : {minus, plus})
            natural &= project(sub_d(ten, 10, g), 1, 1) == sub_d(project(ten, 1, 1), 9, g);
        check("projection commutes with the 10-boundaries", natural);

        // Composition of the cube list item from its four parts.
        ExprPtr tree = MoleculeExpr::make_node(
            MoleculeExpr::make_node(MoleculeExpr::make_leaf(parse_atom("(0-,1*,0-)", cube)), 0,
                                    MoleculeExpr::make_leaf(parse_atom("(1*,0+,1*)", cube))),
            1,
            MoleculeExpr::make_node(MoleculeExpr::make_leaf(parse_atom("(1*,1*,0-)", cube)), 0,
                                    MoleculeExpr::make_leaf(parse_atom("(0+,0+,1*)", cube))));
        check("cube list item composed from four atoms", eval_expr(tree, cube) == item31);

        // Decomposition of a signed lift of the same item.
        {
            bool ok = false;
            for (const Subcomplex& lift : signed_lifts(item31)) {
                if (!triple_is_pairwise_def(lift).ok) continue;
                ExprPtr t = decompose3(lift);
                ok = expr_leaf_count(t) == 4 && eval_expr(t, lift.sig) == lift;
                break;
            }
            check("signed lift decomposes into four atoms", ok);
        }

        // Level-by-level validation and construction.
        check("ten-atom example validates level by level",
              validate_maximal_atom_set(ten.ms, s3).ok);
        {
            Signature caps3 = cube;
            LevelState one{0, {parse_atom("(1-,1+,1-)", s3)}, caps3};
            bool has_empty = false;
            for (const LevelChoice& c : next_level_choices(one)) has_empty |= c.atoms.empty();
            check("single lowest atom permits an empty level", has_empty);
            LevelState two{0, parse_subcomplex("(1-,1+,0-);(0-,1+,1+)", s3).ms, caps3};
            bool none_empty = true;
            for (const LevelChoice& c : next_level_choices(two)) none_empty &= !c.atoms.empty();
            check("two lowest atoms force an atom at the level", none_empty);
        }

        // The 57 molecules of the cube, by construction and by oracle.
        std::vector<Subcomplex> cat = enumerate3(1, 1, 1, EnumMode::capped);
        check("constructed cube catalog has 57 entries", cat.size() == 57);
        CellComplex K(cube);
        check("cube complex has 27 atoms", K.size() == 27);
        std::vector<Subcomplex> ocat = sorted_oracle_molecules(K);
        check("oracle cube catalog has 57 entries", ocat.size() == 57);
        check("catalogs agree",
              catalog_lines(cat) == catalog_lines(ocat));
        check("oracle source boundary of the cube",
              K.d(K.to_cells(parse_subcomplex("(1*,1*,1*)", cube)), 2, minus) ==
                  K.to_cells(parse_subcomplex("(0-,1*,1*);(1*,0+,1*);(1*,1*,0-)", cube)));
        check("cube list item is an oracle molecule", oracle_is_molecule(K, K.to_cells(item31)));

        CellComplex C(cyl);
        check("cylinder complex has 15 atoms", C.size() == 15);
        check("oracle source boundary of the cylinder",
              C.d(C.to_cells(parse_subcomplex("(2*,1*)", cyl)), 2, minus) ==
                  C.to_cells(parse_subcomplex("(1-,1*);(2*,0-)", cyl)));

        // Non-adjacent coordinate pair in four factors.
        {
            Signature s4;
            s4.arity = 4;
            Subcomplex q = parse_subcomplex("(5-,0-,1-,1-);(0-,5-,1-,2-);(1-,1-,2-,1-)", s4);
            Atom lam = parse_atom("(5-,0-,1-,1-)", s4);
            Atom mu = parse_atom("(0-,5-,1-,2-)", s4);
            check("blocking atom kills (1,2)-adjacency", !st_adjacent4(lam, mu, q, 0, 1));
            Subcomplex q2 = parse_subcomplex("(5-,0-,1-,1-);(0-,5-,1-,2-)", s4);
            check("without it the pair is (1,2)-adjacent", st_adjacent4(lam, mu, q2, 0, 1));
        }

        // Round trips.
        check("serialization round trip",
              parse_subcomplex(format_subcomplex(ten), s3) == ten);
        {
            std::string path = "/tmp/gmol_catalog_roundtrip.txt";
            write_catalog(path, cat);
            bool ok = read_catalog(path, cube) == cat;
            std::remove(path.c_str());
            check("catalog file round trip", ok);
        }
    } catch (const std::exception& e) {
        std::cout << "FAIL - unexpected error: " << e.what() << "\n";
        ++failures;
    }

    if (failures == 0) {
        std::cout << "all examples pass\n";
        return 0;
    }
    std::cout << failures << " example(s) failed\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"molecules in products of globes"};
    app.require_subcommand(1);

    SigFlags chk_sig, bnd_sig, src_sig, tgt_sig, cmp_sig, dec_sig, prj_sig, ochk_sig, oenum_sig;
    std::string chk_in, bnd_in, src_in, tgt_in, cmp_a, cmp_b, dec_in, prj_in, ochk_in;
    std::string bnd_sign = "-", mode = "capped", out_path;
    int level = 0, axis = 0;
    std::vector<int> ecaps;

    auto* chk = app.add_subcommand("check", "molecule verdict for a subcomplex");
    chk_sig.attach(chk);
    chk->add_option("subcomplex", chk_in)->required();

    auto* bnd = app.add_subcommand("boundary", "boundary of a single atom");
    bnd_sig.attach(bnd);
    bnd->add_option("-g,--sign", bnd_sign, "- or +");
    bnd->add_option("atom", bnd_in)->required();

    auto* src = app.add_subcommand("source", "n-source of a subcomplex");
    src_sig.attach(src);
    src->add_option("-p,--level", level)->required();
    src->add_option("subcomplex", src_in)->required();

    auto* tgt = app.add_subcommand("target", "n-target of a subcomplex");
    tgt_sig.attach(tgt);
    tgt->add_option("-p,--level", level)->required();
    tgt->add_option("subcomplex", tgt_in)->required();

    auto* cmp = app.add_subcommand("compose", "compose two subcomplexes at a level");
    cmp_sig.attach(cmp);
    cmp->add_option("-p,--level", level)->required();
    cmp->add_option("left", cmp_a)->required();
    cmp->add_option("right", cmp_b)->required();

    auto* dec = app.add_subcommand("decompose", "expression tree of a molecule");
    dec_sig.attach(dec);
    dec->add_option("subcomplex", dec_in)->required();

    auto* prj = app.add_subcommand("project", "erase one factor at a level");
    prj_sig.attach(prj);
    prj->add_option("--axis", axis, "factor to erase (0-based)")->required();
    prj->add_option("--level", level, "projection level")->required();
    prj->add_option("subcomplex", prj_in)->required();

    auto* enm = app.add_subcommand("enumerate", "all molecules of a capped triple product");
    enm->add_option("--caps", ecaps)->delimiter(',')->required();
    enm->add_option("--mode", mode)->check(CLI::IsMember({"signed", "capped"}));
    enm->add_option("-o,--output", out_path, "catalog file (stdout when absent)");

    auto* oen = app.add_subcommand("oracle-enumerate", "brute-force molecule enumeration");
    oenum_sig.attach(oen, /*caps_required=*/true);
    oen->add_option("-o,--output", out_path, "catalog file (stdout when absent)");

    auto* ock = app.add_subcommand("oracle-check", "brute-force molecule verdict");
    ochk_sig.attach(ock, /*caps_required=*/true);
    ock->add_option("subcomplex", ochk_in)->required();

    app.add_subcommand("verify-paper-examples", "run the documented worked examples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (chk->parsed()) {
            Subcomplex x = parse_subcomplex(chk_in, chk_sig.make());
            auto [ok, why] = verdict(x);
            if (ok) {
                std::cout << "molecule\n";
                return 0;
            }
            std::cout << "not-molecule: " << why << "\n";
            return 1;
        }
        if (bnd->parsed()) {
            if (bnd_sign != "-" && bnd_sign != "+") throw ParseError("sign must be - or +", 0);
            Signature sig = bnd_sig.make();
            Atom a = parse_atom(bnd_in, sig);
            std::cout << format_subcomplex(atom_boundary(a, bnd_sign == "-" ? minus : plus, sig))
                      << "\n";
            return 0;
        }
        if (src->parsed()) {
            std::cout << format_subcomplex(sub_d(parse_subcomplex(src_in, src_sig.make()), level, minus))
                      << "\n";
            return 0;
        }
        if (tgt->parsed()) {
            std::cout << format_subcomplex(sub_d(parse_subcomplex(tgt_in, tgt_sig.make()), level, plus))
                      << "\n";
            return 0;
        }
        if (cmp->parsed()) {
            Signature sig = cmp_sig.make();
            Subcomplex a = parse_subcomplex(cmp_a, sig);
            Subcomplex b = parse_subcomplex(cmp_b, sig);
            try {
                std::cout << format_subcomplex(sub_compose(a, level, b)) << "\n";
            } catch (const std::invalid_argument& e) {
                std::cout << "not-composable: " << e.what() << "\n";
                return 1;
            }
            return 0;
        }
        if (dec->parsed()) {
            Subcomplex x = parse_subcomplex(dec_in, dec_sig.make());
            auto [ok, why] = verdict(x);
            if (!ok) {
                std::cout << "not-molecule: " << why << "\n";
                return 1;
            }
            ExprPtr t;
            switch (x.sig.arity) {
                case 3: t = decompose3(x); break;
                case 4: t = decompose4(x); break;
                default: t = decompose_subcomplex(x); break;
            }
            std::cout << format_expr(t) << "\n";
            return 0;
        }
        if (prj->parsed()) {
            std::cout << format_subcomplex(project(parse_subcomplex(prj_in, prj_sig.make()), axis, level))
                      << "\n";
            return 0;
        }
        if (enm->parsed()) {
            if (ecaps.size() != 3) throw ParseError("enumerate needs exactly three caps", 0);
            print_catalog(enumerate3(ecaps[0], ecaps[1], ecaps[2],
                                     mode == "signed" ? EnumMode::signed_atoms : EnumMode::capped),
                          out_path);
            return 0;
        }
        if (oen->parsed()) {
            CellComplex K(oenum_sig.make());
            print_catalog(sorted_oracle_molecules(K), out_path);
            return 0;
        }
        if (ock->parsed()) {
            Signature sig = ochk_sig.make();
            CellComplex K(sig);
            Subcomplex x = parse_subcomplex(ochk_in, sig);
            if (oracle_is_molecule(K, K.to_cells(x))) {
                std::cout << "molecule\n";
                return 0;
            }
            std::cout << "not-molecule\n";
            return 1;
        }
        return run_verify();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
