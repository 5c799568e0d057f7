#include <catch2/catch_amalgamated.hpp>
#include <homcalc/chain_complex.hpp>
#include <homcalc/space_expr.hpp>
#include <homcalc/space_homology.hpp>

using namespace homcalc;

namespace {

FGAbelianGroup grp(std::size_t rank, std::vector<Int> tors)
{
    return FGAbelianGroup(rank, std::move(tors));
}

GradedGroup graded(std::vector<FGAbelianGroup> gs)
{
    return GradedGroup(std::move(gs));
}

}  // namespace

TEST_CASE("parser and attrs")
{
    SpaceExpr e = parse_space("yzrem(D5, lens(3,1))");
    SpaceAttrs a = e.attrs();
    REQUIRE(a.dim == 5);
    REQUIRE_FALSE(a.closed);
    REQUIRE(a.simply_connected == Certainty::AssertedByPaper);

    SpaceExpr b = parse_space("bcs(prod(S2,D3), prod(S3,D2))");
    SpaceAttrs ba = b.attrs();
    REQUIRE(ba.dim == 5);
    REQUIRE_FALSE(ba.closed);
    REQUIRE(ba.connected);

    REQUIRE(parse_space(" prod( S2 , S3 ) ").attrs().closed);
    REQUIRE(parse_space("lens(7,2)").attrs().dim == 3);
    REQUIRE(parse_space("S3").attrs().simply_connected == Certainty::Yes);
    REQUIRE(parse_space("S1").attrs().simply_connected == Certainty::No);
}

TEST_CASE("parser and validation errors")
{
    REQUIRE_THROWS_AS(parse_space("connsum(lens(2,1), S2)"), ValidationError);
    REQUIRE_THROWS_AS(parse_space("connsum(prod(S2,D3), prod(S2,D3))"), ValidationError);
    REQUIRE_THROWS_AS(parse_space("bcs(S5, S5)"), ValidationError);
    REQUIRE_THROWS_AS(parse_space("yzrem(S4, lens(2,1))"), ValidationError);  // codim 1
    REQUIRE_THROWS_AS(parse_space("yzrem(lens(2,1), S1)"), ValidationError);
    REQUIRE_THROWS_AS(parse_space("lens(4,2)"), ValidationError);
    REQUIRE_THROWS_AS(parse_space("blob(3)"), ParseError);
    REQUIRE_THROWS_AS(parse_space("prod(S2"), ParseError);
    REQUIRE_THROWS_AS(parse_space("S2 S3"), ParseError);
}

TEST_CASE("lens(1,q) normalizes to the 3-sphere")
{
    SpaceExpr e = parse_space("lens(1,1)");
    REQUIRE(e.kind() == SpaceExpr::Kind::Sphere);
    REQUIRE(homology(e) == homology(parse_space("S3")));
}

TEST_CASE("base cases and products")
{
    REQUIRE(homology(parse_space("S4")) == graded({grp(1, {}), {}, {}, {}, grp(1, {})}));
    REQUIRE(homology(parse_space("lens(5,1)")) ==
            graded({grp(1, {}), grp(0, {5}), {}, grp(1, {})}));
    REQUIRE(homology(parse_space("prod(S2,D3)")) == graded({grp(1, {}), {}, grp(1, {})}));
    REQUIRE(homology(parse_space("prod(S2,S3)")) ==
            graded({grp(1, {}), {}, grp(1, {}), grp(1, {}), {}, grp(1, {})}));
    // Kunneth with Tor: torsion appears one degree up in the product with S1.
    REQUIRE(homology(parse_space("prod(lens(3,1),S1)")) ==
            graded({grp(1, {}), grp(1, {3}), grp(0, {3}), grp(1, {}), grp(1, {})}));
}

TEST_CASE("product homology matches the chain-level oracle")
{
    auto cases = {std::pair<const char*, CellModel>{"lens(3,1)", CellModel::lens(3, 1)},
                  std::pair<const char*, CellModel>{"S2", CellModel::sphere(2)},
                  std::pair<const char*, CellModel>{"S1", CellModel::sphere(1)}};
    for (const auto& [ta, ma] : cases)
        for (const auto& [tb, mb] : cases) {
            SpaceExpr e = SpaceExpr::product(parse_space(ta), parse_space(tb));
            REQUIRE(homology(e) == homology(tensor(build(ma), build(mb))));
        }
}

TEST_CASE("product homology is symmetric")
{
    auto exprs = {"S2", "lens(3,1)", "prod(S1,S1)", "D4"};
    for (const char* a : exprs)
        for (const char* b : exprs)
            REQUIRE(homology(SpaceExpr::product(parse_space(a), parse_space(b))) ==
                    homology(SpaceExpr::product(parse_space(b), parse_space(a))));
}

TEST_CASE("connected sums")
{
    REQUIRE(homology(parse_space("connsum(lens(2,1), lens(3,1))")).at(1) == grp(0, {6}));
    // the sphere is the identity
    for (const char* a : {"lens(4,1)", "prod(S1,prod(S1,S1))"}) {
        SpaceExpr e = parse_space(a);
        REQUIRE(homology(SpaceExpr::connSum({e, SpaceExpr::sphere(3)})) == homology(e));
    }
}

TEST_CASE("boundary connected sums")
{
    REQUIRE(homology(parse_space("bcs(prod(S2,D3), prod(S3,D2))")) ==
            graded({grp(1, {}), {}, grp(1, {}), grp(1, {}), {}, {}}));
    // the disc is the identity
    SpaceExpr x = parse_space("prod(S2,D3)");
    REQUIRE(homology(SpaceExpr::boundaryConnSum({x, SpaceExpr::disc(5)})) == homology(x));
}

TEST_CASE("surgery rule rows")
{
    REQUIRE(homology(parse_space("yzrem(D5, lens(3,1))")) ==
            graded({grp(1, {}), {}, grp(0, {3}), {}, grp(1, {}), {}}));
    REQUIRE(homology(parse_space("yzrem(S5, lens(3,1))")) ==
            graded({grp(1, {}), {}, grp(0, {3}), {}, {}, {}}));
    REQUIRE(homology(parse_space("bcs(yzrem(S5, lens(3,1)), prod(S2,D3), prod(S3,D2))")) ==
            graded({grp(1, {}), {}, grp(1, {3}), grp(1, {}), {}, {}}));
}

TEST_CASE("disc and sphere bases differ exactly by one free rank in degree n-1")
{
    for (const char* y : {"lens(2,1)", "lens(9,1)", "connsum(lens(2,1),lens(5,1))", "S3"}) {
        GradedGroup hd = homology(SpaceExpr::yzRemove(SpaceExpr::disc(5), parse_space(y)));
        GradedGroup hs = homology(SpaceExpr::yzRemove(SpaceExpr::sphere(5), parse_space(y)));
        for (int j = 0; j <= 5; ++j) {
            if (j == 4) {
                REQUIRE(direct_complement(hd.at(4), hs.at(4)) == grp(1, {}));
            } else {
                REQUIRE(hd.at(j) == hs.at(j));
            }
        }
    }
}

TEST_CASE("punctured homology")
{
    REQUIRE(punctured_homology(parse_space("lens(4,1)")) ==
            graded({grp(1, {}), grp(0, {4}), {}, {}}));
    REQUIRE(punctured_homology(parse_space("S3")) == graded({grp(1, {}), {}, {}, {}}));
    REQUIRE(punctured_homology(parse_space("connsum(lens(2,1),lens(3,1))")) ==
            graded({grp(1, {}), grp(0, {6}), {}, {}}));
    REQUIRE_THROWS_AS(punctured_homology(parse_space("D3")), ValidationError);
}

TEST_CASE("boundary of the removed piece")
{
    for (int p = 2; p <= 9; ++p) {
        SpaceExpr y = SpaceExpr::lens(p, 1);
        REQUIRE(boundary_E_homology(y, 2) ==
                graded({grp(1, {}), grp(0, {p}), grp(0, {p}), {}, grp(1, {})}));
    }
    REQUIRE(boundary_E_homology(parse_space("S3"), 2) ==
            graded({grp(1, {}), {}, {}, {}, grp(1, {})}));
    REQUIRE(boundary_E_homology(parse_space("connsum(lens(2,1),lens(3,1))"), 2) ==
            graded({grp(1, {}), grp(0, {6}), grp(0, {6}), {}, grp(1, {})}));
    REQUIRE_THROWS_AS(boundary_E_homology(parse_space("lens(2,1)"), 1), ValidationError);
}

TEST_CASE("boundary of the removed piece: duality of a closed oriented manifold")
{
    for (const char* ytext :
         {"lens(2,1)", "lens(7,1)", "S3", "connsum(lens(3,1),lens(4,1))", "prod(S1,S1)"}) {
        SpaceExpr y = parse_space(ytext);
        for (int c = 2; c <= 3; ++c) {
            int n = y.attrs().dim + c;
            GradedGroup h = boundary_E_homology(y, c);
            for (int j = 0; j <= n - 1; ++j) {
                REQUIRE(h.at(j).rank() == h.at(n - 1 - j).rank());
                REQUIRE(torsion(h.at(j)) == torsion(h.at(n - 2 - j)));
            }
        }
    }
}

TEST_CASE("boundary rule decomposes into shifted punctured pieces")
{
    for (const char* ytext : {"lens(5,1)", "connsum(lens(2,1),lens(2,1))", "S3"}) {
        SpaceExpr y = parse_space(ytext);
        for (int c = 2; c <= 4; ++c) {
            int d = y.attrs().dim;
            int n = d + c;
            GradedGroup ce = punctured_homology(y);
            GradedGroup h = boundary_E_homology(y, c);
            for (int j = 1; j < n - 1; ++j) {
                FGAbelianGroup expect = ce.at(j);
                if (j - (c - 1) >= 1)
                    expect = direct_sum(expect, ce.at(j - (c - 1)));
                REQUIRE(h.at(j) == expect);
            }
        }
    }
}

TEST_CASE("splitting of the boundary across the surgery complement")
{
    // H_j(dE) = H_j(CE) + H_j(complement) in the interior degrees.
    for (const char* ytext : {"lens(3,1)", "lens(8,1)", "connsum(lens(2,1),lens(3,1))", "S3"}) {
        SpaceExpr y = parse_space(ytext);
        int n = 5;
        int c = n - y.attrs().dim;
        GradedGroup de = boundary_E_homology(y, c);
        GradedGroup ce = punctured_homology(y);
        GradedGroup comp = homology(SpaceExpr::yzRemove(SpaceExpr::disc(5), y));
        for (int j = 1; j <= n - 2; ++j)
            REQUIRE(direct_complement(de.at(j), ce.at(j)) == comp.at(j));
    }
}

TEST_CASE("kunneth split")
{
    GradedGroup lens_h = homology(parse_space("lens(5,1)"));
    KunnethSplit s = kunneth_split(lens_h, 1, 2);
    REQUIRE(s.base_part.isTrivial());
    REQUIRE(s.fiber_part == grp(0, {5}));
    REQUIRE(kunneth_split(lens_h, 1, 0).base_part == grp(1, {}));
    REQUIRE(kunneth_split(lens_h, 1, 0).fiber_part.isTrivial());

    GradedGroup s2 = homology(parse_space("S2"));
    KunnethSplit t = kunneth_split(s2, 2, 2);
    REQUIRE(t.base_part == grp(1, {}));
    REQUIRE(t.fiber_part == grp(1, {}));
    // whole-group consistency against the product rule
    for (int i = 0; i <= 4; ++i) {
        KunnethSplit u = kunneth_split(s2, 2, i);
        REQUIRE(direct_sum(u.base_part, u.fiber_part) ==
                homology(parse_space("prod(S2,S2)")).at(i));
    }
}

TEST_CASE("relative reading disagrees with the absolute rule only at degree n-2")
{
    for (int p = 2; p <= 9; ++p) {
        SpaceExpr y = SpaceExpr::lens(p, 1);
        int n = 5;
        GradedGroup abs_rule = boundary_E_homology(y, 2);
        GradedGroup rel_rule = boundary_E_relative_reading(y, 2);
        for (int j = 0; j <= n - 1; ++j) {
            if (j == n - 2) {
                REQUIRE(rel_rule.at(j) == grp(1, {}));
                REQUIRE(abs_rule.at(j).isTrivial());
            } else {
                REQUIRE(rel_rule.at(j) == abs_rule.at(j));
            }
        }
    }
}
