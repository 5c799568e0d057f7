#include <random>

#include <catch2/catch_amalgamated.hpp>
#include <homcalc/realize.hpp>
#include <homcalc/space_homology.hpp>

using namespace homcalc;

namespace {

FGAbelianGroup grp(std::size_t rank, std::vector<Int> tors)
{
    return FGAbelianGroup(rank, std::move(tors));
}

RealizationTarget target(FGAbelianGroup g, std::size_t r1, std::size_t r2)
{
    return {std::move(g), r1, r2};
}

}  // namespace

TEST_CASE("plan: worked examples")
{
    Recipe r = plan(target(grp(2, {3}), 1, 0));
    REQUIRE(r.assembled.toString() ==
            "bcs(yzrem(S5,lens(3,1)),prod(S2,D3),prod(S2,D3),prod(S3,D2))");

    REQUIRE(plan(target(grp(0, {}), 0, 0)).assembled.toString() == "D5");

    Recipe rp = plan(target(grp(0, {2, 4}), 0, 1), PlanMode::Paper);
    REQUIRE(rp.assembled.toString() == "bcs(yzrem(D5,connsum(lens(2,1),lens(4,1))))");
}

TEST_CASE("verify: pass and fail rows")
{
    RealizationTarget t = target(grp(2, {3}), 1, 0);
    VerifyReport rep = verify(plan(t), t);
    REQUIRE(rep.pass);
    REQUIRE(rep.computed ==
            GradedGroup({grp(1, {}), {}, grp(2, {3}), grp(1, {}), {}, {}}));

    RealizationTarget empty = target(grp(0, {}), 0, 0);
    REQUIRE(verify(plan(empty), empty).pass);

    // deliberately wrong recipe: drop one product piece
    Recipe broken = plan(t);
    broken.pieces.pop_back();
    broken.pieces.erase(broken.pieces.begin() + 1);
    broken.assembled = SpaceExpr::boundaryConnSum(broken.pieces);
    VerifyReport bad = verify(broken, t);
    REQUIRE_FALSE(bad.pass);
    REQUIRE_FALSE(bad.degree_ok[2]);
}

TEST_CASE("round trip over sampled targets, both modes")
{
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> nfac(0, 4), fac(2, 16), rk(0, 5);
    for (int iter = 0; iter < 100; ++iter) {
        // enforce the divisibility chain by stacking multiples
        std::vector<Int> factors;
        Int cur(1);
        int n = nfac(rng);
        for (int i = 0; i < n; ++i) {
            cur *= fac(rng);
            factors.push_back(cur);
        }
        RealizationTarget t = target(FGAbelianGroup(static_cast<std::size_t>(rk(rng)), factors),
                                     static_cast<std::size_t>(rk(rng)),
                                     static_cast<std::size_t>(rk(rng)));
        for (PlanMode mode : {PlanMode::Default, PlanMode::Paper}) {
            Recipe r = plan(t, mode);
            REQUIRE(verify(r, t).pass);
        }
        // both modes agree degree by degree
        REQUIRE(homology(plan(t, PlanMode::Default).assembled) ==
                homology(plan(t, PlanMode::Paper).assembled));
    }
}

TEST_CASE("planner outputs satisfy the freeness constraint in degrees 3 and 4")
{
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> fac(2, 12), rk(0, 3);
    for (int iter = 0; iter < 40; ++iter) {
        RealizationTarget t = target(grp(static_cast<std::size_t>(rk(rng)), {fac(rng)}),
                                     static_cast<std::size_t>(rk(rng)),
                                     static_cast<std::size_t>(rk(rng)));
        for (PlanMode mode : {PlanMode::Default, PlanMode::Paper})
            REQUIRE(nishioka_check(homology(plan(t, mode).assembled), 5));
    }
}

TEST_CASE("nishioka_check fixtures")
{
    REQUIRE(nishioka_check(
        GradedGroup({grp(1, {}), {}, grp(1, {3}), grp(1, {}), grp(2, {}), {}}), 5));
    REQUIRE_FALSE(nishioka_check(
        GradedGroup({grp(1, {}), {}, grp(0, {3}), grp(0, {3}), grp(1, {}), {}}), 5));
    REQUIRE_FALSE(nishioka_check(
        GradedGroup({grp(1, {}), {}, grp(0, {3}), {}, grp(1, {})}), 4));
}

TEST_CASE("sgm_candidate_check")
{
    REQUIRE(sgm_candidate_check(
        GradedGroup({grp(1, {}), {}, grp(2, {}), grp(2, {}), {}, grp(1, {})})));
    REQUIRE_FALSE(sgm_candidate_check(
        GradedGroup({grp(1, {}), {}, grp(0, {3}), {}, {}, grp(1, {})})));
    REQUIRE(sgm_candidate_check(
        GradedGroup({grp(1, {}), {}, {}, {}, {}, grp(1, {})})));
    REQUIRE_FALSE(sgm_candidate_check(
        GradedGroup({grp(1, {}), {}, grp(2, {}), grp(1, {}), {}, grp(1, {})})));
}

TEST_CASE("lift descriptor")
{
    Recipe r = plan(target(grp(0, {3}), 0, 0));
    SpecialGenericDescriptor d = lift(r.assembled, 8);
    REQUIRE(d.n == 5);
    REQUIRE(d.predicted ==
            GradedGroup({grp(1, {}), {}, grp(0, {3}), {}}));
    REQUIRE(d.predicted.topDegree() == 3);  // never above m - n
    REQUIRE(d.singular_set_dim == 4);

    SpecialGenericDescriptor d5 = lift(SpaceExpr::disc(5), 6);
    REQUIRE(d5.predicted == GradedGroup({grp(1, {}), {}}));

    SpecialGenericDescriptor w = lift(parse_space("bcs(prod(S2,D3))"), 7);
    REQUIRE(w.predicted == GradedGroup({grp(1, {}), {}, grp(1, {})}));

    REQUIRE_THROWS_AS(lift(SpaceExpr::disc(5), 5), DimensionError);
    REQUIRE_THROWS_AS(lift(SpaceExpr::sphere(5), 8), NotLiftable);
    REQUIRE_THROWS_AS(lift(SpaceExpr::disc(5), 8, false), NotLiftable);
}

TEST_CASE("lift predictions match the formula engine degree by degree")
{
    Recipe r = plan(target(grp(1, {2, 6}), 2, 1));
    GradedGroup h = homology(r.assembled);
    for (int m = 6; m <= 10; ++m) {
        SpecialGenericDescriptor d = lift(r.assembled, m);
        REQUIRE(d.predicted.topDegree() <= m - 5);
        for (int j = 0; j <= m - 5 && j <= 5; ++j)
            REQUIRE(d.predicted.at(j) == h.at(j));
    }
}
