#include <random>

#include <catch2/catch_amalgamated.hpp>
#include <homcalc/abelian_group.hpp>
#include <homcalc/integer_matrix.hpp>
#include <homcalc/smith.hpp>

#include "oracles.hpp"

using namespace homcalc;

namespace {

FGAbelianGroup grp(std::size_t rank, std::vector<Int> tors)
{
    return FGAbelianGroup(rank, std::move(tors));
}

void check_smith_invariants(const IntegerMatrix& a)
{
    SmithDecomposition s = smith_normal_form(a);
    REQUIRE(s.U * a * s.V == s.D);
    if (a.rows() > 0)
        REQUIRE(abs_int(s.U.det()) == 1);
    if (a.cols() > 0)
        REQUIRE(abs_int(s.V.det()) == 1);
    REQUIRE(s.U * s.u_inv == IntegerMatrix::identity(a.rows()));
    // Diagonal, nonnegative, divisibility chain, trailing zeros last.
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j)
                REQUIRE(s.D(i, j) == 0);
    std::vector<Int> diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        REQUIRE(diag[i] > 0);
        REQUIRE(diag[i + 1] % diag[i] == 0);
    }
    std::size_t n = std::min(s.D.rows(), s.D.cols());
    for (std::size_t i = diag.size(); i < n; ++i)
        REQUIRE(s.D(i, i) == 0);
}

}  // namespace

TEST_CASE("smith normal form: worked example")
{
    IntegerMatrix a = IntegerMatrix::fromRows({{2, 4}, {6, 8}});
    SmithDecomposition s = smith_normal_form(a);
    // d_1 = gcd of entries = 2, d_1 * d_2 = |det| = 8.
    REQUIRE(s.diagonal() == std::vector<Int>{2, 4});
    check_smith_invariants(a);
}

TEST_CASE("smith normal form: identity and zero")
{
    REQUIRE(smith_normal_form(IntegerMatrix::identity(3)).D == IntegerMatrix::identity(3));
    IntegerMatrix z(2, 3);
    REQUIRE(smith_normal_form(z).D == z);
    check_smith_invariants(z);
}

TEST_CASE("smith normal form: empty matrices")
{
    IntegerMatrix e;
    SmithDecomposition s = smith_normal_form(e);
    REQUIRE(s.rank() == 0);
    check_smith_invariants(IntegerMatrix(0, 4));
    check_smith_invariants(IntegerMatrix(4, 0));
}

TEST_CASE("smith normal form: randomized invariants and minors oracle")
{
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 100; ++iter) {
        IntegerMatrix a = test::random_matrix(rng, 5, 12);
        check_smith_invariants(a);
        SmithDecomposition s = smith_normal_form(a);
        REQUIRE(s.diagonal() == test::invariant_factors_by_minors(a));
    }
}

TEST_CASE("cokernel")
{
    IntegerMatrix p(1, 1);
    p(0, 0) = 5;
    REQUIRE(cokernel(p) == FGAbelianGroup::cyclic(5));
    REQUIRE(cokernel(IntegerMatrix(1, 0)) == FGAbelianGroup::free(1));
    REQUIRE(cokernel(IntegerMatrix::fromRows({{2, 0}, {0, 12}})) == grp(0, {2, 12}));
}

TEST_CASE("canonical form drops unit factors and recombines")
{
    REQUIRE(grp(0, {1, 1}).isTrivial());
    REQUIRE(grp(0, {6}) == grp(0, {2, 3}));
    REQUIRE(grp(0, {2, 6}).invariantFactors() == std::vector<Int>{2, 6});
    REQUIRE(grp(0, {4, 6}).invariantFactors() == std::vector<Int>{2, 12});
}

TEST_CASE("direct_sum")
{
    REQUIRE(direct_sum(grp(0, {2}), grp(0, {3})) == grp(0, {6}));
    FGAbelianGroup g = grp(2, {4, 8});
    REQUIRE(direct_sum(g, FGAbelianGroup::trivial()) == g);
    REQUIRE(direct_sum(grp(0, {2}), grp(0, {2})).invariantFactors() == std::vector<Int>{2, 2});
}

TEST_CASE("direct_sum is commutative and associative")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> rk(0, 3), d(2, 12), nt(0, 3);
    for (int iter = 0; iter < 50; ++iter) {
        auto sample = [&]() {
            std::vector<Int> t;
            int n = nt(rng);
            for (int i = 0; i < n; ++i)
                t.push_back(d(rng));
            return FGAbelianGroup(static_cast<std::size_t>(rk(rng)), t);
        };
        FGAbelianGroup a = sample(), b = sample(), c = sample();
        REQUIRE(direct_sum(a, b) == direct_sum(b, a));
        REQUIRE(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
        REQUIRE(direct_complement(direct_sum(b, c), b) == c);
    }
}

TEST_CASE("direct_complement")
{
    REQUIRE(direct_complement(grp(1, {6}), FGAbelianGroup::free(1)) == grp(0, {6}));
    REQUIRE(direct_complement(grp(0, {2, 4}), grp(0, {4})) == grp(0, {2}));
    REQUIRE_THROWS_AS(direct_complement(grp(0, {4}), grp(0, {2})), NotASummand);
    REQUIRE_THROWS_AS(direct_complement(grp(0, {4}), grp(1, {})), NotASummand);
}

TEST_CASE("tensor and tor")
{
    REQUIRE(tensor(grp(0, {4}), grp(0, {6})) == grp(0, {2}));
    REQUIRE(tor(grp(2, {}), grp(0, {5})).isTrivial());
    REQUIRE(tensor(grp(2, {}), grp(0, {3})) == grp(0, {3, 3}));
    REQUIRE(tensor(FGAbelianGroup::free(1), grp(1, {9})) == grp(1, {9}));
    REQUIRE(tor(grp(0, {4}), grp(0, {6})) == grp(0, {2}));
}

TEST_CASE("tensor and tor are symmetric and bilinear over direct sums")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> rk(0, 2), d(2, 10), nt(0, 2);
    auto sample = [&]() {
        std::vector<Int> t;
        int n = nt(rng);
        for (int i = 0; i < n; ++i)
            t.push_back(d(rng));
        return FGAbelianGroup(static_cast<std::size_t>(rk(rng)), t);
    };
    for (int iter = 0; iter < 50; ++iter) {
        FGAbelianGroup a = sample(), b = sample(), c = sample();
        REQUIRE(tensor(a, b) == tensor(b, a));
        REQUIRE(tor(a, b) == tor(b, a));
        REQUIRE(tensor(a, direct_sum(b, c)) == direct_sum(tensor(a, b), tensor(a, c)));
        REQUIRE(tor(a, direct_sum(b, c)) == direct_sum(tor(a, b), tor(a, c)));
    }
}

TEST_CASE("isomorphism, rank, torsion")
{
    REQUIRE(is_isomorphic(grp(0, {6}), direct_sum(grp(0, {2}), grp(0, {3}))));
    REQUIRE(rank(grp(3, {2})) == 3);
    REQUIRE(torsion(grp(2, {})).isTrivial());
    REQUIRE(torsion(grp(1, {2, 4})) == grp(0, {2, 4}));
}

TEST_CASE("serialization round trips")
{
    REQUIRE(grp(0, {}).toString() == "0");
    REQUIRE(grp(1, {}).toString() == "Z");
    REQUIRE(grp(2, {2, 12}).toString() == "Z^2 + Z/2 + Z/12");
    REQUIRE(FGAbelianGroup::parse("Z^2+Z/2+Z/12") == grp(2, {2, 12}));
    REQUIRE(FGAbelianGroup::parse("Z/3 + Z") == grp(1, {3}));
    REQUIRE(FGAbelianGroup::parse("0") == FGAbelianGroup::trivial());
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> rk(0, 4), d(2, 16), nt(0, 3);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<Int> t;
        int n = nt(rng);
        for (int i = 0; i < n; ++i)
            t.push_back(d(rng));
        FGAbelianGroup g(static_cast<std::size_t>(rk(rng)), t);
        REQUIRE(FGAbelianGroup::parse(g.toString()) == g);
    }
}

TEST_CASE("solve_in_lattice and kernel_basis")
{
    IntegerMatrix a = IntegerMatrix::fromRows({{2, 4}, {6, 8}});
    SmithDecomposition s = smith_normal_form(a);
    auto x = solve_in_lattice(s, {2, 6});
    REQUIRE(x.has_value());
    REQUIRE((*x)[0] * 2 + (*x)[1] * 4 == 2);
    REQUIRE((*x)[0] * 6 + (*x)[1] * 8 == 6);
    REQUIRE_FALSE(solve_in_lattice(s, {1, 0}).has_value());

    IntegerMatrix b = IntegerMatrix::fromRows({{1, 2, 3}});
    IntegerMatrix k = kernel_basis(b);
    REQUIRE(k.cols() == 2);
    REQUIRE((b * k).isZero());
}
