/**
 * Realization planner: assembles a 5-dimensional compact simply-
 * connected manifold with prescribed H_2 (any finitely generated
 * group), H_3 and H_4 (free of prescribed ranks) as a boundary
 * connected sum of a surgery piece and product pieces, plus the
 * homological checks on candidates (freeness in the top two interior
 * degrees; the necessary condition for closed 5-manifolds built from
 * sphere bundles over the 2-sphere) and the lift descriptor for the
 * induced maps from higher-dimensional closed manifolds.
 */

#ifndef HOMCALC_REALIZE_HPP
#define HOMCALC_REALIZE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abelian_group.hpp"
#include "space_expr.hpp"
#include "space_homology.hpp"

namespace homcalc {

class DimensionError : public std::runtime_error {
public:
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

class NotLiftable : public std::runtime_error {
public:
    explicit NotLiftable(const std::string& what) : std::runtime_error(what) {}
};

struct RealizationTarget {
    FGAbelianGroup G;     // target H_2
    std::size_t r1 = 0;   // rank of free H_3
    std::size_t r2 = 0;   // rank of free H_4
};

enum class PlanMode { Default, Paper };

struct Recipe {
    std::vector<SpaceExpr> pieces;
    SpaceExpr assembled = SpaceExpr::disc(5);
};

/**
 * Build the recipe. Torsion is carried by one surgery piece whose
 * submanifold is the connected sum of lens spaces along the invariant
 * factors; the free ranks come from product pieces. Default mode uses
 * the sphere base whenever a surgery piece exists, keeping the degree-4
 * bookkeeping orthogonal to torsion. Paper mode mirrors the text: the
 * disc base consumes one unit of r2 when available, the sphere base is
 * used exactly when r2 = 0.
 */
inline Recipe plan(const RealizationTarget& t, PlanMode mode = PlanMode::Default)
{
    Recipe r;
    const std::vector<Int> factors = t.G.invariantFactors();
    std::size_t s4_copies = t.r2;
    if (!factors.empty()) {
        std::vector<SpaceExpr> lenses;
        for (const Int& d : factors)
            lenses.push_back(SpaceExpr::lens(d, 1));
        SpaceExpr y = lenses.size() == 1 ? lenses[0] : SpaceExpr::connSum(std::move(lenses));
        bool disc_base = (mode == PlanMode::Paper && t.r2 >= 1);
        if (disc_base)
            --s4_copies;  // the disc base already supplies one Z in degree 4
        SpaceExpr base = disc_base ? SpaceExpr::disc(5) : SpaceExpr::sphere(5);
        r.pieces.push_back(SpaceExpr::yzRemove(std::move(base), std::move(y)));
    }
    for (std::size_t i = 0; i < t.G.rank(); ++i)
        r.pieces.push_back(SpaceExpr::product(SpaceExpr::sphere(2), SpaceExpr::disc(3)));
    for (std::size_t i = 0; i < t.r1; ++i)
        r.pieces.push_back(SpaceExpr::product(SpaceExpr::sphere(3), SpaceExpr::disc(2)));
    for (std::size_t i = 0; i < s4_copies; ++i)
        r.pieces.push_back(SpaceExpr::product(SpaceExpr::sphere(4), SpaceExpr::disc(1)));
    r.assembled = r.pieces.empty() ? SpaceExpr::disc(5)
                                   : SpaceExpr::boundaryConnSum(r.pieces);
    return r;
}

struct VerifyReport {
    bool pass = false;
    bool simply_connected_ok = false;
    GradedGroup computed;
    std::vector<bool> degree_ok;  // degrees 0..5
};

/** Check the assembled manifold against the target in degrees 0..5. */
inline VerifyReport verify(const Recipe& r, const RealizationTarget& t)
{
    VerifyReport rep;
    rep.computed = homology(r.assembled);
    std::vector<FGAbelianGroup> expected = {
        FGAbelianGroup::free(1), FGAbelianGroup::trivial(), t.G,
        FGAbelianGroup::free(t.r1), FGAbelianGroup::free(t.r2), FGAbelianGroup::trivial()};
    rep.pass = true;
    for (int j = 0; j <= 5; ++j) {
        bool ok = rep.computed.at(j) == expected[static_cast<std::size_t>(j)];
        rep.degree_ok.push_back(ok);
        rep.pass = rep.pass && ok;
    }
    SpaceAttrs a = r.assembled.attrs();
    rep.simply_connected_ok = a.simply_connected != Certainty::No;
    rep.pass = rep.pass && rep.simply_connected_ok;
    return rep;
}

/**
 * Freeness of H_{dimP-2} and H_{dimP-1}; the caller asserts the
 * hypotheses (compact, connected, orientable, H_1 = 0).
 */
inline bool nishioka_check(const GradedGroup& h, int dimP)
{
    return torsion(h.at(dimP - 2)).isTrivial() && torsion(h.at(dimP - 1)).isTrivial();
}

/**
 * Necessary homological condition for a closed simply-connected
 * 5-manifold of the admissible form: either the 5-sphere or a connected
 * sum of 3-sphere bundles over the 2-sphere, so H_2 and H_3 free of
 * equal rank and H_1 = H_4 = 0. Not a sufficient test; smooth-structure
 * invariants are out of scope.
 */
inline bool sgm_candidate_check(const GradedGroup& h)
{
    const FGAbelianGroup& h2 = h.at(2);
    const FGAbelianGroup& h3 = h.at(3);
    return torsion(h2).isTrivial() && torsion(h3).isTrivial() &&
           h2.rank() == h3.rank() && h.at(1).isTrivial() && h.at(4).isTrivial();
}

/**
 * Predicted data for a closed m-manifold mapping onto W: homology
 * agrees with W up to degree m - dim W; nothing is claimed above that.
 */
struct SpecialGenericDescriptor {
    int m = 0;
    int n = 0;  // dim W
    std::string w_expr;
    GradedGroup predicted;      // degrees 0 .. m - n only
    int singular_set_dim = 0;   // dim of the boundary of W
    bool singular_set_embedded = true;
    bool trivial_disc_bundle_near_boundary = true;
    bool trivial_sphere_bundle_over_interior = true;
    bool embeddable_assumed = true;
};

inline SpecialGenericDescriptor lift(const SpaceExpr& w, int m, bool embeddable_flag = true)
{
    SpaceAttrs a = w.attrs();
    if (m <= a.dim)
        throw DimensionError("lift: total dimension must exceed dim W");
    if (a.closed)
        throw NotLiftable("lift: W must have nonempty boundary");
    if (!embeddable_flag)
        throw NotLiftable("lift: W is not flagged as codimension-0 immersible/embeddable");
    SpecialGenericDescriptor d;
    d.m = m;
    d.n = a.dim;
    d.w_expr = w.toString();
    GradedGroup h = homology(w);
    for (int j = 0; j <= m - a.dim; ++j)
        d.predicted.set(j, h.at(j));
    d.singular_set_dim = a.dim - 1;
    d.embeddable_assumed = embeddable_flag;
    return d;
}

}  // namespace homcalc

#endif  // HOMCALC_REALIZE_HPP
