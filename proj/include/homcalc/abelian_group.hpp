/**
 * Finitely generated abelian groups in canonical invariant-factor form,
 * and the operations on them used throughout the homology engine:
 * direct sums, summand cancellation, tensor and Tor.
 *
 * Canonical form is a complete isomorphism invariant, so is_isomorphic
 * is structural equality.
 */

#ifndef HOMCALC_ABELIAN_GROUP_HPP
#define HOMCALC_ABELIAN_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "integer_matrix.hpp"
#include "smith.hpp"

namespace homcalc {

/** B is not a direct summand of A; complement undefined. */
class NotASummand : public std::runtime_error {
public:
    explicit NotASummand(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

/** Trial-division factorization; fine at the magnitudes homology produces. */
inline std::map<Int, unsigned> factorize(Int n)
{
    std::map<Int, unsigned> f;
    if (n < 0)
        n = -n;
    for (Int p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1)
        ++f[n];
    return f;
}

}  // namespace detail

class FGAbelianGroup {
public:
    FGAbelianGroup() : free_rank_(0) {}

    /**
     * Build from a free rank and an arbitrary list of torsion orders.
     * Orders equal to 1 are dropped; the rest are recombined into the
     * divisibility chain via primary decomposition.
     */
    FGAbelianGroup(std::size_t free_rank, std::vector<Int> torsion_orders)
        : free_rank_(free_rank)
    {
        // prime -> multiset of exponents
        std::map<Int, std::vector<unsigned> > primary;
        for (const Int& d : torsion_orders) {
            if (d < 0)
                throw std::invalid_argument("FGAbelianGroup: negative torsion order");
            if (d == 0) {
                ++free_rank_;  // order 0 means a free generator
                continue;
            }
            for (const auto& [p, e] : detail::factorize(d))
                primary[p].push_back(e);
        }
        std::size_t k = 0;
        for (auto& [p, exps] : primary) {
            std::sort(exps.begin(), exps.end(), std::greater<unsigned>());
            k = std::max(k, exps.size());
        }
        invariant_factors_.assign(k, Int(1));
        for (const auto& [p, exps] : primary)
            for (std::size_t i = 0; i < exps.size(); ++i) {
                Int pw(1);
                for (unsigned e = 0; e < exps[i]; ++e)
                    pw *= p;
                // Largest prime power goes into the last invariant factor.
                invariant_factors_[k - 1 - i] *= pw;
            }
    }

    static FGAbelianGroup trivial() { return FGAbelianGroup(); }

    static FGAbelianGroup free(std::size_t rank)
    {
        return FGAbelianGroup(rank, {});
    }

    static FGAbelianGroup cyclic(const Int& n)
    {
        if (n == 0)
            return free(1);
        return FGAbelianGroup(0, {n});
    }

    std::size_t rank() const { return free_rank_; }

    const std::vector<Int>& invariantFactors() const { return invariant_factors_; }

    bool isTrivial() const { return free_rank_ == 0 && invariant_factors_.empty(); }

    bool isFree() const { return invariant_factors_.empty(); }

    FGAbelianGroup torsion() const
    {
        FGAbelianGroup t;
        t.invariant_factors_ = invariant_factors_;
        return t;
    }

    bool operator==(const FGAbelianGroup& other) const
    {
        return free_rank_ == other.free_rank_ &&
               invariant_factors_ == other.invariant_factors_;
    }

    bool operator!=(const FGAbelianGroup& other) const { return !(*this == other); }

    /** Multiset of prime-power components (p, exponent). */
    std::vector<std::pair<Int, unsigned> > primaryComponents() const
    {
        std::vector<std::pair<Int, unsigned> > out;
        for (const Int& d : invariant_factors_)
            for (const auto& [p, e] : detail::factorize(d))
                out.emplace_back(p, e);
        std::sort(out.begin(), out.end());
        return out;
    }

    /** "Z^r + Z/d1 + Z/d2" text form; the trivial group prints "0". */
    std::string toString() const
    {
        if (isTrivial())
            return "0";
        std::ostringstream os;
        bool first = true;
        if (free_rank_ > 0) {
            os << "Z";
            if (free_rank_ > 1)
                os << "^" << free_rank_;
            first = false;
        }
        for (const Int& d : invariant_factors_) {
            if (!first)
                os << " + ";
            os << "Z/" << d;
            first = false;
        }
        return os.str();
    }

    /**
     * Parse the text form: summands "0", "Z", "Z^r", "Z/d" joined by "+".
     * Whitespace insignificant.
     */
    static FGAbelianGroup parse(const std::string& text)
    {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                s += c;
        if (s.empty())
            throw std::invalid_argument("FGAbelianGroup::parse: empty input");
        std::size_t rank = 0;
        std::vector<Int> tors;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find('+', pos);
            std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
            if (tok == "0") {
                // contributes nothing
            } else if (tok == "Z") {
                rank += 1;
            } else if (tok.rfind("Z^", 0) == 0) {
                rank += std::stoul(tok.substr(2));
            } else if (tok.rfind("Z/", 0) == 0) {
                tors.push_back(Int(tok.substr(2)));
            } else {
                throw std::invalid_argument("FGAbelianGroup::parse: bad summand '" + tok + "'");
            }
            if (next == std::string::npos)
                break;
            pos = next + 1;
        }
        return FGAbelianGroup(rank, tors);
    }

private:
    std::size_t free_rank_;
    std::vector<Int> invariant_factors_;  // each >= 2, d_i | d_{i+1}
};

inline std::size_t rank(const FGAbelianGroup& g) { return g.rank(); }

inline FGAbelianGroup torsion(const FGAbelianGroup& g) { return g.torsion(); }

inline bool is_isomorphic(const FGAbelianGroup& g, const FGAbelianGroup& h)
{
    return g == h;
}

inline FGAbelianGroup direct_sum(const FGAbelianGroup& g, const FGAbelianGroup& h)
{
    std::vector<Int> tors = g.invariantFactors();
    const auto& ht = h.invariantFactors();
    tors.insert(tors.end(), ht.begin(), ht.end());
    return FGAbelianGroup(g.rank() + h.rank(), std::move(tors));
}

/**
 * The complement C with B + C isomorphic to A, when B embeds as a
 * direct summand. Well-defined by cancellation over the primary
 * components. Throws NotASummand otherwise.
 */
inline FGAbelianGroup direct_complement(const FGAbelianGroup& a, const FGAbelianGroup& b)
{
    if (b.rank() > a.rank())
        throw NotASummand("free rank of " + b.toString() + " exceeds " + a.toString());
    auto pa = a.primaryComponents();
    auto pb = b.primaryComponents();
    std::vector<Int> remaining;
    std::size_t i = 0;
    for (const auto& comp : pb) {
        while (i < pa.size() && pa[i] < comp) {
            remaining.push_back(boost::multiprecision::pow(pa[i].first, pa[i].second));
            ++i;
        }
        if (i >= pa.size() || pa[i] != comp)
            throw NotASummand(b.toString() + " is not a direct summand of " + a.toString());
        ++i;  // cancel this component
    }
    for (; i < pa.size(); ++i)
        remaining.push_back(boost::multiprecision::pow(pa[i].first, pa[i].second));
    return FGAbelianGroup(a.rank() - b.rank(), std::move(remaining));
}

/** Tensor product over Z, by the structure theorem and bilinearity. */
inline FGAbelianGroup tensor(const FGAbelianGroup& g, const FGAbelianGroup& h)
{
    std::vector<Int> tors;
    // Z^r tensor Z/d contributes r copies of Z/d, each way around.
    for (std::size_t i = 0; i < g.rank(); ++i)
        for (const Int& d : h.invariantFactors())
            tors.push_back(d);
    for (std::size_t i = 0; i < h.rank(); ++i)
        for (const Int& d : g.invariantFactors())
            tors.push_back(d);
    for (const Int& a : g.invariantFactors())
        for (const Int& b : h.invariantFactors())
            tors.push_back(gcd_int(a, b));
    return FGAbelianGroup(g.rank() * h.rank(), std::move(tors));
}

/** Tor over Z: free parts contribute nothing; Tor(Z/a, Z/b) = Z/gcd(a,b). */
inline FGAbelianGroup tor(const FGAbelianGroup& g, const FGAbelianGroup& h)
{
    std::vector<Int> tors;
    for (const Int& a : g.invariantFactors())
        for (const Int& b : h.invariantFactors())
            tors.push_back(gcd_int(a, b));
    return FGAbelianGroup(0, std::move(tors));
}

/**
 * Canonical form of Z^rows / column-span(A). Rows index generators,
 * columns index relations.
 */
inline FGAbelianGroup cokernel(const IntegerMatrix& A)
{
    SmithDecomposition s = smith_normal_form(A);
    std::size_t rk = s.rank();
    std::vector<Int> tors = s.diagonal();
    return FGAbelianGroup(A.rows() - rk, std::move(tors));
}

/**
 * Degree-indexed homology groups. Out-of-range degrees read as the
 * trivial group.
 */
class GradedGroup {
public:
    GradedGroup() = default;

    explicit GradedGroup(std::vector<FGAbelianGroup> groups)
        : groups_(std::move(groups))
    {
    }

    std::size_t size() const { return groups_.size(); }

    /** Highest stored degree, or -1 when empty. */
    int topDegree() const { return static_cast<int>(groups_.size()) - 1; }

    const FGAbelianGroup& at(int degree) const
    {
        static const FGAbelianGroup kTrivial;
        if (degree < 0 || degree >= static_cast<int>(groups_.size()))
            return kTrivial;
        return groups_[static_cast<std::size_t>(degree)];
    }

    void set(int degree, FGAbelianGroup g)
    {
        if (degree < 0)
            throw std::invalid_argument("GradedGroup: negative degree");
        if (degree >= static_cast<int>(groups_.size()))
            groups_.resize(static_cast<std::size_t>(degree) + 1);
        groups_[static_cast<std::size_t>(degree)] = std::move(g);
    }

    bool operator==(const GradedGroup& other) const
    {
        int top = std::max(topDegree(), other.topDegree());
        for (int j = 0; j <= top; ++j)
            if (at(j) != other.at(j))
                return false;
        return true;
    }

    bool operator!=(const GradedGroup& other) const { return !(*this == other); }

    std::string toString() const
    {
        std::string s = "[";
        for (std::size_t j = 0; j < groups_.size(); ++j) {
            s += groups_[j].toString();
            if (j + 1 < groups_.size())
                s += ", ";
        }
        return s + "]";
    }

private:
    std::vector<FGAbelianGroup> groups_;
};

}  // namespace homcalc

#endif  // HOMCALC_ABELIAN_GROUP_HPP
