/**
 * Symbolic manifold expressions: spheres, discs, lens spaces, products,
 * connected sums, boundary connected sums, and the surgery that removes
 * a tubular-neighborhood piece of an embedded submanifold over the
 * complement of a point.
 *
 * Grammar (whitespace insignificant):
 *   expr := "S"nat | "D"nat | "lens(" nat "," nat ")"
 *         | "connsum(" expr ("," expr)+ ")"
 *         | "prod(" expr "," expr ")"
 *         | "bcs(" expr ("," expr)* ")"
 *         | "yzrem(" ("S"nat | "D"nat) "," expr ")"
 */

#ifndef HOMCALC_SPACE_EXPR_HPP
#define HOMCALC_SPACE_EXPR_HPP

#include <cctype>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "integer_matrix.hpp"

namespace homcalc {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/** Three-valued simple-connectivity: the surgery output is only asserted. */
enum class Certainty { No, Yes, AssertedByPaper };

struct SpaceAttrs {
    int dim = 0;
    bool closed = false;
    bool orientable = false;
    bool connected = false;
    Certainty simply_connected = Certainty::No;
};

class SpaceExpr {
public:
    enum class Kind { Sphere, Disc, Lens, ConnSum, Product, BoundaryConnSum, YZRemove };

    static SpaceExpr sphere(int k)
    {
        if (k < 1)
            throw ValidationError("sphere: dimension must be >= 1");
        SpaceExpr e(Kind::Sphere);
        e.k_ = k;
        return e;
    }

    static SpaceExpr disc(int k)
    {
        if (k < 1)
            throw ValidationError("disc: dimension must be >= 1");
        SpaceExpr e(Kind::Disc);
        e.k_ = k;
        return e;
    }

    static SpaceExpr lens(const Int& p, const Int& q)
    {
        Int qmax = p > 2 ? p : Int(2);
        if (p < 1 || q < 1 || q >= qmax || gcd_int(p, q) != 1)
            throw ValidationError("lens(p,q): need p >= 1, 1 <= q < max(p,2), gcd(p,q) = 1");
        if (p == 1)
            return sphere(3);  // L(1,q) is the 3-sphere
        SpaceExpr e(Kind::Lens);
        e.k_ = 3;
        e.p_ = p;
        e.q_ = q;
        return e;
    }

    static SpaceExpr connSum(std::vector<SpaceExpr> parts)
    {
        if (parts.size() < 2)
            throw ValidationError("connsum: needs at least two summands");
        int d = parts[0].attrs().dim;
        for (const SpaceExpr& p : parts) {
            SpaceAttrs a = p.attrs();
            if (a.dim != d)
                throw ValidationError("connsum: dimension mismatch (" +
                                      std::to_string(d) + " vs " + std::to_string(a.dim) + ")");
            if (!a.closed)
                throw ValidationError("connsum: all summands must be closed");
            if (!a.connected || !a.orientable)
                throw ValidationError("connsum: all summands must be connected and orientable");
        }
        if (d < 1)
            throw ValidationError("connsum: dimension must be >= 1");
        SpaceExpr e(Kind::ConnSum);
        e.children_ = std::move(parts);
        return e;
    }

    static SpaceExpr product(SpaceExpr a, SpaceExpr b)
    {
        SpaceExpr e(Kind::Product);
        e.children_.push_back(std::move(a));
        e.children_.push_back(std::move(b));
        return e;
    }

    static SpaceExpr boundaryConnSum(std::vector<SpaceExpr> parts)
    {
        if (parts.empty())
            throw ValidationError("bcs: needs at least one summand");
        int d = parts[0].attrs().dim;
        for (const SpaceExpr& p : parts) {
            SpaceAttrs a = p.attrs();
            if (a.dim != d)
                throw ValidationError("bcs: dimension mismatch");
            if (a.closed)
                throw ValidationError("bcs: all summands must have nonempty boundary");
            if (!a.connected)
                throw ValidationError("bcs: all summands must be connected");
        }
        SpaceExpr e(Kind::BoundaryConnSum);
        e.children_ = std::move(parts);
        return e;
    }

    static SpaceExpr yzRemove(SpaceExpr base, SpaceExpr y)
    {
        if (base.kind() != Kind::Sphere && base.kind() != Kind::Disc)
            throw ValidationError("yzrem: base must be a sphere or a disc");
        SpaceAttrs ya = y.attrs();
        if (!ya.closed || !ya.connected || !ya.orientable)
            throw ValidationError("yzrem: submanifold must be closed, connected, orientable");
        int n = base.attrs().dim;
        if (ya.dim < 1 || ya.dim > n - 2)
            throw ValidationError("yzrem: need 1 <= dim Y <= dim base - 2 (codimension >= 2)");
        SpaceExpr e(Kind::YZRemove);
        e.children_.push_back(std::move(base));
        e.children_.push_back(std::move(y));
        return e;
    }

    Kind kind() const { return kind_; }
    int sphereOrDiscDim() const { return k_; }
    const Int& lensP() const { return p_; }
    const Int& lensQ() const { return q_; }
    const std::vector<SpaceExpr>& children() const { return children_; }

    SpaceAttrs attrs() const
    {
        SpaceAttrs a;
        switch (kind_) {
        case Kind::Sphere:
            a = {k_, true, true, true, k_ >= 2 ? Certainty::Yes : Certainty::No};
            break;
        case Kind::Disc:
            a = {k_, false, true, true, Certainty::Yes};
            break;
        case Kind::Lens:
            a = {3, true, true, true, Certainty::No};
            break;
        case Kind::ConnSum: {
            a = children_[0].attrs();
            for (const SpaceExpr& ch : children_)
                a.simply_connected = combine(a.simply_connected, ch.attrs().simply_connected);
            break;
        }
        case Kind::Product: {
            SpaceAttrs l = children_[0].attrs();
            SpaceAttrs r = children_[1].attrs();
            a.dim = l.dim + r.dim;
            a.closed = l.closed && r.closed;
            a.orientable = l.orientable && r.orientable;
            a.connected = l.connected && r.connected;
            a.simply_connected = combine(l.simply_connected, r.simply_connected);
            break;
        }
        case Kind::BoundaryConnSum: {
            a = children_[0].attrs();
            a.closed = false;
            a.simply_connected = Certainty::Yes;
            for (const SpaceExpr& ch : children_) {
                SpaceAttrs ca = ch.attrs();
                a.orientable = a.orientable && ca.orientable;
                a.simply_connected = combine(a.simply_connected, ca.simply_connected);
            }
            break;
        }
        case Kind::YZRemove:
            a.dim = children_[0].attrs().dim;
            a.closed = false;
            a.orientable = true;
            a.connected = true;
            a.simply_connected = Certainty::AssertedByPaper;
            break;
        }
        return a;
    }

    std::string toString() const
    {
        std::ostringstream os;
        switch (kind_) {
        case Kind::Sphere:
            os << "S" << k_;
            break;
        case Kind::Disc:
            os << "D" << k_;
            break;
        case Kind::Lens:
            os << "lens(" << p_ << "," << q_ << ")";
            break;
        case Kind::ConnSum:
        case Kind::BoundaryConnSum:
        case Kind::Product:
        case Kind::YZRemove: {
            const char* name = kind_ == Kind::ConnSum ? "connsum"
                               : kind_ == Kind::BoundaryConnSum ? "bcs"
                               : kind_ == Kind::Product ? "prod"
                                                        : "yzrem";
            os << name << "(";
            for (std::size_t i = 0; i < children_.size(); ++i) {
                if (i)
                    os << ",";
                os << children_[i].toString();
            }
            os << ")";
            break;
        }
        }
        return os.str();
    }

private:
    explicit SpaceExpr(Kind k) : kind_(k) {}

    static Certainty combine(Certainty a, Certainty b)
    {
        if (a == Certainty::No || b == Certainty::No)
            return Certainty::No;
        if (a == Certainty::AssertedByPaper || b == Certainty::AssertedByPaper)
            return Certainty::AssertedByPaper;
        return Certainty::Yes;
    }

    Kind kind_;
    int k_ = 0;
    Int p_ = 0, q_ = 0;
    std::vector<SpaceExpr> children_;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& text)
    {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                src_ += c;
    }

    SpaceExpr parse()
    {
        SpaceExpr e = parseExpr();
        if (pos_ != src_.size())
            throw ParseError("trailing input at position " + std::to_string(pos_));
        return e;
    }

private:
    SpaceExpr parseExpr()
    {
        if (peek() == 'S' || peek() == 'D') {
            char c = next();
            int k = parseNat();
            return c == 'S' ? SpaceExpr::sphere(k) : SpaceExpr::disc(k);
        }
        std::string name = parseName();
        expect('(');
        if (name == "lens") {
            Int p(parseNat());
            expect(',');
            Int q(parseNat());
            expect(')');
            return SpaceExpr::lens(p, q);
        }
        if (name == "prod") {
            SpaceExpr a = parseExpr();
            expect(',');
            SpaceExpr b = parseExpr();
            expect(')');
            return SpaceExpr::product(std::move(a), std::move(b));
        }
        if (name == "yzrem") {
            SpaceExpr base = parseExpr();
            expect(',');
            SpaceExpr y = parseExpr();
            expect(')');
            return SpaceExpr::yzRemove(std::move(base), std::move(y));
        }
        if (name == "connsum" || name == "bcs") {
            std::vector<SpaceExpr> parts;
            parts.push_back(parseExpr());
            while (peek() == ',') {
                next();
                parts.push_back(parseExpr());
            }
            expect(')');
            return name == "connsum" ? SpaceExpr::connSum(std::move(parts))
                                     : SpaceExpr::boundaryConnSum(std::move(parts));
        }
        throw ParseError("unknown constructor '" + name + "'");
    }

    std::string parseName()
    {
        std::string name;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
            name += src_[pos_++];
        if (name.empty())
            throw ParseError("expected a constructor at position " + std::to_string(pos_));
        return name;
    }

    int parseNat()
    {
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("expected a number at position " + std::to_string(pos_));
        long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_++] - '0');
            if (v > 1000000)
                throw ParseError("number too large");
        }
        return static_cast<int>(v);
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    char next()
    {
        if (pos_ >= src_.size())
            throw ParseError("unexpected end of input");
        return src_[pos_++];
    }

    void expect(char c)
    {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "' at position " +
                             std::to_string(pos_));
        ++pos_;
    }

    std::string src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline SpaceExpr parse_space(const std::string& text)
{
    return detail::ExprParser(text).parse();
}

}  // namespace homcalc

#endif  // HOMCALC_SPACE_EXPR_HPP
