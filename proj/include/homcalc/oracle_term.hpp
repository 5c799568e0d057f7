/**
 * Parser for oracle model terms: point, sphere(k), disc(k), lens(p,q),
 * tensor(t1,t2), connsum(t1,...,tn). Evaluates directly to a chain
 * complex.
 */

#ifndef HOMCALC_ORACLE_TERM_HPP
#define HOMCALC_ORACLE_TERM_HPP

#include <cctype>
#include <string>
#include <vector>

#include "chain_complex.hpp"
#include "space_expr.hpp"

namespace homcalc {
namespace detail {

class OracleTermParser {
public:
    explicit OracleTermParser(const std::string& text)
    {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                src_ += c;
    }

    ChainComplex parse()
    {
        ChainComplex c = parseTerm();
        if (pos_ != src_.size())
            throw ParseError("trailing input at position " + std::to_string(pos_));
        return c;
    }

private:
    ChainComplex parseTerm()
    {
        std::string name;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
            name += src_[pos_++];
        if (name == "point")
            return build(CellModel::point());
        expect('(');
        if (name == "sphere" || name == "disc") {
            int k = parseNat();
            expect(')');
            return build(name == "sphere" ? CellModel::sphere(k) : CellModel::disc(k));
        }
        if (name == "lens") {
            Int p(parseNat());
            expect(',');
            Int q(parseNat());
            expect(')');
            return build(CellModel::lens(p, q));
        }
        if (name == "tensor") {
            ChainComplex a = parseTerm();
            expect(',');
            ChainComplex b = parseTerm();
            expect(')');
            return tensor(a, b);
        }
        if (name == "connsum") {
            std::vector<ChainComplex> parts;
            parts.push_back(parseTerm());
            while (peek() == ',') {
                ++pos_;
                parts.push_back(parseTerm());
            }
            expect(')');
            if (parts.size() < 2)
                throw ParseError("connsum: needs at least two summands");
            ChainComplex acc = parts[0];
            int d = acc.topDegree();
            for (std::size_t i = 1; i < parts.size(); ++i)
                acc = connected_sum_complex(acc, parts[i], d);
            return acc;
        }
        throw ParseError("unknown model '" + name + "'");
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

inline ChainComplex parse_oracle_term(const std::string& text)
{
    return detail::OracleTermParser(text).parse();
}

}  // namespace homcalc

#endif  // HOMCALC_ORACLE_TERM_HPP
