#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twisted_algebra.hpp"

namespace nctorus {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos)
    {
    }
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Abstract syntax for expressions in the generators of one algebra.
///
///   expr   := ['-'] term (('+'|'-') ['-'] term)*
///   term   := factor ('*'? factor)*
///   factor := gen ('^' int)? | 'q' ('^' qexp)? | 'i' | rational | '(' expr ')' ('^' nat)?
///   qexp   := int | '(' int ('/' 2)? ')'
///
/// Juxtaposition and '*' both denote the noncommutative product.
struct Expression {
    enum class Kind { sum, product, generator, scalar, power };

    Kind kind;
    std::vector<Expression> children;  // sum, product, power (one child)
    std::vector<bool> negated;         // sum: sign of each child
    std::size_t generator = 0;         // generator position
    std::int64_t exponent = 0;         // generator / power exponent
    PhaseScalar value;                 // scalar literal
};

namespace detail {

class ExpressionParser {
public:
    ExpressionParser(const AlgebraDescriptor& alg, std::string_view text) : alg_(alg), text_(text) {}

    Expression parse()
    {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return e;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }
    void expect(char c)
    {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    bool starts_factor()
    {
        char c = peek();
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
    }

    std::int64_t parse_nat()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected integer", pos_);
        try {
            return std::stoll(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
    }

    std::int64_t parse_int()
    {
        bool neg = accept('-');
        auto v = parse_nat();
        return neg ? -v : v;
    }

    /// Returns an s-exponent (twice the q-exponent).
    std::int64_t parse_q_exponent()
    {
        if (!accept('('))
            return 2 * parse_int();
        auto num = parse_int();
        std::int64_t s_exp = 2 * num;
        if (accept('/')) {
            std::size_t at = pos_;
            if (parse_nat() != 2)
                throw ParseError("q exponents must be integers or halves", at);
            s_exp = num;
        }
        expect(')');
        return s_exp;
    }

    std::int64_t parse_gen_exponent()
    {
        if (accept('(')) {
            auto v = parse_int();
            expect(')');
            return v;
        }
        return parse_int();
    }

    Expression parse_expr()
    {
        Expression sum{Expression::Kind::sum, {}, {}, 0, 0, {}};
        bool neg = accept('-');
        sum.children.push_back(parse_term());
        sum.negated.push_back(neg);
        for (;;) {
            if (accept('+'))
                neg = false;
            else if (accept('-'))
                neg = true;
            else
                break;
            if (accept('-'))
                neg = !neg;
            sum.children.push_back(parse_term());
            sum.negated.push_back(neg);
        }
        return sum;
    }

    Expression parse_term()
    {
        Expression prod{Expression::Kind::product, {}, {}, 0, 0, {}};
        prod.children.push_back(parse_factor());
        for (;;) {
            if (accept('*')) {
                prod.children.push_back(parse_factor());
            } else if (starts_factor()) {
                prod.children.push_back(parse_factor());
            } else {
                break;
            }
        }
        return prod;
    }

    Expression scalar(PhaseScalar v) { return Expression{Expression::Kind::scalar, {}, {}, 0, 0, std::move(v)}; }

    Expression parse_factor()
    {
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            auto inner = parse_expr();
            expect(')');
            if (accept('^')) {
                auto n = parse_gen_exponent();
                if (n < 0)
                    throw ParseError("negative power of a parenthesized expression", at);
                return Expression{Expression::Kind::power, {std::move(inner)}, {}, 0, n, {}};
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpq_class num(parse_nat());
            if (accept('/')) {
                std::size_t den_at = pos_;
                auto den = parse_nat();
                if (den == 0)
                    throw ParseError("zero denominator", den_at);
                num /= mpq_class(den);
            }
            return scalar(PhaseScalar(GaussianRational(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_++;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == "q")
                return scalar(PhaseScalar::phase_pow(accept('^') ? parse_q_exponent() : 2));
            if (name == "i") {
                if (peek() == '^')
                    throw ParseError("powers of i are not supported", pos_);
                return scalar(PhaseScalar(GaussianRational::i()));
            }
            std::size_t position = alg_.generator_names.size();
            for (std::size_t k = 0; k < alg_.generator_names.size(); ++k)
                if (alg_.generator_names[k] == name)
                    position = k;
            if (position == alg_.generator_names.size())
                throw ParseError("unknown generator '" + name + "' for algebra " + alg_.name, start);
            std::int64_t power = accept('^') ? parse_gen_exponent() : 1;
            return Expression{Expression::Kind::generator, {}, {}, position, power, {}};
        }
        if (c == '\0')
            throw ParseError("unexpected end of input", pos_);
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    const AlgebraDescriptor& alg_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Expression parse_expression(const AlgebraDescriptor& alg, std::string_view text)
{
    return detail::ExpressionParser(alg, text).parse();
}

inline AlgebraElement eval_expression(const AlgebraDescriptor& alg, const Expression& e)
{
    switch (e.kind) {
    case Expression::Kind::scalar: return AlgebraElement::scalar(alg, e.value);
    case Expression::Kind::generator: return AlgebraElement::generator(alg, e.generator, e.exponent);
    case Expression::Kind::power: {
        auto base = eval_expression(alg, e.children.front());
        auto r = unit(alg);
        for (std::int64_t k = 0; k < e.exponent; ++k)
            r = r * base;
        return r;
    }
    case Expression::Kind::product: {
        auto r = unit(alg);
        for (const auto& c : e.children)
            r = r * eval_expression(alg, c);
        return r;
    }
    case Expression::Kind::sum: {
        AlgebraElement r(alg);
        for (std::size_t k = 0; k < e.children.size(); ++k) {
            auto term = eval_expression(alg, e.children[k]);
            if (e.negated[k])
                r -= term;
            else
                r += term;
        }
        return r;
    }
    }
    throw AlgebraError("malformed expression");
}

inline AlgebraElement parse_element(const AlgebraDescriptor& alg, std::string_view text)
{
    return eval_expression(alg, parse_expression(alg, text));
}

/// Parses a rendered phase scalar such as "(-1/2+1/3i)*q^(-1/2) + 2*q^(3/2)".
inline PhaseScalar parse_phase_scalar(std::string_view text)
{
    static const AlgebraDescriptor scalars{"scalar", 0, {}, CocycleMatrix::zero(0)};
    auto x = parse_element(scalars, text);
    return x.coeff(MultiIndex{});
}

}  // namespace nctorus
