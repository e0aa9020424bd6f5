#pragma once

#include <cctype>
#include <string>

#include "homdef/scalar.hpp"

namespace homdef {

/// Recursive-descent parser for scalar expressions.
///
/// Grammar (whitespace insignificant):
///   expr     := term (('+'|'-') term)*
///   term     := factor (('*'|'/') factor)*
///   factor   := base ('^' uint)?
///   base     := rational | symbol | '(' expr ')' | '-' base
///   rational := int ('/' uint)?
class ExpressionParser {
public:
    ExpressionParser(std::string text, CtxPtr ctx, int line_offset = 1,
                     int column_offset = 1)
        : text_(std::move(text)),
          ctx_(std::move(ctx)),
          line_(line_offset),
          col_(column_offset) {}

    Scalar parse() {
        Scalar v = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    Scalar parse_expr() {
        Scalar v = parse_term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                v += parse_term();
            else if (accept('-'))
                v -= parse_term();
            else
                return v;
        }
    }

    Scalar parse_term() {
        Scalar v = parse_factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                v *= parse_factor();
            } else if (accept('/')) {
                Scalar d = parse_factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    Scalar parse_factor() {
        Scalar v = parse_base();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            std::uint32_t e = parse_uint();
            Scalar r = Scalar::one(ctx_);
            for (std::uint32_t i = 0; i < e; ++i) r *= v;
            return r;
        }
        return v;
    }

    Scalar parse_base() {
        skip_ws();
        if (accept('-')) return -parse_factor();  // '^' binds tighter than unary '-'
        if (accept('(')) {
            Scalar v = parse_expr();
            skip_ws();
            expect(')');
            return v;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = parse_identifier();
            auto idx = ctx_->find(name);
            if (!idx) fail("unknown symbol '" + name + "'");
            return Scalar::variable(ctx_, *idx);
        }
        fail("expected a number, symbol, or parenthesized expression");
        return Scalar::zero(ctx_);  // unreachable
    }

    Scalar parse_rational() {
        Rational n(parse_uint_string());
        // A '/' directly followed by digits is a rational literal; otherwise
        // leave it for term-level division (e.g. "1/a").
        std::size_t save_pos = pos_;
        int save_line = line_, save_col = col_;
        skip_ws();
        if (accept('/')) {
            skip_ws();
            if (pos_ < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                Rational d(parse_uint_string());
                if (d == 0) fail("division by zero");
                return Scalar::from_rational(ctx_, n / d);
            }
        }
        pos_ = save_pos;
        line_ = save_line;
        col_ = save_col;
        return Scalar::from_rational(ctx_, n);
    }

    std::uint32_t parse_uint() {
        std::string digits = parse_uint_string();
        unsigned long long v = 0;
        for (char c : digits) {
            v = v * 10 + (c - '0');
            if (v > 0xffffffffull) fail("exponent too large");
        }
        return static_cast<std::uint32_t>(v);
    }

    std::string parse_uint_string() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a digit");
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            s += advance();
        return s;
    }

    std::string parse_identifier() {
        std::string s;
        s += advance();
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                s += advance();
            else
                break;
        }
        return s;
    }

    char peek() const {
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        return text_[pos_];
    }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line_, col_);
    }

    std::string text_;
    CtxPtr ctx_;
    std::size_t pos_ = 0;
    int line_;
    int col_;
};

inline Scalar parse_expression(const std::string& text, const CtxPtr& ctx,
                               int line_offset = 1, int column_offset = 1) {
    return ExpressionParser(text, ctx, line_offset, column_offset).parse();
}

} // namespace homdef
