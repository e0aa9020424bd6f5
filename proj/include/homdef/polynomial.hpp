#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homdef/context.hpp"
#include "homdef/error.hpp"

namespace homdef {

/// Arbitrary-precision rational coefficient type.
using Rational = boost::multiprecision::cpp_rational;

/// Exponent vector, one entry per context symbol.
using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over Q. Terms are kept in ascending
/// lexicographic order of the exponent vectors; no zero coefficient is
/// ever stored, so the zero polynomial is the empty term map.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Polynomial(CtxPtr ctx) : ctx_(std::move(ctx)) {}

    static Polynomial zero(CtxPtr ctx) { return Polynomial(std::move(ctx)); }

    static Polynomial constant(CtxPtr ctx, const Rational& c) {
        Polynomial p(std::move(ctx));
        if (c != 0) p.terms_[Monomial(p.ctx_->size(), 0)] = c;
        return p;
    }

    static Polynomial variable(CtxPtr ctx, std::size_t index, std::uint32_t power = 1) {
        Polynomial p(std::move(ctx));
        if (index >= p.ctx_->size()) throw error("variable index out of range");
        Monomial m(p.ctx_->size(), 0);
        m[index] = power;
        if (power == 0)
            p.terms_[Monomial(p.ctx_->size(), 0)] = 1;
        else
            p.terms_[m] = 1;
        return p;
    }

    const CtxPtr& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const Monomial& m = terms_.begin()->first;
        for (auto e : m)
            if (e != 0) return false;
        return true;
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw error("polynomial is not constant");
        return terms_.begin()->second;
    }

    bool operator==(const Polynomial& other) const {
        return same_context(ctx_, other.ctx_) && terms_ == other.terms_;
    }

    Polynomial operator-() const {
        Polynomial r(ctx_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& other) {
        require_same_context(ctx_, other.ctx_);
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other) {
        require_same_context(ctx_, other.ctx_);
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_context(a.ctx_, b.ctx_);
        Polynomial r(a.ctx_);
        if (a.is_zero() || b.is_zero()) return r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma.size());
                for (std::size_t i = 0; i < ma.size(); ++i) {
                    std::uint64_t e = std::uint64_t(ma[i]) + std::uint64_t(mb[i]);
                    if (e > 0xffffffffull) throw error("exponent overflow");
                    m[i] = static_cast<std::uint32_t>(e);
                }
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    Polynomial scaled(const Rational& c) const {
        Polynomial r(ctx_);
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }

    Polynomial pow(std::uint32_t n) const {
        Polynomial r = constant(ctx_, 1);
        for (std::uint32_t i = 0; i < n; ++i) r *= *this;
        return r;
    }

    std::uint32_t degree_in(std::size_t index) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.at(index));
        return d;
    }

    /// Coefficient of symbol^k, as a polynomial with that symbol's slot zeroed.
    Polynomial coeff_of(std::size_t index, std::uint32_t k) const {
        Polynomial r(ctx_);
        for (const auto& [m, c] : terms_) {
            if (m.at(index) != k) continue;
            Monomial m2 = m;
            m2[index] = 0;
            r.add_term(m2, c);
        }
        return r;
    }

    /// Drops every term whose degree in the given symbol exceeds `order`.
    Polynomial truncate_in(std::size_t index, std::uint32_t order) const {
        Polynomial r(ctx_);
        for (const auto& [m, c] : terms_)
            if (m.at(index) <= order) r.add_term(m, c);
        return r;
    }

    bool depends_on(std::size_t index) const { return degree_in(index) > 0; }

    /// Substitutes rationals for the given symbol indices; the result stays
    /// in the same context (the bound slots simply no longer occur).
    Polynomial substitute_keep(const std::map<std::size_t, Rational>& bindings) const {
        Polynomial r(ctx_);
        for (const auto& [m, c] : terms_) {
            Rational coeff = c;
            Monomial m2 = m;
            for (const auto& [idx, val] : bindings) {
                for (std::uint32_t e = 0; e < m.at(idx); ++e) coeff *= val;
                m2[idx] = 0;
            }
            r.add_term(m2, coeff);
        }
        return r;
    }

    /// Re-expresses the polynomial in another context; `index_map[i]` is the
    /// position of old symbol i in the new context.
    Polynomial mapped(const CtxPtr& new_ctx, const std::vector<std::size_t>& index_map) const {
        Polynomial r(new_ctx);
        for (const auto& [m, c] : terms_) {
            Monomial m2(new_ctx->size(), 0);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                m2.at(index_map.at(i)) = m[i];
            }
            r.add_term(m2, c);
        }
        return r;
    }

    /// Leading coefficient with respect to descending lexicographic order.
    Rational leading_coefficient() const {
        if (terms_.empty()) return Rational(0);
        return terms_.rbegin()->second;
    }

    /// Canonical rendering: terms in descending lexicographic order.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Monomial& m = it->first;
            Rational c = it->second;
            bool neg = c < 0;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            if (neg) c = -c;
            std::string vars = monomial_str(m);
            if (vars.empty()) {
                os << c;
            } else {
                if (c != 1) os << c << "*";
                os << vars;
            }
        }
        return os.str();
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::string monomial_str(const Monomial& m) const {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += ctx_->symbol(i);
            if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
        return s;
    }

    CtxPtr ctx_;
    TermMap terms_;
};

} // namespace homdef
