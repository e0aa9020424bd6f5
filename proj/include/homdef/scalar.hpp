#pragma once

#include <map>
#include <string>

#include "homdef/polynomial.hpp"

namespace homdef {

/// Element of the rational-function field Q(symbols): a fraction of
/// polynomials. Fractions are not reduced to lowest terms; equality is the
/// cross-multiplication test. The only normalization applied is by content:
/// the denominator is scaled monic (so numeric values always carry
/// denominator 1) and 0/d collapses to 0/1.
class Scalar {
public:
    explicit Scalar(CtxPtr ctx)
        : num_(Polynomial::zero(ctx)), den_(Polynomial::constant(ctx, 1)) {}

    Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        require_same_context(num_.ctx(), den_.ctx());
        if (den_.is_zero()) throw division_by_zero("zero denominator");
        normalize();
    }

    static Scalar zero(CtxPtr ctx) { return Scalar(std::move(ctx)); }
    static Scalar one(CtxPtr ctx) { return from_rational(std::move(ctx), 1); }

    static Scalar from_rational(CtxPtr ctx, const Rational& c) {
        return Scalar(Polynomial::constant(ctx, c), Polynomial::constant(ctx, 1));
    }

    static Scalar from_poly(Polynomial p) {
        CtxPtr ctx = p.ctx();
        return Scalar(std::move(p), Polynomial::constant(ctx, 1));
    }

    static Scalar variable(CtxPtr ctx, std::size_t index) {
        return from_poly(Polynomial::variable(std::move(ctx), index));
    }

    const CtxPtr& ctx() const { return num_.ctx(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    bool is_numeric() const { return num_.is_constant() && den_.is_constant(); }

    Rational rational_value() const {
        if (!is_numeric()) throw not_numeric("scalar is not numeric");
        return num_.constant_value() / den_.constant_value();
    }

    bool den_is_one() const { return den_.is_constant(); }

    Scalar operator-() const { return Scalar(-num_, den_, no_normalize{}); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        require_same_context(a.ctx(), b.ctx());
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        require_same_context(a.ctx(), b.ctx());
        if (a.is_zero() || b.is_zero()) return zero(a.ctx());
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        require_same_context(a.ctx(), b.ctx());
        if (b.is_zero()) throw division_by_zero("division by zero scalar");
        if (a.is_zero()) return zero(a.ctx());
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    /// Field equality by cross multiplication.
    bool eq(const Scalar& other) const {
        require_same_context(ctx(), other.ctx());
        if (den_ == other.den_) return num_ == other.num_;
        return (num_ * other.den_ - other.num_ * den_).is_zero();
    }

    /// Binds some symbols to rationals; the result lives in the reduced
    /// context of the unbound symbols. Throws singular_specialization when
    /// the denominator vanishes under the binding.
    Scalar substitute(const std::map<std::string, Rational>& bindings) const {
        std::map<std::size_t, Rational> by_index;
        for (const auto& [name, val] : bindings) {
            auto idx = ctx()->find(name);
            if (!idx) throw error("bound symbol '" + name + "' is not in the context");
            by_index[*idx] = val;
        }
        Polynomial n = num_.substitute_keep(by_index);
        Polynomial d = den_.substitute_keep(by_index);
        if (d.is_zero())
            throw singular_specialization("denominator vanishes under the binding");

        std::vector<std::string> kept;
        std::vector<std::size_t> index_map(ctx()->size(), 0);
        for (std::size_t i = 0; i < ctx()->size(); ++i) {
            if (by_index.count(i)) continue;
            index_map[i] = kept.size();
            kept.push_back(ctx()->symbol(i));
        }
        std::optional<std::string> def = ctx()->deformation_symbol();
        if (def && bindings.count(*def)) def = std::nullopt;
        CtxPtr reduced = make_context(kept, def);
        return Scalar(n.mapped(reduced, index_map), d.mapped(reduced, index_map));
    }

    /// Re-expresses the scalar in a larger context.
    Scalar mapped(const CtxPtr& new_ctx, const std::vector<std::size_t>& index_map) const {
        return Scalar(num_.mapped(new_ctx, index_map), den_.mapped(new_ctx, index_map),
                      no_normalize{});
    }

    /// Drops numerator monomials of degree > order in the deformation symbol.
    /// Requires a denominator free of that symbol.
    Scalar truncate_in_t(std::uint32_t order) const {
        std::size_t t = deformation_index_checked();
        return Scalar(num_.truncate_in(t, order), den_, no_normalize{});
    }

    /// Coefficient of t^k (deformation symbol), as a scalar over the same
    /// context. Requires a denominator free of t.
    Scalar coeff_of_t(std::uint32_t k) const {
        std::size_t t = deformation_index_checked();
        return Scalar(num_.coeff_of(t, k), den_);
    }

    std::uint32_t degree_in_t() const {
        std::size_t t = deformation_index_checked();
        return num_.degree_in(t);
    }

    std::string str() const {
        if (den_.is_constant()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    struct no_normalize {};
    Scalar(Polynomial num, Polynomial den, no_normalize)
        : num_(std::move(num)), den_(std::move(den)) {
        if (num_.is_zero() && !den_.is_constant())
            den_ = Polynomial::constant(num_.ctx(), 1);
    }

    std::size_t deformation_index_checked() const {
        auto t = ctx()->deformation_index();
        if (!t) throw error("context has no deformation symbol");
        if (den_.depends_on(*t))
            throw error("unsupported: denominator depends on the deformation symbol");
        return *t;
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(num_.ctx(), 1);
            return;
        }
        Rational lead = den_.leading_coefficient();
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Polynomial num_;
    Polynomial den_;
};

inline bool scalar_eq(const Scalar& a, const Scalar& b) { return a.eq(b); }

} // namespace homdef
