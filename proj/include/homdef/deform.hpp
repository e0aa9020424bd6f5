#pragma once

#include <utility>
#include <vector>

#include "homdef/algebra.hpp"

namespace homdef {

// ---------------------------------------------------------------------------
// graded helpers

inline LinearMap map_t_coefficient(const LinearMap& f, std::uint32_t k) {
    LinearMap r(f.dim(), f.ctx());
    for (std::size_t i = 0; i < f.dim(); ++i)
        for (std::size_t j = 0; j < f.dim(); ++j) r.at(i, j) = f.at(i, j).coeff_of_t(k);
    return r;
}

inline LinearMap map_truncate_t(const LinearMap& f, std::uint32_t order) {
    LinearMap r(f.dim(), f.ctx());
    for (std::size_t i = 0; i < f.dim(); ++i)
        for (std::size_t j = 0; j < f.dim(); ++j)
            r.at(i, j) = f.at(i, j).truncate_in_t(order);
    return r;
}

inline MultiplicationTable table_t_coefficient(const MultiplicationTable& t,
                                               std::uint32_t k) {
    MultiplicationTable r(t.dim(), t.ctx());
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            for (std::size_t l = 0; l < t.dim(); ++l)
                r.at(i, j, l) = t.at(i, j, l).coeff_of_t(k);
    return r;
}

inline std::uint32_t map_t_degree(const LinearMap& f) {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < f.dim(); ++i)
        for (std::size_t j = 0; j < f.dim(); ++j)
            d = std::max(d, f.at(i, j).degree_in_t());
    return d;
}

inline bool map_is_t_free(const LinearMap& f) { return map_t_degree(f) == 0; }

inline bool table_is_t_free(const MultiplicationTable& t) {
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            for (std::size_t l = 0; l < t.dim(); ++l)
                if (t.at(i, j, l).degree_in_t() > 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// formal deformations

/// Polynomial family mu_t = mu_0 + sum_i t^i mu_i, alpha_t = alpha_0 + sum_i
/// t^i alpha_i over the base algebra's context (which must carry a
/// deformation symbol). Term tables are constant in t; `order` only bounds
/// the verification degree.
class FormalDeformation {
public:
    FormalDeformation(HomAlgebra base,
                      std::vector<std::pair<std::size_t, MultiplicationTable>> mu_terms,
                      std::vector<std::pair<std::size_t, LinearMap>> alpha_terms,
                      Flavor flavor, std::optional<std::size_t> order = std::nullopt)
        : base_(std::move(base)), mu_terms_(std::move(mu_terms)),
          alpha_terms_(std::move(alpha_terms)), flavor_(flavor) {
        if (!base_.ctx()->deformation_index())
            throw precondition_error("deformation context has no deformation symbol");
        std::size_t max_deg = 0;
        std::vector<bool> seen_mu, seen_alpha;
        for (const auto& [deg, table] : mu_terms_) {
            if (deg == 0) throw precondition_error("term degrees must be >= 1");
            if (table.dim() != base_.dim())
                throw dimension_mismatch("term dimension mismatch");
            require_same_context(table.ctx(), base_.ctx());
            if (!table_is_t_free(table))
                throw precondition_error("term tables must be constant in t");
            if (seen_mu.size() <= deg) seen_mu.resize(deg + 1, false);
            if (seen_mu[deg]) throw precondition_error("duplicate mu term degree");
            seen_mu[deg] = true;
            if (flavor_ == Flavor::malcev && !table.is_skewsymmetric())
                throw flavor_mismatch("malcev deformation terms must be skewsymmetric");
            max_deg = std::max(max_deg, deg);
        }
        for (const auto& [deg, f] : alpha_terms_) {
            if (deg == 0) throw precondition_error("term degrees must be >= 1");
            if (f.dim() != base_.dim())
                throw dimension_mismatch("term dimension mismatch");
            require_same_context(f.ctx(), base_.ctx());
            if (!map_is_t_free(f))
                throw precondition_error("term maps must be constant in t");
            if (seen_alpha.size() <= deg) seen_alpha.resize(deg + 1, false);
            if (seen_alpha[deg]) throw precondition_error("duplicate alpha term degree");
            seen_alpha[deg] = true;
            max_deg = std::max(max_deg, deg);
        }
        if (flavor_ == Flavor::malcev && !base_.mu().is_skewsymmetric())
            throw flavor_mismatch("malcev deformation needs a skewsymmetric base");
        order_ = order.value_or(max_deg);
    }

    const HomAlgebra& base() const { return base_; }
    const std::vector<std::pair<std::size_t, MultiplicationTable>>& mu_terms() const {
        return mu_terms_;
    }
    const std::vector<std::pair<std::size_t, LinearMap>>& alpha_terms() const {
        return alpha_terms_;
    }
    Flavor flavor() const { return flavor_; }
    std::size_t order() const { return order_; }
    std::size_t dim() const { return base_.dim(); }
    const CtxPtr& ctx() const { return base_.ctx(); }

private:
    HomAlgebra base_;
    std::vector<std::pair<std::size_t, MultiplicationTable>> mu_terms_;
    std::vector<std::pair<std::size_t, LinearMap>> alpha_terms_;
    Flavor flavor_;
    std::size_t order_;
};

/// rho_t = id + sum_{i>=1} t^i rho_i.
class FormalAutomorphism {
public:
    FormalAutomorphism(std::size_t dim, CtxPtr ctx,
                       std::vector<std::pair<std::size_t, LinearMap>> terms)
        : dim_(dim), ctx_(std::move(ctx)), terms_(std::move(terms)) {
        for (const auto& [deg, f] : terms_) {
            if (deg == 0)
                throw precondition_error("degree-0 part of rho_t is implicitly id");
            if (f.dim() != dim_) throw dimension_mismatch("rho term dimension mismatch");
            require_same_context(f.ctx(), ctx_);
        }
    }

    std::size_t dim() const { return dim_; }
    const CtxPtr& ctx() const { return ctx_; }
    const std::vector<std::pair<std::size_t, LinearMap>>& terms() const { return terms_; }

    /// id + sum t^i rho_i as a single matrix over the context.
    LinearMap full_map() const {
        if (!ctx_->deformation_index())
            throw precondition_error("context has no deformation symbol");
        std::size_t t = *ctx_->deformation_index();
        LinearMap r = LinearMap::identity(dim_, ctx_);
        for (const auto& [deg, f] : terms_) {
            Scalar tpow = Scalar::from_poly(
                Polynomial::variable(ctx_, t, static_cast<std::uint32_t>(deg)));
            r = r.plus(f.scaled(tpow));
        }
        return r;
    }

    /// Truncated inverse as a formal automorphism: the Neumann series of
    /// (id + N)^{-1} cut at the given t-order.
    FormalAutomorphism truncated_inverse(std::uint32_t order) const {
        LinearMap inv = truncated_inverse_map(order);
        std::vector<std::pair<std::size_t, LinearMap>> terms;
        for (std::uint32_t k = 1; k <= order; ++k) {
            LinearMap ck = map_t_coefficient(inv, k);
            if (!ck.is_zero()) terms.emplace_back(k, ck);
        }
        return FormalAutomorphism(dim_, ctx_, std::move(terms));
    }

    LinearMap truncated_inverse_map(std::uint32_t order) const {
        LinearMap full = full_map();
        LinearMap n = full.minus(LinearMap::identity(dim_, ctx_));
        LinearMap acc = LinearMap::identity(dim_, ctx_);
        LinearMap pow = LinearMap::identity(dim_, ctx_);
        for (std::uint32_t k = 1; k <= order; ++k) {
            pow = map_truncate_t(pow.compose(n), order);
            if (pow.is_zero()) break;
            acc = (k % 2 == 1) ? acc.minus(pow) : acc.plus(pow);
        }
        return acc;
    }

private:
    std::size_t dim_;
    CtxPtr ctx_;
    std::vector<std::pair<std::size_t, LinearMap>> terms_;
};

// ---------------------------------------------------------------------------
// constructions

/// (A, alpha∘mu, alpha) for an algebra endomorphism alpha of mu. By default
/// the input must carry the identity twist; allow_twisted_base constructs
/// (A, alpha∘mu, alpha∘alpha_old) without any closure guarantee.
inline HomAlgebra yau_twist(const HomAlgebra& A, const LinearMap& alpha,
                            bool allow_twisted_base = false) {
    CheckReport endo = check_algebra_endomorphism(A, alpha, 1);
    if (!endo.pass) {
        std::string where = endo.witnesses.empty() ? "?" : endo.witnesses[0].where;
        throw precondition_error(
            "twist map is not an algebra endomorphism; first witness at " + where);
    }
    if (!A.alpha().is_identity() && !allow_twisted_base)
        throw precondition_error(
            "yau_twist expects an identity-twist base (pass the override to compose)");
    LinearMap new_twist =
        allow_twisted_base && !A.alpha().is_identity() ? alpha.compose(A.alpha()) : alpha;
    return HomAlgebra(A.labels(), compose_map_table(alpha, A.mu()), new_twist, A.hint());
}

struct UntwistResult {
    HomAlgebra algebra;
    CheckReport endomorphism_report;  // is the old twist an endomorphism of mu~?
};

/// mu~ = alpha^{-1}∘mu with identity twist; the report says whether alpha is
/// an endomorphism of mu~ (i.e. whether the input really was a Yau twist).
inline UntwistResult untwist(const HomAlgebra& A) {
    LinearMap inv = [&] {
        try {
            return A.alpha().inverse();
        } catch (const precondition_error&) {
            throw precondition_error("untwist needs an invertible twist map");
        }
    }();
    HomAlgebra plain(A.labels(), compose_map_table(inv, A.mu()),
                     LinearMap::identity(A.dim(), A.ctx()), A.hint());
    CheckReport endo = check_algebra_endomorphism(plain, A.alpha());
    return {std::move(plain), std::move(endo)};
}

/// nth derived Hom-algebra. Type 1: (A, alpha^n∘mu, alpha^{n+1});
/// type 2: (A, alpha^{2^n-1}∘mu, alpha^{2^n}). Requires a multiplicative
/// algebra; n = 0 returns A unchanged.
inline HomAlgebra derived_algebra(const HomAlgebra& A, std::size_t n, int type) {
    if (type != 1 && type != 2) throw precondition_error("derived type must be 1 or 2");
    CheckReport mult = check_identity(A, IdentityKind::multiplicative, 1);
    if (!mult.pass)
        throw precondition_error("derived algebras need a multiplicative input");
    if (n == 0) return A;
    std::size_t k_mu, k_alpha;
    if (type == 1) {
        k_mu = n;
        k_alpha = n + 1;
    } else {
        if (n > 20) throw precondition_error("derived type-2 order too large");
        k_mu = (std::size_t{1} << n) - 1;
        k_alpha = std::size_t{1} << n;
    }
    LinearMap am = A.alpha().power(k_mu);
    return HomAlgebra(A.labels(), compose_map_table(am, A.mu()),
                      A.alpha().power(k_alpha), A.hint());
}

/// mu_t = alpha_t∘mu for an endomorphism family alpha_t = id + sum t^i a_i
/// of a plain algebra. The endomorphism property is checked identically in
/// all parameters.
inline FormalDeformation composition_deformation(const HomAlgebra& A_plain,
                                                 const LinearMap& alpha_t) {
    require_same_context(A_plain.ctx(), alpha_t.ctx());
    if (!A_plain.ctx()->deformation_index())
        throw precondition_error("context has no deformation symbol");
    if (!A_plain.alpha().is_identity())
        throw precondition_error("composition deformation starts from an identity twist");
    if (!table_is_t_free(A_plain.mu()))
        throw precondition_error("the base multiplication must be constant in t");
    if (!map_t_coefficient(alpha_t, 0).is_identity())
        throw precondition_error("degree-0 part of the endomorphism family is not id");
    CheckReport endo = check_algebra_endomorphism(A_plain, alpha_t, 1);
    if (!endo.pass) {
        std::string where = endo.witnesses.empty() ? "?" : endo.witnesses[0].where;
        throw precondition_error(
            "alpha_t is not an endomorphism identically; first witness at " + where);
    }

    Flavor flavor;
    if (A_plain.mu().is_skewsymmetric()) {
        if (!check_identity(A_plain, IdentityKind::hom_malcev, 1).pass)
            throw precondition_error("base bracket fails the Malcev identity");
        flavor = Flavor::malcev;
    } else {
        if (!check_identity(A_plain, IdentityKind::left_alt, 1).pass)
            throw precondition_error("base multiplication fails left alternativity");
        flavor = Flavor::alternative;
    }

    std::uint32_t p = map_t_degree(alpha_t);
    std::vector<std::pair<std::size_t, MultiplicationTable>> mu_terms;
    std::vector<std::pair<std::size_t, LinearMap>> alpha_terms;
    for (std::uint32_t i = 1; i <= p; ++i) {
        LinearMap ai = map_t_coefficient(alpha_t, i);
        if (ai.is_zero()) continue;
        alpha_terms.emplace_back(i, ai);
        MultiplicationTable mi = compose_map_table(ai, A_plain.mu());
        bool zero = true;
        for (std::size_t a = 0; a < mi.dim() && zero; ++a)
            for (std::size_t b = 0; b < mi.dim() && zero; ++b)
                if (!vec_is_zero(mi.product_of_basis(a, b))) zero = false;
        if (!zero) mu_terms.emplace_back(i, mi);
    }
    return FormalDeformation(A_plain, std::move(mu_terms), std::move(alpha_terms),
                             flavor, p);
}

/// Realizes mu_t, alpha_t as one algebra over the context containing t.
inline HomAlgebra deformation_to_algebra(const FormalDeformation& D) {
    const CtxPtr& ctx = D.ctx();
    std::size_t t = *ctx->deformation_index();
    MultiplicationTable mu = D.base().mu();
    for (const auto& [deg, table] : D.mu_terms()) {
        Scalar tpow = Scalar::from_poly(
            Polynomial::variable(ctx, t, static_cast<std::uint32_t>(deg)));
        for (std::size_t i = 0; i < mu.dim(); ++i)
            for (std::size_t j = 0; j < mu.dim(); ++j)
                for (std::size_t k = 0; k < mu.dim(); ++k) {
                    const Scalar& c = table.at(i, j, k);
                    if (!c.is_zero()) mu.at(i, j, k) += tpow * c;
                }
    }
    LinearMap alpha = D.base().alpha();
    for (const auto& [deg, f] : D.alpha_terms()) {
        Scalar tpow = Scalar::from_poly(
            Polynomial::variable(ctx, t, static_cast<std::uint32_t>(deg)));
        alpha = alpha.plus(f.scaled(tpow));
    }
    FlavorHint hint =
        D.flavor() == Flavor::malcev ? FlavorHint::malcev : D.base().hint();
    return HomAlgebra(D.base().labels(), std::move(mu), std::move(alpha), hint);
}

// ---------------------------------------------------------------------------
// deformation-equation verification

struct DegreeResidual {
    std::size_t degree;
    bool pass;
    std::vector<Witness> witnesses;
};

struct DeformationCheckReport {
    bool pass = true;
    std::vector<DegreeResidual> degrees;
    CheckReport as_check_report() const {
        CheckReport rep;
        for (const auto& d : degrees)
            for (const auto& w : d.witnesses)
                rep.add_violation("t^" + std::to_string(d.degree) + " " + w.where,
                                  w.residual, 0);
        return rep;
    }
};

/// Verifies the flavor's defining identity for mu_t, alpha_t with t a
/// polynomial symbol, reporting the residual of every t-degree <= up_to.
/// Both flavors are expanded on generic (fresh-indeterminate) vectors.
inline DeformationCheckReport check_deformation_equation(const FormalDeformation& D,
                                                         std::size_t up_to) {
    HomAlgebra A_t = deformation_to_algebra(D);
    GenericVectors g = make_generic_vectors(A_t, {"x", "y", "z"});
    const HomAlgebra& L = g.lifted;
    const VecS &X = g.vecs[0], &Y = g.vecs[1], &Z = g.vecs[2];

    VecS residual;
    if (D.flavor() == Flavor::alternative) {
        // linearized left Hom-alternativity of the deformed family
        VecS r = vec_add(hom_associator(L, X, Y, Z), hom_associator(L, Y, X, Z));
        residual = std::move(r);
    } else {
        VecS lhs = hom_jacobiator(L, L.alpha().apply(X), L.alpha().apply(Y),
                                  evaluate_mu(L, X, Z));
        VecS rhs = evaluate_mu(L, hom_jacobiator(L, X, Y, Z),
                               L.alpha().apply(L.alpha().apply(X)));
        residual = vec_sub(lhs, rhs);
    }

    DeformationCheckReport rep;
    for (std::size_t k = 0; k <= up_to; ++k) {
        DegreeResidual dr{k, true, {}};
        VecS rk;
        bool nonzero = false;
        for (const auto& comp : residual) {
            Scalar ck = comp.coeff_of_t(static_cast<std::uint32_t>(k));
            if (!ck.is_zero()) nonzero = true;
            rk.push_back(std::move(ck));
        }
        if (nonzero) {
            dr.pass = false;
            dr.witnesses.push_back({"(x,y,z) generic", std::move(rk)});
            rep.pass = false;
        }
        rep.degrees.push_back(std::move(dr));
    }
    return rep;
}

/// Transports D along rho_t: mu' = rho∘mu∘(rho^{-1} ⊗ rho^{-1}),
/// alpha' = rho∘alpha∘rho^{-1}, all truncated at the given order.
inline FormalDeformation apply_equivalence(const FormalDeformation& D,
                                           const FormalAutomorphism& rho,
                                           std::uint32_t up_to) {
    if (rho.dim() != D.dim()) throw dimension_mismatch("rho dimension mismatch");
    require_same_context(rho.ctx(), D.ctx());
    HomAlgebra A_t = deformation_to_algebra(D);
    LinearMap R = map_truncate_t(rho.full_map(), up_to);
    LinearMap Rinv = rho.truncated_inverse_map(up_to);

    MultiplicationTable mu_p(D.dim(), D.ctx());
    for (std::size_t i = 0; i < D.dim(); ++i)
        for (std::size_t j = 0; j < D.dim(); ++j) {
            VecS prod = evaluate_mu(A_t, Rinv.column(i), Rinv.column(j));
            VecS img = R.apply(prod);
            for (std::size_t k = 0; k < D.dim(); ++k)
                mu_p.at(i, j, k) = img[k].truncate_in_t(up_to);
        }
    LinearMap alpha_p = R.compose(A_t.alpha()).compose(Rinv);
    alpha_p = map_truncate_t(alpha_p, up_to);

    MultiplicationTable mu0 = table_t_coefficient(mu_p, 0);
    if (!mu0.equal(D.base().mu()))
        throw error("equivalence transport changed the degree-0 multiplication");
    LinearMap alpha0 = map_t_coefficient(alpha_p, 0);

    std::vector<std::pair<std::size_t, MultiplicationTable>> mu_terms;
    std::vector<std::pair<std::size_t, LinearMap>> alpha_terms;
    for (std::uint32_t k = 1; k <= up_to; ++k) {
        MultiplicationTable mk = table_t_coefficient(mu_p, k);
        bool zero = true;
        for (std::size_t a = 0; a < mk.dim() && zero; ++a)
            for (std::size_t b = 0; b < mk.dim() && zero; ++b)
                if (!vec_is_zero(mk.product_of_basis(a, b))) zero = false;
        if (!zero) mu_terms.emplace_back(k, mk);
        LinearMap ak = map_t_coefficient(alpha_p, k);
        if (!ak.is_zero()) alpha_terms.emplace_back(k, ak);
    }
    HomAlgebra base(D.base().labels(), std::move(mu0), std::move(alpha0),
                    D.base().hint());
    return FormalDeformation(std::move(base), std::move(mu_terms),
                             std::move(alpha_terms), D.flavor(), up_to);
}

} // namespace homdef
