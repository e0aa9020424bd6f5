#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "homdef/linalg.hpp"

namespace homdef {

enum class FlavorHint { general, alternative, malcev };
enum class Flavor { alternative, malcev };

inline std::string flavor_name(Flavor f) {
    return f == Flavor::alternative ? "alternative" : "malcev";
}

// ---------------------------------------------------------------------------
// small vector helpers

inline VecS zero_vec(std::size_t dim, const CtxPtr& ctx) {
    return VecS(dim, Scalar::zero(ctx));
}

inline VecS unit_vec(std::size_t dim, std::size_t i, const CtxPtr& ctx) {
    VecS v = zero_vec(dim, ctx);
    v.at(i) = Scalar::one(ctx);
    return v;
}

inline VecS vec_add(const VecS& a, const VecS& b) {
    VecS r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline VecS vec_sub(const VecS& a, const VecS& b) {
    VecS r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline VecS vec_neg(const VecS& a) {
    VecS r = a;
    for (auto& e : r) e = -e;
    return r;
}

inline bool vec_is_zero(const VecS& a) {
    for (const auto& e : a)
        if (!e.is_zero()) return false;
    return true;
}

inline std::string vec_str(const VecS& v, const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + v[i].str() + ")*" + labels.at(i);
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// multiplication tables and linear maps

/// Structure constants c[i][j][k] with mu(e_i, e_j) = sum_k c[i][j][k] e_k.
/// Unspecified products are zero.
class MultiplicationTable {
public:
    MultiplicationTable(std::size_t dim, CtxPtr ctx)
        : dim_(dim), ctx_(std::move(ctx)), c_(dim * dim * dim, Scalar::zero(ctx_)) {}

    std::size_t dim() const { return dim_; }
    const CtxPtr& ctx() const { return ctx_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return c_.at((i * dim_ + j) * dim_ + k);
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c_.at((i * dim_ + j) * dim_ + k);
    }

    VecS product_of_basis(std::size_t i, std::size_t j) const {
        VecS v;
        v.reserve(dim_);
        for (std::size_t k = 0; k < dim_; ++k) v.push_back(at(i, j, k));
        return v;
    }

    bool is_skewsymmetric() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!(at(i, j, k) + at(j, i, k)).is_zero()) return false;
        return true;
    }

    bool is_numeric() const {
        for (const auto& e : c_)
            if (!e.is_numeric()) return false;
        return true;
    }

    MultiplicationTable mapped(const CtxPtr& new_ctx,
                               const std::vector<std::size_t>& index_map) const {
        MultiplicationTable t(dim_, new_ctx);
        for (std::size_t n = 0; n < c_.size(); ++n)
            t.c_[n] = c_[n].mapped(new_ctx, index_map);
        return t;
    }

    MultiplicationTable substituted(const std::map<std::string, Rational>& bindings) const {
        if (bindings.empty()) return *this;
        CtxPtr rc = c_.front().substitute(bindings).ctx();
        MultiplicationTable t(dim_, rc);
        for (std::size_t n = 0; n < c_.size(); ++n) t.c_[n] = c_[n].substitute(bindings);
        return t;
    }

    bool equal(const MultiplicationTable& other) const {
        if (dim_ != other.dim_) return false;
        for (std::size_t n = 0; n < c_.size(); ++n)
            if (!c_[n].eq(other.c_[n])) return false;
        return true;
    }

private:
    std::size_t dim_;
    CtxPtr ctx_;
    std::vector<Scalar> c_;
};

/// Linear map given by its matrix; column j holds the image of e_j.
class LinearMap {
public:
    LinearMap(std::size_t dim, CtxPtr ctx)
        : dim_(dim), ctx_(std::move(ctx)), m_(dim * dim, Scalar::zero(ctx_)) {}

    static LinearMap identity(std::size_t dim, const CtxPtr& ctx) {
        LinearMap f(dim, ctx);
        for (std::size_t i = 0; i < dim; ++i) f.at(i, i) = Scalar::one(ctx);
        return f;
    }

    std::size_t dim() const { return dim_; }
    const CtxPtr& ctx() const { return ctx_; }

    Scalar& at(std::size_t i, std::size_t j) { return m_.at(i * dim_ + j); }
    const Scalar& at(std::size_t i, std::size_t j) const { return m_.at(i * dim_ + j); }

    VecS apply(const VecS& v) const {
        if (v.size() != dim_) throw dimension_mismatch("map applied to wrong length");
        VecS out = zero_vec(dim_, ctx_);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < dim_; ++i)
                if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
        }
        return out;
    }

    VecS column(std::size_t j) const {
        VecS v;
        v.reserve(dim_);
        for (std::size_t i = 0; i < dim_; ++i) v.push_back(at(i, j));
        return v;
    }

    /// this ∘ other.
    LinearMap compose(const LinearMap& other) const {
        require_same_context(ctx_, other.ctx_);
        if (dim_ != other.dim_) throw dimension_mismatch("composition size mismatch");
        LinearMap r(dim_, ctx_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                Scalar s = Scalar::zero(ctx_);
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!at(i, k).is_zero() && !other.at(k, j).is_zero())
                        s += at(i, k) * other.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }

    LinearMap power(std::size_t n) const {
        LinearMap r = identity(dim_, ctx_);
        for (std::size_t i = 0; i < n; ++i) r = r.compose(*this);
        return r;
    }

    LinearMap plus(const LinearMap& other) const {
        require_same_context(ctx_, other.ctx_);
        LinearMap r = *this;
        for (std::size_t n = 0; n < m_.size(); ++n) r.m_[n] += other.m_[n];
        return r;
    }

    LinearMap minus(const LinearMap& other) const {
        require_same_context(ctx_, other.ctx_);
        LinearMap r = *this;
        for (std::size_t n = 0; n < m_.size(); ++n) r.m_[n] -= other.m_[n];
        return r;
    }

    LinearMap scaled(const Scalar& s) const {
        LinearMap r = *this;
        for (auto& e : r.m_) e *= s;
        return r;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                Scalar expect = i == j ? Scalar::one(ctx_) : Scalar::zero(ctx_);
                if (!at(i, j).eq(expect)) return false;
            }
        return true;
    }

    bool is_zero() const {
        for (const auto& e : m_)
            if (!e.is_zero()) return false;
        return true;
    }

    bool is_numeric() const {
        for (const auto& e : m_)
            if (!e.is_numeric()) return false;
        return true;
    }

    bool equal(const LinearMap& other) const {
        if (dim_ != other.dim_) return false;
        for (std::size_t n = 0; n < m_.size(); ++n)
            if (!m_[n].eq(other.m_[n])) return false;
        return true;
    }

    /// Exact inverse; throws precondition_error when singular.
    LinearMap inverse() const {
        Matrix aug(dim_, 2 * dim_, ctx_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, dim_ + i) = Scalar::one(ctx_);
        }
        RrefResult r = rref(aug);
        if (r.pivot_columns.size() != dim_ || r.pivot_columns.back() >= dim_)
            throw precondition_error("singular linear map");
        LinearMap inv(dim_, ctx_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                inv.at(i, j) = r.reduced.at(i, dim_ + j);
        return inv;
    }

    LinearMap mapped(const CtxPtr& new_ctx,
                     const std::vector<std::size_t>& index_map) const {
        LinearMap f(dim_, new_ctx);
        for (std::size_t n = 0; n < m_.size(); ++n)
            f.m_[n] = m_[n].mapped(new_ctx, index_map);
        return f;
    }

    LinearMap substituted(const std::map<std::string, Rational>& bindings) const {
        if (bindings.empty()) return *this;
        CtxPtr rc = m_.front().substitute(bindings).ctx();
        LinearMap f(dim_, rc);
        for (std::size_t n = 0; n < m_.size(); ++n) f.m_[n] = m_[n].substitute(bindings);
        return f;
    }

private:
    std::size_t dim_;
    CtxPtr ctx_;
    std::vector<Scalar> m_;
};

/// mu' = f ∘ mu as a table: c'[i][j][k] = sum_m c[i][j][m] f[k][m].
inline MultiplicationTable compose_map_table(const LinearMap& f,
                                             const MultiplicationTable& t) {
    require_same_context(f.ctx(), t.ctx());
    if (f.dim() != t.dim()) throw dimension_mismatch("map/table size mismatch");
    std::size_t d = t.dim();
    MultiplicationTable r(d, t.ctx());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            VecS img = f.apply(t.product_of_basis(i, j));
            for (std::size_t k = 0; k < d; ++k) r.at(i, j, k) = img[k];
        }
    return r;
}

// ---------------------------------------------------------------------------
// the Hom-algebra record

inline std::vector<std::string> default_labels(std::size_t dim) {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < dim; ++i) l.push_back("e" + std::to_string(i));
    return l;
}

/// A Hom-algebra (A, mu, alpha) over a parameter context.
class HomAlgebra {
public:
    HomAlgebra(std::vector<std::string> basis_labels, MultiplicationTable mu,
               LinearMap alpha, FlavorHint hint = FlavorHint::general)
        : labels_(std::move(basis_labels)), mu_(std::move(mu)), alpha_(std::move(alpha)),
          hint_(hint) {
        if (labels_.size() != mu_.dim() || alpha_.dim() != mu_.dim())
            throw dimension_mismatch("inconsistent algebra dimensions");
        require_same_context(mu_.ctx(), alpha_.ctx());
        if (hint_ == FlavorHint::malcev && !mu_.is_skewsymmetric())
            throw flavor_mismatch("malcev flavor requires a skewsymmetric table");
    }

    std::size_t dim() const { return mu_.dim(); }
    const CtxPtr& ctx() const { return mu_.ctx(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const MultiplicationTable& mu() const { return mu_; }
    const LinearMap& alpha() const { return alpha_; }
    FlavorHint hint() const { return hint_; }

    bool is_numeric() const { return mu_.is_numeric() && alpha_.is_numeric(); }

    HomAlgebra with_alpha(LinearMap a) const {
        return HomAlgebra(labels_, mu_, std::move(a), hint_);
    }

    HomAlgebra with_identity_twist() const {
        return with_alpha(LinearMap::identity(dim(), ctx()));
    }

    HomAlgebra mapped(const CtxPtr& new_ctx,
                      const std::vector<std::size_t>& index_map) const {
        return HomAlgebra(labels_, mu_.mapped(new_ctx, index_map),
                          alpha_.mapped(new_ctx, index_map), hint_);
    }

    HomAlgebra substituted(const std::map<std::string, Rational>& bindings) const {
        return HomAlgebra(labels_, mu_.substituted(bindings),
                          alpha_.substituted(bindings), hint_);
    }

    std::size_t label_index(const std::string& name) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == name) return i;
        throw error("unknown basis label '" + name + "'");
    }

private:
    std::vector<std::string> labels_;
    MultiplicationTable mu_;
    LinearMap alpha_;
    FlavorHint hint_;
};

// ---------------------------------------------------------------------------
// evaluation

/// Bilinear extension of the structure constants.
inline VecS evaluate_mu(const HomAlgebra& A, const VecS& x, const VecS& y) {
    if (x.size() != A.dim() || y.size() != A.dim())
        throw dimension_mismatch("vector length does not match the algebra");
    VecS out = zero_vec(A.dim(), A.ctx());
    for (std::size_t i = 0; i < A.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < A.dim(); ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < A.dim(); ++k) {
                const Scalar& c = A.mu().at(i, j, k);
                if (!c.is_zero()) out[k] += xy * c;
            }
        }
    }
    return out;
}

/// as_alpha(x,y,z) = mu(alpha(x), mu(y,z)) - mu(mu(x,y), alpha(z)).
inline VecS hom_associator(const HomAlgebra& A, const VecS& x, const VecS& y,
                           const VecS& z) {
    return vec_sub(evaluate_mu(A, A.alpha().apply(x), evaluate_mu(A, y, z)),
                   evaluate_mu(A, evaluate_mu(A, x, y), A.alpha().apply(z)));
}

/// J_alpha(x,y,z) = [[x,y],alpha(z)] + [[y,z],alpha(x)] + [[z,x],alpha(y)].
/// Requires a skewsymmetric table.
inline VecS hom_jacobiator(const HomAlgebra& A, const VecS& x, const VecS& y,
                           const VecS& z) {
    if (!A.mu().is_skewsymmetric())
        throw flavor_mismatch("hom_jacobiator needs a skewsymmetric table");
    VecS s = evaluate_mu(A, evaluate_mu(A, x, y), A.alpha().apply(z));
    s = vec_add(s, evaluate_mu(A, evaluate_mu(A, y, z), A.alpha().apply(x)));
    s = vec_add(s, evaluate_mu(A, evaluate_mu(A, z, x), A.alpha().apply(y)));
    return s;
}

// ---------------------------------------------------------------------------
// check reports

struct Witness {
    std::string where;
    VecS residual;
};

struct CheckReport {
    bool pass = true;
    std::vector<Witness> witnesses;
    bool truncated = false;  // more witnesses existed than were recorded
    std::size_t violation_count = 0;

    void add_violation(std::string where, VecS residual, std::size_t max_witnesses) {
        pass = false;
        ++violation_count;
        if (max_witnesses == 0 || witnesses.size() < max_witnesses)
            witnesses.push_back({std::move(where), std::move(residual)});
        else
            truncated = true;
    }

    void merge(const CheckReport& other, std::size_t max_witnesses) {
        if (!other.pass) pass = false;
        if (other.truncated) truncated = true;
        violation_count += other.violation_count;
        for (const auto& w : other.witnesses) {
            if (max_witnesses == 0 || witnesses.size() < max_witnesses)
                witnesses.push_back(w);
            else
                truncated = true;
        }
    }
};

enum class IdentityKind {
    left_alt,
    right_alt,
    alternative,
    hom_assoc,
    hom_malcev,
    hom_lie,
    multiplicative,
    skewsymmetric,
};

inline std::optional<IdentityKind> identity_kind_from_name(const std::string& s) {
    if (s == "left_alt") return IdentityKind::left_alt;
    if (s == "right_alt") return IdentityKind::right_alt;
    if (s == "alternative") return IdentityKind::alternative;
    if (s == "hom_assoc") return IdentityKind::hom_assoc;
    if (s == "hom_malcev") return IdentityKind::hom_malcev;
    if (s == "hom_lie") return IdentityKind::hom_lie;
    if (s == "multiplicative") return IdentityKind::multiplicative;
    if (s == "skewsymmetric") return IdentityKind::skewsymmetric;
    return std::nullopt;
}

inline std::string identity_name(IdentityKind k) {
    switch (k) {
        case IdentityKind::left_alt: return "left_alt";
        case IdentityKind::right_alt: return "right_alt";
        case IdentityKind::alternative: return "alternative";
        case IdentityKind::hom_assoc: return "hom_assoc";
        case IdentityKind::hom_malcev: return "hom_malcev";
        case IdentityKind::hom_lie: return "hom_lie";
        case IdentityKind::multiplicative: return "multiplicative";
        case IdentityKind::skewsymmetric: return "skewsymmetric";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// generic (fresh-indeterminate) evaluation

/// The algebra lifted to a context with generic coordinate symbols for a
/// number of vectors; used for identities that are not multilinear.
struct GenericVectors {
    CtxPtr ext;
    HomAlgebra lifted;
    std::vector<VecS> vecs;
};

inline GenericVectors make_generic_vectors(const HomAlgebra& A,
                                           const std::vector<std::string>& bases) {
    std::vector<std::string> extra;
    CtxPtr cur = A.ctx();
    std::vector<std::vector<std::string>> names;
    for (const auto& b : bases) {
        auto ns = fresh_symbols(cur, b, A.dim());
        names.push_back(ns);
        for (const auto& n : ns) extra.push_back(n);
        cur = extend_context(cur, ns);  // keeps later bases collision-free
    }
    CtxPtr ext = extend_context(A.ctx(), extra);
    std::vector<std::size_t> index_map(A.ctx()->size());
    for (std::size_t i = 0; i < index_map.size(); ++i) index_map[i] = i;

    GenericVectors g{ext, A.mapped(ext, index_map), {}};
    for (const auto& ns : names) {
        VecS v;
        for (const auto& n : ns) v.push_back(Scalar::variable(ext, *ext->find(n)));
        g.vecs.push_back(std::move(v));
    }
    return g;
}

// ---------------------------------------------------------------------------
// identity checkers

namespace detail {

inline CheckReport check_over_basis_triples(
    const HomAlgebra& A,
    const std::function<VecS(const VecS&, const VecS&, const VecS&)>& residual,
    std::size_t max_witnesses) {
    CheckReport rep;
    std::vector<VecS> basis;
    for (std::size_t i = 0; i < A.dim(); ++i)
        basis.push_back(unit_vec(A.dim(), i, A.ctx()));
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (std::size_t k = 0; k < A.dim(); ++k) {
                VecS r = residual(basis[i], basis[j], basis[k]);
                if (!vec_is_zero(r))
                    rep.add_violation("(" + A.labels()[i] + "," + A.labels()[j] + "," +
                                          A.labels()[k] + ")",
                                      std::move(r), max_witnesses);
            }
    return rep;
}

} // namespace detail

/// Residual of the Hom-Malcev identity on generic vectors:
/// J(alpha x, alpha y, [x,z]) - [J(x,y,z), alpha^2 x]. The identity is
/// quadratic in x, so it is verified by full symbolic expansion.
inline VecS hom_malcev_residual_generic(const HomAlgebra& A) {
    if (!A.mu().is_skewsymmetric())
        throw flavor_mismatch("hom_malcev needs a skewsymmetric table");
    GenericVectors g = make_generic_vectors(A, {"x", "y", "z"});
    const HomAlgebra& L = g.lifted;
    const VecS &X = g.vecs[0], &Y = g.vecs[1], &Z = g.vecs[2];
    VecS lhs = hom_jacobiator(L, L.alpha().apply(X), L.alpha().apply(Y),
                              evaluate_mu(L, X, Z));
    VecS rhs = evaluate_mu(L, hom_jacobiator(L, X, Y, Z),
                           L.alpha().apply(L.alpha().apply(X)));
    return vec_sub(lhs, rhs);
}

inline CheckReport check_identity(const HomAlgebra& A, IdentityKind kind,
                                  std::size_t max_witnesses = 16) {
    auto as = [&](const VecS& x, const VecS& y, const VecS& z) {
        return hom_associator(A, x, y, z);
    };
    switch (kind) {
        case IdentityKind::left_alt:
            // linearized form: as(x,y,z) + as(y,x,z) = 0
            return detail::check_over_basis_triples(
                A,
                [&](const VecS& x, const VecS& y, const VecS& z) {
                    return vec_add(as(x, y, z), as(y, x, z));
                },
                max_witnesses);
        case IdentityKind::right_alt:
            // linearized form: as(x,y,z) + as(x,z,y) = 0
            return detail::check_over_basis_triples(
                A,
                [&](const VecS& x, const VecS& y, const VecS& z) {
                    return vec_add(as(x, y, z), as(x, z, y));
                },
                max_witnesses);
        case IdentityKind::alternative: {
            CheckReport rep = check_identity(A, IdentityKind::left_alt, max_witnesses);
            rep.merge(check_identity(A, IdentityKind::right_alt, max_witnesses),
                      max_witnesses);
            return rep;
        }
        case IdentityKind::hom_assoc:
            return detail::check_over_basis_triples(A, as, max_witnesses);
        case IdentityKind::hom_lie: {
            if (!A.mu().is_skewsymmetric())
                throw flavor_mismatch("hom_lie needs a skewsymmetric table");
            return detail::check_over_basis_triples(
                A,
                [&](const VecS& x, const VecS& y, const VecS& z) {
                    return hom_jacobiator(A, x, y, z);
                },
                max_witnesses);
        }
        case IdentityKind::hom_malcev: {
            CheckReport rep;
            VecS r = hom_malcev_residual_generic(A);
            if (!vec_is_zero(r))
                rep.add_violation("(x,y,z) generic", std::move(r), max_witnesses);
            return rep;
        }
        case IdentityKind::multiplicative: {
            CheckReport rep;
            for (std::size_t i = 0; i < A.dim(); ++i)
                for (std::size_t j = 0; j < A.dim(); ++j) {
                    VecS lhs = A.alpha().apply(A.mu().product_of_basis(i, j));
                    VecS rhs = evaluate_mu(A, A.alpha().column(i), A.alpha().column(j));
                    VecS r = vec_sub(lhs, rhs);
                    if (!vec_is_zero(r))
                        rep.add_violation(
                            "(" + A.labels()[i] + "," + A.labels()[j] + ")",
                            std::move(r), max_witnesses);
                }
            return rep;
        }
        case IdentityKind::skewsymmetric: {
            CheckReport rep;
            for (std::size_t i = 0; i < A.dim(); ++i)
                for (std::size_t j = 0; j <= i; ++j) {
                    VecS r = vec_add(A.mu().product_of_basis(i, j),
                                     A.mu().product_of_basis(j, i));
                    if (!vec_is_zero(r))
                        rep.add_violation(
                            "(" + A.labels()[i] + "," + A.labels()[j] + ")",
                            std::move(r), max_witnesses);
                }
            return rep;
        }
    }
    throw error("unhandled identity kind");
}

/// Morphism check: mu_B(f x, f y) = f(mu_A(x,y)) and f∘alpha_A = alpha_B∘f.
inline CheckReport check_morphism(const HomAlgebra& A, const HomAlgebra& B,
                                  const LinearMap& f, std::size_t max_witnesses = 16) {
    if (A.dim() != B.dim() || f.dim() != A.dim())
        throw dimension_mismatch("morphism check needs equal dimensions");
    require_same_context(A.ctx(), B.ctx());
    require_same_context(A.ctx(), f.ctx());
    CheckReport rep;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            VecS lhs = evaluate_mu(B, f.column(i), f.column(j));
            VecS rhs = f.apply(A.mu().product_of_basis(i, j));
            VecS r = vec_sub(lhs, rhs);
            if (!vec_is_zero(r))
                rep.add_violation("mu(" + A.labels()[i] + "," + A.labels()[j] + ")",
                                  std::move(r), max_witnesses);
        }
    for (std::size_t j = 0; j < A.dim(); ++j) {
        VecS lhs = f.apply(A.alpha().column(j));
        VecS rhs = B.alpha().apply(f.column(j));
        VecS r = vec_sub(lhs, rhs);
        if (!vec_is_zero(r))
            rep.add_violation("alpha(" + A.labels()[j] + ")", std::move(r),
                              max_witnesses);
    }
    return rep;
}

/// Endomorphism check of the multiplication alone (twist maps are checked
/// against mu without the alpha-compatibility clause).
inline CheckReport check_algebra_endomorphism(const HomAlgebra& A, const LinearMap& f,
                                              std::size_t max_witnesses = 16) {
    if (f.dim() != A.dim()) throw dimension_mismatch("endomorphism size mismatch");
    require_same_context(A.ctx(), f.ctx());
    CheckReport rep;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            VecS lhs = evaluate_mu(A, f.column(i), f.column(j));
            VecS rhs = f.apply(A.mu().product_of_basis(i, j));
            VecS r = vec_sub(lhs, rhs);
            if (!vec_is_zero(r))
                rep.add_violation("mu(" + A.labels()[i] + "," + A.labels()[j] + ")",
                                  std::move(r), max_witnesses);
        }
    return rep;
}

/// [x,y] = mu(x,y) - mu(y,x); same twist, malcev flavor hint.
inline HomAlgebra commutator_algebra(const HomAlgebra& A) {
    MultiplicationTable t(A.dim(), A.ctx());
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (std::size_t k = 0; k < A.dim(); ++k)
                t.at(i, j, k) = A.mu().at(i, j, k) - A.mu().at(j, i, k);
    return HomAlgebra(A.labels(), std::move(t), A.alpha(), FlavorHint::malcev);
}

inline HomAlgebra opposite_algebra(const HomAlgebra& A) {
    MultiplicationTable t(A.dim(), A.ctx());
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (std::size_t k = 0; k < A.dim(); ++k)
                t.at(i, j, k) = A.mu().at(j, i, k);
    return HomAlgebra(A.labels(), std::move(t), A.alpha(), A.hint());
}

/// Checks that the Hom-associator is alternating:
/// as(x,y,z) = -as(y,x,z) = -as(x,z,y) = -as(z,y,x) on all basis triples.
/// Each sign relation is tested on its own.
inline CheckReport check_alternating_associator(const HomAlgebra& A,
                                                std::size_t max_witnesses = 16) {
    CheckReport rep;
    std::vector<VecS> basis;
    for (std::size_t i = 0; i < A.dim(); ++i)
        basis.push_back(unit_vec(A.dim(), i, A.ctx()));
    const char* relation[3] = {"swap(x,y)", "swap(y,z)", "swap(x,z)"};
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (std::size_t k = 0; k < A.dim(); ++k) {
                const VecS &x = basis[i], &y = basis[j], &z = basis[k];
                VecS a = hom_associator(A, x, y, z);
                VecS rel[3] = {vec_add(a, hom_associator(A, y, x, z)),
                               vec_add(a, hom_associator(A, x, z, y)),
                               vec_add(a, hom_associator(A, z, y, x))};
                for (int r = 0; r < 3; ++r)
                    if (!vec_is_zero(rel[r]))
                        rep.add_violation("(" + A.labels()[i] + "," + A.labels()[j] +
                                              "," + A.labels()[k] + ") " + relation[r],
                                          std::move(rel[r]), max_witnesses);
            }
    return rep;
}

} // namespace homdef
