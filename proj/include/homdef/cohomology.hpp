#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "homdef/algebra.hpp"

namespace homdef {

// ---------------------------------------------------------------------------
// cochains

/// 1-cochain: a linear map. The commutation with the ambient twist is a
/// membership condition of C^1; solvers enforce it, verifiers report it.
struct OneCochain {
    LinearMap m;
};

/// 2-cochain phi(e_i, e_j) = sum_k table[i][j][k] e_k with a flavor tag.
/// Malcev-flavor cochains must be skewsymmetric.
class TwoCochain {
public:
    TwoCochain(std::size_t dim, CtxPtr ctx, Flavor flavor)
        : flavor_(flavor), table_(dim, std::move(ctx)) {}

    TwoCochain(MultiplicationTable table, Flavor flavor)
        : flavor_(flavor), table_(std::move(table)) {
        validate();
    }

    void validate() const {
        if (flavor_ == Flavor::malcev && !table_.is_skewsymmetric())
            throw flavor_mismatch("malcev 2-cochains must be skewsymmetric");
    }

    std::size_t dim() const { return table_.dim(); }
    const CtxPtr& ctx() const { return table_.ctx(); }
    Flavor flavor() const { return flavor_; }
    const MultiplicationTable& table() const { return table_; }
    MultiplicationTable& table() { return table_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return table_.at(i, j, k); }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return table_.at(i, j, k);
    }

    /// Bilinear evaluation.
    VecS apply(const VecS& x, const VecS& y) const {
        if (x.size() != dim() || y.size() != dim())
            throw dimension_mismatch("cochain applied to wrong lengths");
        VecS out = zero_vec(dim(), ctx());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (y[j].is_zero()) continue;
                Scalar xy = x[i] * y[j];
                for (std::size_t k = 0; k < dim(); ++k)
                    if (!table_.at(i, j, k).is_zero()) out[k] += xy * table_.at(i, j, k);
            }
        }
        return out;
    }

    TwoCochain mapped(const CtxPtr& new_ctx,
                      const std::vector<std::size_t>& index_map) const {
        return TwoCochain(table_.mapped(new_ctx, index_map), flavor_);
    }

private:
    Flavor flavor_;
    MultiplicationTable table_;
};

/// Trilinear table t[i][j][k][l]; the residual type of the alternative
/// second differential.
class ThreeCochain {
public:
    ThreeCochain(std::size_t dim, CtxPtr ctx)
        : dim_(dim), ctx_(std::move(ctx)),
          t_(dim * dim * dim * dim, Scalar::zero(ctx_)) {}

    std::size_t dim() const { return dim_; }
    const CtxPtr& ctx() const { return ctx_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return t_.at(((i * dim_ + j) * dim_ + k) * dim_ + l);
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return t_.at(((i * dim_ + j) * dim_ + k) * dim_ + l);
    }

    VecS value_at(std::size_t i, std::size_t j, std::size_t k) const {
        VecS v;
        for (std::size_t l = 0; l < dim_; ++l) v.push_back(at(i, j, k, l));
        return v;
    }

    bool is_zero() const {
        for (const auto& e : t_)
            if (!e.is_zero()) return false;
        return true;
    }

private:
    std::size_t dim_;
    CtxPtr ctx_;
    std::vector<Scalar> t_;
};

// ---------------------------------------------------------------------------
// differentials

/// delta^1 f = mu∘(f⊗id) + mu∘(id⊗f) - f∘mu. For a skewsymmetric mu the
/// output is skewsymmetric, so the flavor tag follows the table.
inline TwoCochain delta1(const HomAlgebra& A, const OneCochain& f) {
    if (f.m.dim() != A.dim()) throw dimension_mismatch("cochain dimension mismatch");
    require_same_context(A.ctx(), f.m.ctx());
    MultiplicationTable out(A.dim(), A.ctx());
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            VecS v = evaluate_mu(A, f.m.column(i), unit_vec(A.dim(), j, A.ctx()));
            v = vec_add(v, evaluate_mu(A, unit_vec(A.dim(), i, A.ctx()), f.m.column(j)));
            v = vec_sub(v, f.m.apply(A.mu().product_of_basis(i, j)));
            for (std::size_t k = 0; k < A.dim(); ++k) out.at(i, j, k) = v[k];
        }
    Flavor flavor =
        out.is_skewsymmetric() && A.mu().is_skewsymmetric() ? Flavor::malcev
                                                            : Flavor::alternative;
    return TwoCochain(std::move(out), flavor);
}

/// Alternative-flavor second differential, the eight-term sum
///   mu(phi(x,y),a z) - mu(a x,phi(y,z)) + phi(mu(x,y),a z) - phi(a x,mu(y,z))
/// symmetrized in x,y, evaluated on basis triples (it is trilinear).
inline ThreeCochain delta2_alternative(const HomAlgebra& A, const TwoCochain& phi) {
    if (phi.flavor() != Flavor::alternative)
        throw flavor_mismatch("alternative-flavor differential on a malcev cochain");
    if (phi.dim() != A.dim()) throw dimension_mismatch("cochain dimension mismatch");
    require_same_context(A.ctx(), phi.ctx());
    ThreeCochain out(A.dim(), A.ctx());
    std::vector<VecS> basis;
    for (std::size_t i = 0; i < A.dim(); ++i)
        basis.push_back(unit_vec(A.dim(), i, A.ctx()));
    auto half = [&](const VecS& x, const VecS& y, const VecS& z) {
        VecS ax = A.alpha().apply(x), az = A.alpha().apply(z);
        VecS v = evaluate_mu(A, phi.apply(x, y), az);
        v = vec_sub(v, evaluate_mu(A, ax, phi.apply(y, z)));
        v = vec_add(v, phi.apply(evaluate_mu(A, x, y), az));
        v = vec_sub(v, phi.apply(ax, evaluate_mu(A, y, z)));
        return v;
    };
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (std::size_t k = 0; k < A.dim(); ++k) {
                VecS v = vec_add(half(basis[i], basis[j], basis[k]),
                                 half(basis[j], basis[i], basis[k]));
                for (std::size_t l = 0; l < A.dim(); ++l) out.at(i, j, k, l) = v[l];
            }
    return out;
}

/// Residual of the Malcev-flavor second differential on generic vectors.
/// The defining expression repeats x, so a basis-triple table would not
/// determine it; the symbolic expansion does.
struct MalcevDelta2Residual {
    CtxPtr ext;
    VecS components;
    bool is_zero() const { return vec_is_zero(components); }
};

/// Six-term Malcev second differential, exactly as the J^{i,j} combination:
///   J10(ax,ay,[x,z]) + J01(ax,ay,[x,z]) + J00(ax,ay,phi(x,z))
/// - [J10(x,y,z),a2x] - [J01(x,y,z),a2x] - phi(J00(x,y,z),a2x),
/// with J10 = cyclic [phi(.,.),a(.)], J01 = cyclic phi([.,.],a(.)),
/// J00 the Hom-Jacobiator.
inline MalcevDelta2Residual delta2_malcev(const HomAlgebra& A, const TwoCochain& phi) {
    if (phi.flavor() != Flavor::malcev)
        throw flavor_mismatch("malcev-flavor differential on an alternative cochain");
    if (!A.mu().is_skewsymmetric())
        throw flavor_mismatch("malcev differential needs a skewsymmetric bracket");
    if (phi.dim() != A.dim()) throw dimension_mismatch("cochain dimension mismatch");
    require_same_context(A.ctx(), phi.ctx());

    GenericVectors g = make_generic_vectors(A, {"x", "y", "z"});
    const HomAlgebra& L = g.lifted;
    std::vector<std::size_t> idmap(A.ctx()->size());
    for (std::size_t i = 0; i < idmap.size(); ++i) idmap[i] = i;
    TwoCochain ph = phi.mapped(g.ext, idmap);

    auto bracket = [&](const VecS& u, const VecS& v) { return evaluate_mu(L, u, v); };
    auto alpha = [&](const VecS& u) { return L.alpha().apply(u); };
    auto J10 = [&](const VecS& x, const VecS& y, const VecS& z) {
        VecS s = bracket(ph.apply(x, y), alpha(z));
        s = vec_add(s, bracket(ph.apply(y, z), alpha(x)));
        s = vec_add(s, bracket(ph.apply(z, x), alpha(y)));
        return s;
    };
    auto J01 = [&](const VecS& x, const VecS& y, const VecS& z) {
        VecS s = ph.apply(bracket(x, y), alpha(z));
        s = vec_add(s, ph.apply(bracket(y, z), alpha(x)));
        s = vec_add(s, ph.apply(bracket(z, x), alpha(y)));
        return s;
    };
    auto J00 = [&](const VecS& x, const VecS& y, const VecS& z) {
        return hom_jacobiator(L, x, y, z);
    };

    const VecS &X = g.vecs[0], &Y = g.vecs[1], &Z = g.vecs[2];
    VecS ax = alpha(X), ay = alpha(Y), xz = bracket(X, Z);
    VecS a2x = alpha(alpha(X));

    VecS r = J10(ax, ay, xz);
    r = vec_add(r, J01(ax, ay, xz));
    r = vec_add(r, J00(ax, ay, ph.apply(X, Z)));
    r = vec_sub(r, bracket(J10(X, Y, Z), a2x));
    r = vec_sub(r, bracket(J01(X, Y, Z), a2x));
    r = vec_sub(r, ph.apply(J00(X, Y, Z), a2x));
    return {g.ext, std::move(r)};
}

// ---------------------------------------------------------------------------
// flattening conventions (documented, fixed orders)

inline std::size_t one_cochain_flat_dim(std::size_t dim) { return dim * dim; }

/// Row-major (i,j): coordinate i*dim+j holds the e_i coefficient of f(e_j).
inline VecS flatten_one_cochain(const LinearMap& f) {
    VecS v;
    for (std::size_t i = 0; i < f.dim(); ++i)
        for (std::size_t j = 0; j < f.dim(); ++j) v.push_back(f.at(i, j));
    return v;
}

inline LinearMap unflatten_one_cochain(const VecS& v, std::size_t dim,
                                       const CtxPtr& ctx) {
    LinearMap f(dim, ctx);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) f.at(i, j) = v.at(i * dim + j);
    return f;
}

/// Lexicographic (i,j,k).
inline VecS flatten_two_cochain_alt(const MultiplicationTable& t) {
    VecS v;
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            for (std::size_t k = 0; k < t.dim(); ++k) v.push_back(t.at(i, j, k));
    return v;
}

inline MultiplicationTable unflatten_two_cochain_alt(const VecS& v, std::size_t dim,
                                                     const CtxPtr& ctx) {
    MultiplicationTable t(dim, ctx);
    std::size_t n = 0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) t.at(i, j, k) = v.at(n++);
    return t;
}

/// Pairs i<j in lexicographic order, then the output index.
inline std::vector<std::pair<std::size_t, std::size_t>> skew_pairs(std::size_t dim) {
    std::vector<std::pair<std::size_t, std::size_t>> p;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) p.emplace_back(i, j);
    return p;
}

inline VecS flatten_two_cochain_malcev(const MultiplicationTable& t) {
    VecS v;
    for (auto [i, j] : skew_pairs(t.dim()))
        for (std::size_t k = 0; k < t.dim(); ++k) v.push_back(t.at(i, j, k));
    return v;
}

inline MultiplicationTable unflatten_two_cochain_malcev(const VecS& v, std::size_t dim,
                                                        const CtxPtr& ctx) {
    MultiplicationTable t(dim, ctx);
    std::size_t n = 0;
    for (auto [i, j] : skew_pairs(dim))
        for (std::size_t k = 0; k < dim; ++k) {
            t.at(i, j, k) = v.at(n);
            t.at(j, i, k) = -v.at(n);
            ++n;
        }
    return t;
}

// ---------------------------------------------------------------------------
// solvers (numeric-rational scalars only)

namespace detail {

inline void require_numeric(const HomAlgebra& A, const char* what) {
    if (!A.is_numeric())
        throw not_numeric(std::string(what) +
                          " needs numeric scalars; use verify_cochain for "
                          "parametric families");
}

/// Commutant conditions f∘alpha - alpha∘f = 0 as rows over the row-major
/// flattening of f.
inline std::vector<VecS> commutant_rows(const HomAlgebra& A) {
    std::size_t d = A.dim();
    std::vector<VecS> rows;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            VecS row = zero_vec(d * d, A.ctx());
            // (f alpha)[r][c] = sum_k f[r][k] alpha[k][c]
            for (std::size_t k = 0; k < d; ++k) {
                row[r * d + k] += A.alpha().at(k, c);
                row[k * d + c] -= A.alpha().at(r, k);
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

/// delta1 conditions as rows over the flattening of f (unit-probe columns).
inline std::vector<VecS> delta1_rows(const HomAlgebra& A) {
    std::size_t d = A.dim();
    std::vector<VecS> rows(d * d * d, zero_vec(d * d, A.ctx()));
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            LinearMap unit(d, A.ctx());
            unit.at(p, q) = Scalar::one(A.ctx());
            TwoCochain img = delta1(A, OneCochain{unit});
            std::size_t n = 0;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    for (std::size_t k = 0; k < d; ++k)
                        rows[n++][p * d + q] = img.at(i, j, k);
        }
    return rows;
}

} // namespace detail

/// Basis of the commutant {f : f∘alpha = alpha∘f}, flattened row-major.
inline SubspaceBasis commutant_basis(const HomAlgebra& A) {
    detail::require_numeric(A, "commutant_basis");
    Matrix m = Matrix::from_rows(detail::commutant_rows(A), A.dim() * A.dim(), A.ctx());
    return nullspace(m, "C1 row-major (i,j)");
}

/// Basis of {f : f∘alpha = alpha∘f and delta1 f = 0}, flattened row-major.
/// With relax_commutant the commutation condition is dropped.
inline SubspaceBasis derivation_space(const HomAlgebra& A, bool relax_commutant = false) {
    detail::require_numeric(A, "derivation_space");
    std::vector<VecS> rows;
    if (!relax_commutant)
        for (auto& r : detail::commutant_rows(A)) rows.push_back(std::move(r));
    for (auto& r : detail::delta1_rows(A)) rows.push_back(std::move(r));
    Matrix m = Matrix::from_rows(rows, A.dim() * A.dim(), A.ctx());
    std::string tag = relax_commutant ? "C1 row-major (i,j), commutant relaxed"
                                      : "C1 row-major (i,j)";
    return nullspace(m, tag);
}

/// Key-sorted flattening of a polynomial residual: one coordinate per
/// (component, monomial) pair that occurs in any generator image. Used to
/// turn the generic Malcev delta2 into exact linear conditions.
namespace detail {

inline std::vector<VecS> malcev_delta2_rows(const HomAlgebra& A) {
    std::size_t d = A.dim();
    auto pairs = skew_pairs(d);
    std::size_t cols = pairs.size() * d;

    std::vector<MalcevDelta2Residual> images;
    for (std::size_t pi = 0; pi < pairs.size(); ++pi)
        for (std::size_t r = 0; r < d; ++r) {
            TwoCochain unit(d, A.ctx(), Flavor::malcev);
            unit.at(pairs[pi].first, pairs[pi].second, r) = Scalar::one(A.ctx());
            unit.at(pairs[pi].second, pairs[pi].first, r) = -Scalar::one(A.ctx());
            images.push_back(delta2_malcev(A, unit));
        }

    std::set<std::pair<std::size_t, Monomial>> keys;
    for (const auto& img : images)
        for (std::size_t c = 0; c < img.components.size(); ++c) {
            if (!img.components[c].den_is_one())
                throw error("unexpected denominator in a numeric delta2 image");
            for (const auto& [mon, coef] : img.components[c].num().terms())
                keys.emplace(c, mon);
        }

    std::vector<VecS> rows;
    for (const auto& key : keys) {
        VecS row = zero_vec(cols, A.ctx());
        for (std::size_t col = 0; col < cols; ++col) {
            const Polynomial& p = images[col].components[key.first].num();
            auto it = p.terms().find(key.second);
            if (it != p.terms().end())
                row[col] = Scalar::from_rational(A.ctx(), it->second);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace detail

/// Basis of ker delta2. Alternative flavor: coordinates lex (i,j,k) over all
/// bilinear maps. Malcev flavor: within the skewsymmetric subspace,
/// coordinates (i<j, k).
inline SubspaceBasis two_cocycle_space(const HomAlgebra& A, Flavor flavor) {
    detail::require_numeric(A, "two_cocycle_space");
    std::size_t d = A.dim();
    if (flavor == Flavor::alternative) {
        std::size_t cols = d * d * d;
        std::vector<VecS> rows(d * d * d * d, zero_vec(cols, A.ctx()));
        std::size_t col = 0;
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q)
                for (std::size_t r = 0; r < d; ++r) {
                    TwoCochain unit(d, A.ctx(), Flavor::alternative);
                    unit.at(p, q, r) = Scalar::one(A.ctx());
                    ThreeCochain img = delta2_alternative(A, unit);
                    std::size_t n = 0;
                    for (std::size_t i = 0; i < d; ++i)
                        for (std::size_t j = 0; j < d; ++j)
                            for (std::size_t k = 0; k < d; ++k)
                                for (std::size_t l = 0; l < d; ++l)
                                    rows[n++][col] = img.at(i, j, k, l);
                    ++col;
                }
        Matrix m = Matrix::from_rows(rows, cols, A.ctx());
        return nullspace(m, "C2 lex (i,j,k)");
    }
    if (!A.mu().is_skewsymmetric())
        throw flavor_mismatch("malcev cocycles need a skewsymmetric bracket");
    auto rows = detail::malcev_delta2_rows(A);
    std::size_t cols = skew_pairs(d).size() * d;
    Matrix m = rows.empty() ? Matrix(0, cols, A.ctx())
                            : Matrix::from_rows(rows, cols, A.ctx());
    return nullspace(m, "C2 skew pairs (i<j, k)");
}

/// Image of delta1 on the commutant {f : f∘alpha = alpha∘f}, flattened in
/// the flavor's C2 coordinates.
inline SubspaceBasis two_coboundary_space(const HomAlgebra& A,
                                          Flavor flavor = Flavor::alternative,
                                          bool relax_commutant = false) {
    detail::require_numeric(A, "two_coboundary_space");
    std::size_t d = A.dim();
    SubspaceBasis commutant = [&] {
        if (relax_commutant) {
            std::vector<VecS> vs;
            for (std::size_t n = 0; n < d * d; ++n)
                vs.push_back(unit_vec(d * d, n, A.ctx()));
            return SubspaceBasis(d * d, std::move(vs), A.ctx(),
                                 "C1 row-major (i,j), commutant relaxed");
        }
        Matrix m = Matrix::from_rows(detail::commutant_rows(A), d * d, A.ctx());
        return nullspace(m, "C1 row-major (i,j)");
    }();

    std::size_t flat_dim =
        flavor == Flavor::alternative ? d * d * d : skew_pairs(d).size() * d;
    std::string tag = flavor == Flavor::alternative ? "C2 lex (i,j,k)"
                                                    : "C2 skew pairs (i<j, k)";
    if (commutant.dim() == 0)
        return SubspaceBasis(flat_dim, {}, A.ctx(), tag);

    Matrix cols(flat_dim, commutant.dim(), A.ctx());
    for (std::size_t c = 0; c < commutant.dim(); ++c) {
        LinearMap f = unflatten_one_cochain(commutant.vectors()[c], d, A.ctx());
        TwoCochain img = delta1(A, OneCochain{f});
        if (flavor == Flavor::malcev && !img.table().is_skewsymmetric())
            throw flavor_mismatch("delta1 image is not skewsymmetric");
        VecS flat = flavor == Flavor::alternative
                        ? flatten_two_cochain_alt(img.table())
                        : flatten_two_cochain_malcev(img.table());
        for (std::size_t r = 0; r < flat_dim; ++r) cols.at(r, c) = flat[r];
    }
    return column_space(cols, tag);
}

// ---------------------------------------------------------------------------
// H^2 report

struct MembershipVerdict {
    std::string name;
    bool in_z2 = false;
    bool in_b2 = false;
};

struct H2Report {
    std::size_t dim_z2 = 0;
    std::size_t dim_b2 = 0;
    std::size_t dim_intersection = 0;
    bool b2_contained_in_z2 = false;
    std::vector<std::size_t> b2_vectors_outside_z2;
    std::size_t dim_h2 = 0;  // dim Z2 - dim(Z2 ∩ B2)
    std::vector<MembershipVerdict> supplied;
    std::string flattening_tag;
};

/// Exact dimension data for H^2 = Z^2/B^2, with containment verified rather
/// than assumed, plus per-vector membership verdicts for any supplied
/// cocycle family.
inline H2Report h2_report(const HomAlgebra& A, Flavor flavor,
                          const std::vector<std::pair<std::string, TwoCochain>>&
                              supplied = {},
                          bool relax_commutant = false) {
    SubspaceBasis z2 = two_cocycle_space(A, flavor);
    SubspaceBasis b2 = two_coboundary_space(A, flavor, relax_commutant);
    H2Report rep;
    rep.flattening_tag = z2.flattening_tag();
    rep.dim_z2 = z2.dim();
    rep.dim_b2 = b2.dim();
    rep.dim_intersection = intersection_dim(z2, b2);
    rep.b2_contained_in_z2 = rep.dim_intersection == b2.dim();
    if (!rep.b2_contained_in_z2)
        for (std::size_t i = 0; i < b2.dim(); ++i)
            if (!subspace_contains(z2, b2.vectors()[i]))
                rep.b2_vectors_outside_z2.push_back(i);
    rep.dim_h2 = z2.dim() - rep.dim_intersection;
    for (const auto& [name, phi] : supplied) {
        VecS flat = flavor == Flavor::alternative
                        ? flatten_two_cochain_alt(phi.table())
                        : flatten_two_cochain_malcev(phi.table());
        MembershipVerdict v;
        v.name = name;
        v.in_z2 = subspace_contains(z2, flat);
        v.in_b2 = subspace_contains(b2, flat);
        rep.supplied.push_back(std::move(v));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// symbolic verification of (possibly parametric) cochain families

enum class CochainClaim { derivation, cocycle, coboundary_witness };

struct VerifyReport {
    CheckReport claim;
    std::optional<CheckReport> commutant;         // 1-cochains: f∘alpha = alpha∘f
    std::optional<CheckReport> multiplicativity;  // malcev 2-cochains: alpha∘phi = phi∘(alpha⊗alpha)
    std::vector<std::string> domain_restrictions;
};

namespace detail {

inline void collect_restrictions(const Scalar& s, std::set<std::string>& out) {
    const Polynomial& den = s.den();
    if (den.is_constant()) return;
    if (den.terms().size() == 1) {
        const Monomial& m = den.terms().begin()->first;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) out.insert(den.ctx()->symbol(i) + " != 0");
    } else {
        out.insert(den.str() + " != 0");
    }
}

inline void collect_restrictions(const HomAlgebra& A, std::set<std::string>& out) {
    for (std::size_t i = 0; i < A.dim(); ++i) {
        for (std::size_t j = 0; j < A.dim(); ++j) {
            collect_restrictions(A.alpha().at(i, j), out);
            for (std::size_t k = 0; k < A.dim(); ++k)
                collect_restrictions(A.mu().at(i, j, k), out);
        }
    }
}

} // namespace detail

/// Checks the claimed identity identically in all parameters. Rational
/// entries are welcome; the nonvanishing assumptions behind their
/// denominators are reported as domain restrictions.
inline VerifyReport verify_cochain(const HomAlgebra& A, const OneCochain& f,
                                   CochainClaim claim,
                                   const TwoCochain* target = nullptr,
                                   std::size_t max_witnesses = 16) {
    VerifyReport rep;
    std::set<std::string> restr;
    detail::collect_restrictions(A, restr);
    for (std::size_t i = 0; i < f.m.dim(); ++i)
        for (std::size_t j = 0; j < f.m.dim(); ++j)
            detail::collect_restrictions(f.m.at(i, j), restr);

    TwoCochain image = delta1(A, f);
    CheckReport claim_rep;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            VecS v = image.table().product_of_basis(i, j);
            if (claim == CochainClaim::coboundary_witness) {
                if (!target) throw precondition_error("coboundary claim needs a target");
                v = vec_sub(v, target->table().product_of_basis(i, j));
            } else if (claim != CochainClaim::derivation) {
                throw precondition_error("1-cochains support derivation or witness claims");
            }
            if (!vec_is_zero(v))
                claim_rep.add_violation(
                    "(" + A.labels()[i] + "," + A.labels()[j] + ")", std::move(v),
                    max_witnesses);
        }
    rep.claim = std::move(claim_rep);

    CheckReport comm;
    for (std::size_t j = 0; j < A.dim(); ++j) {
        VecS v = vec_sub(f.m.apply(A.alpha().column(j)), A.alpha().apply(f.m.column(j)));
        if (!vec_is_zero(v))
            comm.add_violation("(" + A.labels()[j] + ")", std::move(v), max_witnesses);
    }
    rep.commutant = std::move(comm);
    rep.domain_restrictions.assign(restr.begin(), restr.end());
    return rep;
}

inline VerifyReport verify_cochain(const HomAlgebra& A, const TwoCochain& phi,
                                   CochainClaim claim, std::size_t max_witnesses = 16) {
    if (claim != CochainClaim::cocycle)
        throw precondition_error("2-cochains support the cocycle claim");
    VerifyReport rep;
    std::set<std::string> restr;
    detail::collect_restrictions(A, restr);
    for (std::size_t i = 0; i < phi.dim(); ++i)
        for (std::size_t j = 0; j < phi.dim(); ++j)
            for (std::size_t k = 0; k < phi.dim(); ++k)
                detail::collect_restrictions(phi.at(i, j, k), restr);

    CheckReport claim_rep;
    if (phi.flavor() == Flavor::alternative) {
        ThreeCochain img = delta2_alternative(A, phi);
        for (std::size_t i = 0; i < A.dim(); ++i)
            for (std::size_t j = 0; j < A.dim(); ++j)
                for (std::size_t k = 0; k < A.dim(); ++k) {
                    VecS v = img.value_at(i, j, k);
                    if (!vec_is_zero(v))
                        claim_rep.add_violation("(" + A.labels()[i] + "," +
                                                    A.labels()[j] + "," + A.labels()[k] +
                                                    ")",
                                                std::move(v), max_witnesses);
                }
    } else {
        MalcevDelta2Residual r = delta2_malcev(A, phi);
        if (!r.is_zero())
            claim_rep.add_violation("(x,y,z) generic", r.components, max_witnesses);
        // alpha-multiplicativity of the cochain, reported as information
        CheckReport mult;
        for (std::size_t i = 0; i < A.dim(); ++i)
            for (std::size_t j = 0; j < A.dim(); ++j) {
                VecS lhs = A.alpha().apply(phi.table().product_of_basis(i, j));
                VecS rhs = phi.apply(A.alpha().column(i), A.alpha().column(j));
                VecS v = vec_sub(lhs, rhs);
                if (!vec_is_zero(v))
                    mult.add_violation("(" + A.labels()[i] + "," + A.labels()[j] + ")",
                                       std::move(v), max_witnesses);
            }
        rep.multiplicativity = std::move(mult);
    }
    rep.claim = std::move(claim_rep);
    rep.domain_restrictions.assign(restr.begin(), restr.end());
    return rep;
}

} // namespace homdef
