#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homdef/scalar.hpp"

namespace homdef {

using VecS = std::vector<Scalar>;

/// Dense matrix of scalars, row-major.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, CtxPtr ctx)
        : rows_(rows), cols_(cols), ctx_(std::move(ctx)),
          a_(rows * cols, Scalar::zero(ctx_)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const CtxPtr& ctx() const { return ctx_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

    VecS row(std::size_t i) const {
        VecS r;
        r.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
        return r;
    }

    VecS col(std::size_t j) const {
        VecS c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return c;
    }

    static Matrix from_rows(const std::vector<VecS>& rows, std::size_t cols, CtxPtr ctx) {
        Matrix m(rows.size(), cols, std::move(ctx));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw dimension_mismatch("ragged row list");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    VecS apply(const VecS& v) const {
        if (v.size() != cols_) throw dimension_mismatch("matrix/vector size mismatch");
        VecS out(rows_, Scalar::zero(ctx_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_, cols_;
    CtxPtr ctx_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form with deterministic pivoting: for each column,
/// in order, the first not-yet-used row with a nonzero entry becomes the
/// pivot row.
inline RrefResult rref(Matrix m) {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot_row = rank;
        while (pivot_row < m.rows() && m.at(pivot_row, col).is_zero()) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        if (pivot_row != rank)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(rank, j), m.at(pivot_row, j));
        Scalar inv = Scalar::one(m.ctx()) / m.at(rank, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m.at(rank, j).is_zero()) m.at(rank, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m.at(rank, j).is_zero()) m.at(i, j) -= f * m.at(rank, j);
        }
        pivots.push_back(col);
        ++rank;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivot_columns.size(); }

/// Exact basis of a cochain subspace, with the flattening convention that
/// produced the coordinates recorded as a tag. Vectors are checked linearly
/// independent on construction.
class SubspaceBasis {
public:
    SubspaceBasis(std::size_t ambient_dim, std::vector<VecS> vectors, CtxPtr ctx,
                  std::string flattening_tag)
        : ambient_(ambient_dim), vectors_(std::move(vectors)), ctx_(std::move(ctx)),
          tag_(std::move(flattening_tag)) {
        for (const auto& v : vectors_)
            if (v.size() != ambient_)
                throw dimension_mismatch("basis vector of wrong length");
        if (!vectors_.empty()) {
            Matrix m = Matrix::from_rows(vectors_, ambient_, ctx_);
            if (rank(m) != vectors_.size())
                throw error("subspace basis vectors are linearly dependent");
        }
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return vectors_.size(); }
    const std::vector<VecS>& vectors() const { return vectors_; }
    const CtxPtr& ctx() const { return ctx_; }
    const std::string& flattening_tag() const { return tag_; }

private:
    std::size_t ambient_;
    std::vector<VecS> vectors_;
    CtxPtr ctx_;
    std::string tag_;
};

/// Basis of the kernel {v : m v = 0}; free variables get unit assignments in
/// ascending column order. Rank-nullity and exact annihilation are checked
/// before returning.
inline SubspaceBasis nullspace(const Matrix& m, const std::string& tag = "plain") {
    RrefResult r = rref(m);
    const std::vector<std::size_t>& pivots = r.pivot_columns;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<VecS> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        VecS v(m.cols(), Scalar::zero(m.ctx()));
        v[f] = Scalar::one(m.ctx());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r.reduced.at(i, f);
        basis.push_back(std::move(v));
    }

    if (pivots.size() + basis.size() != m.cols())
        throw error("rank-nullity violation in nullspace computation");
    for (const auto& v : basis)
        for (const auto& entry : m.apply(v))
            if (!entry.is_zero()) throw error("nullspace vector not annihilated");

    return SubspaceBasis(m.cols(), std::move(basis), m.ctx(), tag);
}

/// Basis of the column span: the original columns at the pivot positions.
inline SubspaceBasis column_space(const Matrix& m, const std::string& tag = "plain") {
    RrefResult r = rref(m);
    std::vector<VecS> basis;
    for (auto p : r.pivot_columns) basis.push_back(m.col(p));
    return SubspaceBasis(m.rows(), std::move(basis), m.ctx(), tag);
}

/// True iff v is a linear combination of the basis vectors.
inline bool subspace_contains(const SubspaceBasis& basis, const VecS& v) {
    if (v.size() != basis.ambient_dim())
        throw dimension_mismatch("vector/ambient dimension mismatch");
    if (basis.dim() == 0) {
        for (const auto& e : v)
            if (!e.is_zero()) return false;
        return true;
    }
    std::vector<VecS> rows = basis.vectors();
    std::size_t base_rank = rank(Matrix::from_rows(rows, basis.ambient_dim(), basis.ctx()));
    rows.push_back(v);
    std::size_t ext_rank = rank(Matrix::from_rows(rows, basis.ambient_dim(), basis.ctx()));
    return ext_rank == base_rank;
}

/// dim(span(a) ∩ span(b)) via rank of the stacked bases.
inline std::size_t intersection_dim(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw dimension_mismatch("ambient dimension mismatch");
    if (a.dim() == 0 || b.dim() == 0) return 0;
    std::vector<VecS> rows = a.vectors();
    for (const auto& v : b.vectors()) rows.push_back(v);
    std::size_t joint = rank(Matrix::from_rows(rows, a.ambient_dim(), a.ctx()));
    return a.dim() + b.dim() - joint;
}

/// dim z - dim b, after checking b ⊆ z. The error carries the first
/// offending vector.
inline std::size_t quotient_dim(const SubspaceBasis& z, const SubspaceBasis& b) {
    if (z.ambient_dim() != b.ambient_dim())
        throw dimension_mismatch("ambient dimension mismatch");
    for (std::size_t i = 0; i < b.dim(); ++i) {
        if (!subspace_contains(z, b.vectors()[i])) {
            std::string coords;
            for (const auto& e : b.vectors()[i]) {
                if (!coords.empty()) coords += ", ";
                coords += e.str();
            }
            throw containment_error("vector " + std::to_string(i) +
                                    " of the would-be subspace is not contained: (" +
                                    coords + ")");
        }
    }
    return z.dim() - b.dim();
}

} // namespace homdef
