#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "homdef/expr.hpp"
#include "homdef/linalg.hpp"

using namespace homdef;

namespace {

CtxPtr qctx() { return make_context({}); }

Scalar Q(const CtxPtr& ctx, long n, long d = 1) {
    return Scalar::from_rational(ctx, Rational(n, d));
}

Matrix from_ints(const CtxPtr& ctx, const std::vector<std::vector<long>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), ctx);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Q(ctx, rows[i][j]);
    return m;
}

bool matrix_equal(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).eq(b.at(i, j))) return false;
    return true;
}

VecS qvec(const CtxPtr& ctx, const std::vector<long>& v) {
    VecS r;
    for (long x : v) r.push_back(Q(ctx, x));
    return r;
}

Matrix random_matrix(std::mt19937& rng, const CtxPtr& ctx, std::size_t rows,
                     std::size_t cols) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), sparse(0, 2);
    Matrix m(rows, cols, ctx);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (sparse(rng) != 0) m.at(i, j) = Q(ctx, num(rng), den(rng));
    return m;
}

} // namespace

TEST_CASE("rref basics") {
    CtxPtr ctx = qctx();

    RrefResult r = rref(from_ints(ctx, {{1, 1}, {2, 2}}));
    CHECK(matrix_equal(r.reduced, from_ints(ctx, {{1, 1}, {0, 0}})));
    CHECK(r.pivot_columns == std::vector<std::size_t>{0});

    Matrix id3 = from_ints(ctx, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    RrefResult r2 = rref(id3);
    CHECK(matrix_equal(r2.reduced, id3));
    CHECK(r2.pivot_columns == std::vector<std::size_t>{0, 1, 2});

    RrefResult r3 = rref(from_ints(ctx, {{0, 1}, {1, 0}}));
    CHECK(matrix_equal(r3.reduced, from_ints(ctx, {{1, 0}, {0, 1}})));
}

TEST_CASE("nullspace basics") {
    CtxPtr ctx = qctx();

    SubspaceBasis n = nullspace(from_ints(ctx, {{1, 1}, {2, 2}}));
    CHECK(n.dim() == 1);
    CHECK(subspace_contains(n, qvec(ctx, {1, -1})));
    CHECK_FALSE(subspace_contains(n, qvec(ctx, {1, 1})));

    SubspaceBasis z = nullspace(Matrix(2, 3, ctx));
    CHECK(z.dim() == 3);
}

TEST_CASE("column space basics") {
    CtxPtr ctx = qctx();
    Matrix id4 = from_ints(ctx, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(column_space(id4).dim() == 4);
    CHECK(column_space(Matrix(3, 5, ctx)).dim() == 0);
}

TEST_CASE("subspace containment and quotients") {
    CtxPtr ctx = qctx();
    SubspaceBasis span_e1(2, {qvec(ctx, {1, 0})}, ctx, "plain");
    CHECK(subspace_contains(span_e1, qvec(ctx, {2, 0})));
    CHECK_FALSE(subspace_contains(span_e1, qvec(ctx, {0, 1})));

    SubspaceBasis z(2, {qvec(ctx, {1, 0}), qvec(ctx, {0, 1})}, ctx, "plain");
    CHECK(quotient_dim(z, span_e1) == 1);
    CHECK(quotient_dim(z, z) == 0);
    CHECK_THROWS_AS(quotient_dim(span_e1, z), containment_error);
}

TEST_CASE("independence is verified on construction") {
    CtxPtr ctx = qctx();
    CHECK_THROWS_AS(
        SubspaceBasis(2, {qvec(ctx, {1, 1}), qvec(ctx, {2, 2})}, ctx, "plain"), error);
}

TEST_CASE("intersection dimension") {
    CtxPtr ctx = qctx();
    SubspaceBasis a(3, {qvec(ctx, {1, 0, 0}), qvec(ctx, {0, 1, 0})}, ctx, "plain");
    SubspaceBasis b(3, {qvec(ctx, {0, 1, 0}), qvec(ctx, {0, 0, 1})}, ctx, "plain");
    CHECK(intersection_dim(a, b) == 1);
}

TEST_CASE("rref works over rational functions") {
    CtxPtr ctx = make_context({"a"});
    Matrix m(2, 2, ctx);
    m.at(0, 0) = parse_expression("a", ctx);
    m.at(0, 1) = Scalar::one(ctx);
    m.at(1, 0) = parse_expression("a^2", ctx);
    m.at(1, 1) = parse_expression("a", ctx);
    RrefResult r = rref(m);
    CHECK(r.pivot_columns.size() == 1);
    SubspaceBasis n = nullspace(m);
    CHECK(n.dim() == 1);
}

TEST_CASE("random matrices: rank-nullity, annihilation, idempotence") {
    CtxPtr ctx = qctx();
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 100; ++iter) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        Matrix m = random_matrix(rng, ctx, dim(rng), dim(rng));
        RrefResult r = rref(m);
        SubspaceBasis n = nullspace(m);  // internally checks rank-nullity + m v = 0
        REQUIRE(r.pivot_columns.size() + n.dim() == m.cols());
        RrefResult rr = rref(r.reduced);
        REQUIRE(matrix_equal(rr.reduced, r.reduced));
        REQUIRE(column_space(m).dim() == r.pivot_columns.size());
    }
}
