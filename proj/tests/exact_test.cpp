#include <gtest/gtest.h>

#include <random>

#include "hqg/exact/matrix.hpp"
#include "hqg/exact/sparse.hpp"

using namespace hqg;

namespace {

const RationalField QQ;

Matrix<Rational> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = Rational(num(rng), den(rng));
            m(i, j).canonicalize();
        }
    return m;
}

}  // namespace

TEST(Rational, ParseCanonicalizes) {
    EXPECT_EQ(QQ.format(QQ.parse("6/-4")), "-3/2");
    EXPECT_EQ(QQ.format(QQ.parse("-10/5")), "-2");
    EXPECT_EQ(QQ.format(QQ.parse("0/7")), "0");
    EXPECT_THROW(QQ.parse("1/0"), DivisionByZero);
    EXPECT_THROW(QQ.parse("x"), FormatError);
}

TEST(Rational, AdditionIsExact) {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_matrix(rng, 1, 2);
        EXPECT_EQ((a(0, 0) + a(0, 1)) - a(0, 1), a(0, 0));
    }
    Rational third = QQ.parse("1/3");
    EXPECT_EQ(third + third + third, QQ.one());
}

TEST(PrimeField, ArithmeticModP) {
    const PrimeField f7(7);
    EXPECT_EQ(f7.from_int(-1), f7.from_int(6));
    EXPECT_EQ(f7.from_int(3) * reciprocal(f7.from_int(3)), f7.one());
    EXPECT_EQ(f7.format(f7.parse("-15")), "6");
    EXPECT_THROW(PrimeField(8), FormatError);
    const PrimeField f5(5);
    EXPECT_THROW(f5.one() + f7.one(), FieldMismatch);
    EXPECT_THROW(reciprocal(f7.from_int(14)), DivisionByZero);
}

TEST(Kron, IdentityAndScalar) {
    const auto i2 = Matrix<Rational>::identity(2, QQ.one());
    EXPECT_EQ(kron(i2, i2), Matrix<Rational>::identity(4, QQ.one()));
    const auto m = Matrix<Rational>::from_rows({{1, 2, 3}, {4, 5, 6}}, QQ);
    EXPECT_EQ(kron(Matrix<Rational>::from_rows({{2}}, QQ), m), QQ.from_int(2) * m);
}

TEST(Kron, MatchesDoubleLoop) {
    const auto a = Matrix<Rational>::from_rows({{1, -2}, {3, 5}}, QQ);
    const auto b = Matrix<Rational>::from_rows({{0, 7}, {-1, 4}}, QQ);
    const auto k = kron(a, b);
    ASSERT_EQ(k.rows(), 4u);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t p = 0; p < 2; ++p)
                for (std::size_t q = 0; q < 2; ++q) EXPECT_EQ(k(i * 2 + p, j * 2 + q), a(i, j) * b(p, q));
    EXPECT_EQ(k(1, 3), QQ.from_int(-8));
}

TEST(Kron, Associative) {
    std::mt19937 rng(11);
    const auto a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 1), c = random_matrix(rng, 2, 2);
    EXPECT_EQ(kron(a, kron(b, c)), kron(kron(a, b), c));
}

TEST(Invert, IdentityAndSingular) {
    const auto i3 = Matrix<Rational>::identity(3, QQ.one());
    EXPECT_EQ(invert(i3, QQ.one()), i3);
    EXPECT_THROW(invert(Matrix<Rational>::from_rows({{1, 1}, {1, 1}}, QQ), QQ.one()), NotInvertible);
}

TEST(Invert, MultiplyBack) {
    std::mt19937 rng(3);
    int tested = 0;
    while (tested < 20) {
        const auto m = random_matrix(rng, 3, 3);
        if (rank(m) < 3) {
            EXPECT_THROW(invert(m, QQ.one()), NotInvertible);
            continue;
        }
        const auto n = invert(m, QQ.one());
        const auto i3 = Matrix<Rational>::identity(3, QQ.one());
        EXPECT_EQ(m * n, i3);
        EXPECT_EQ(n * m, i3);
        EXPECT_EQ(invert(n, QQ.one()), m);
        ++tested;
    }
}

TEST(Rank, Basics) {
    EXPECT_EQ(rank(Matrix<Rational>(3, 4)), 0u);
    EXPECT_EQ(rank(Matrix<Rational>::identity(4, QQ.one())), 4u);
    const auto u = Matrix<Rational>::from_rows({{1}, {-2}, {3}, {5}}, QQ);
    const auto v = Matrix<Rational>::from_rows({{2, 0, -1, 7}}, QQ);
    EXPECT_EQ(rank(u * v), 1u);
}

TEST(Rank, AgreesAcrossFields) {
    const PrimeField f(1000003);
    const auto mq = Matrix<Rational>::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, QQ);
    const auto mp = Matrix<ModP>::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, f);
    EXPECT_EQ(rank(mq), 2u);
    EXPECT_EQ(rank(mp), 2u);
    EXPECT_THROW(invert(mp, f.one()), NotInvertible);
}

TEST(Solve, InconsistentAndNullspace) {
    const auto a = Matrix<Rational>::from_rows({{1, 1}, {2, 2}}, QQ);
    EXPECT_FALSE(solve(a, Matrix<Rational>::from_rows({{1}, {3}}, QQ)).has_value());
    const auto x = solve(a, Matrix<Rational>::from_rows({{1}, {2}}, QQ));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a * *x, Matrix<Rational>::from_rows({{1}, {2}}, QQ));
    const auto ns = nullspace(a, QQ.one());
    ASSERT_EQ(ns.cols(), 1u);
    EXPECT_TRUE((a * ns).is_zero_matrix());
}

TEST(Sparse, AgreesWithDense) {
    std::mt19937 rng(5);
    const auto a = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 2), c = random_matrix(rng, 2, 3);
    using S = SparseMatrix<Rational>;
    EXPECT_EQ((S::from_dense(a) * S::from_dense(b)).to_dense(), a * b);
    EXPECT_EQ(kron(S::from_dense(a), S::from_dense(c)).to_dense(), kron(a, c));
    EXPECT_EQ(S::from_dense(a).transpose().to_dense(), a.transpose());
    EXPECT_EQ((S::from_dense(a) - S::from_dense(a)).nonzeros(), 0u);
}

TEST(Sparse, PermuteFactors) {
    // swap on 2 ⊗ 3: e_i ⊗ e_j -> e_j ⊗ e_i
    const auto sw = permute_factors<Rational>({2, 3}, {1, 0}, QQ.one());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(sw.at(j * 2 + i, i * 3 + j), QQ.one());
    EXPECT_EQ(sw.nonzeros(), 6u);
    const std::vector<std::size_t> dims{2, 3, 4};
    EXPECT_EQ(decode_index(encode_index(std::vector<std::size_t>{1, 2, 3}, dims), dims),
              (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Sparse, FirstDifference) {
    using S = SparseMatrix<Rational>;
    const auto i = S::identity(4, QQ.one());
    EXPECT_FALSE(first_difference(i, i).has_value());
    EXPECT_EQ(first_difference(i, i.with_entry(1, 2, QQ.one())), std::optional<std::size_t>(2));
}
