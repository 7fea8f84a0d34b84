#include <gtest/gtest.h>

#include <random>

#include "galhull/matrix.hpp"
#include "galhull/poly.hpp"
#include "oracles.hpp"

using namespace galhull;

namespace {

Poly poly_of(const Field& f, std::vector<std::uint64_t> values) {
    std::vector<Element> cs;
    for (auto v : values) cs.push_back(f.element(v));
    return Poly(f, cs);
}

TEST(Poly, DegreeAndTrimming) {
    const Field f = Field::create(5, 1);
    EXPECT_EQ(Poly(f).degree(), kNegInfDegree);
    EXPECT_EQ(poly_of(f, {1, 2, 0, 0}).degree(), 1);
    EXPECT_TRUE(poly_of(f, {0, 0}).is_zero());
    EXPECT_EQ(Poly::monomial(f.element(3), 4).degree(), 4);
}

TEST(Poly, ArithmeticAndEvaluation) {
    const Field f = Field::create(5, 1);
    const Poly a = poly_of(f, {1, 1});  // x + 1
    const Poly b = poly_of(f, {4, 1});  // x - 1
    EXPECT_EQ(a * b, poly_of(f, {4, 0, 1}));
    EXPECT_EQ(a + b, poly_of(f, {0, 2}));
    EXPECT_EQ(a - a, Poly(f));
    EXPECT_EQ((a * b)(f.element(2)), f.element(3));
    EXPECT_EQ((a * f.element(2)).lead(), f.element(2));
    EXPECT_TRUE((a * f.element(3)).monic().is_monic());
    EXPECT_THROW(Poly(f).monic(), InvalidArgument);
}

TEST(Poly, FromRootsVanishesOnRoots) {
    const Field f = Field::create(3, 2);
    const std::vector<Element> roots{f.element(1), f.element(4), f.element(7)};
    const Poly m = Poly::from_roots(f, roots);
    EXPECT_EQ(m.degree(), 3);
    EXPECT_TRUE(m.is_monic());
    for (const auto& r : roots) EXPECT_TRUE(m(r).is_zero());
}

TEST(Poly, InterpolationRecoversRandomPolynomials) {
    const Field f = Field::create(3, 3);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> any(0, f.q() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 10;
        std::vector<Element> cs;
        for (std::size_t i = 0; i < n; ++i) cs.push_back(f.element(any(rng)));
        const Poly target(f, cs);
        std::vector<Element> xs, ys;
        for (std::size_t i = 0; i < n; ++i) {
            xs.push_back(f.element(i));
            ys.push_back(target(xs.back()));
        }
        ASSERT_EQ(Poly::interpolate(f, xs, ys), target);
    }
    const std::vector<Element> dup{f.one(), f.one()};
    EXPECT_THROW(Poly::interpolate(f, dup, dup), InvalidArgument);
}

TEST(Poly, ToString) {
    const Field f = Field::create(3, 1);
    EXPECT_EQ(poly_of(f, {2, 0, 1}).to_string(), "[1]x^2 + [2]");
    EXPECT_EQ(Poly(f).to_string(), "0");
}

TEST(Matrix, RrefOfKnownMatrix) {
    const Field f = Field::create(5, 1);
    const Matrix m = Matrix::from_values(f, {{1, 2, 3}, {0, 1, 4}, {2, 0, 1}});
    const auto r = rref(m);
    EXPECT_EQ(r.rank, 3u);
    EXPECT_EQ(r.reduced, Matrix::identity(f, 3));
    const Matrix singular = Matrix::from_values(f, {{1, 2, 3}, {0, 1, 4}, {2, 0, 1}, {1, 3, 2}});
    EXPECT_EQ(rank(singular), 3u);
    EXPECT_EQ(rank(Matrix::from_values(f, {{1, 2}, {2, 4}})), 1u);
}

TEST(Matrix, KernelIsAnnihilatedAndHasComplementaryDimension) {
    const Field f = Field::create(3, 2);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 7, k = 1 + trial % n;
        const Matrix g = oracle::random_full_rank(f, k, n, rng);
        const Matrix ker = kernel_basis(g);
        ASSERT_EQ(ker.rows(), n - k);
        ASSERT_TRUE((g * ker.transpose()).is_zero());
        ASSERT_EQ(rank(vstack(g, ker)) >= k, true);
    }
}

TEST(Matrix, IntersectionMatchesEnumeration) {
    const Field f = Field::create(2, 2);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 4;
        const Matrix a = oracle::random_full_rank(f, 2, n, rng);
        const Matrix b = oracle::random_full_rank(f, 2 + trial % 2, n, rng);
        const auto in_b = [&](const std::vector<Element>& w) {
            Matrix m = b;
            m.append_row(w);
            return rank(m) == b.rows();
        };
        std::size_t count = 0;
        for (const auto& w : oracle::all_codewords(a)) count += in_b(w) ? 1 : 0;
        const Matrix meet = rowspace_intersection(a, b);
        std::size_t expected = 1;
        for (std::size_t i = 0; i < meet.rows(); ++i) expected *= f.q();
        ASSERT_EQ(count, expected);
        EXPECT_EQ(rref(meet).reduced, meet);  // canonical form
    }
}

TEST(Matrix, SerializeRoundTripAndErrors) {
    const Field f = Field::create(3, 2);
    const Matrix m = Matrix::from_values(f, {{0, 1, 8}, {4, 5, 2}});
    EXPECT_EQ(Matrix::parse(f, m.serialize()), m);
    EXPECT_EQ(m.serialize(), "2 3\n0 0  0 1  2 2\n1 1  1 2  0 2\n");
    EXPECT_THROW(Matrix::parse(f, "2 2\n0 0"), InvalidArgument);
    EXPECT_THROW(Matrix::parse(f, "x"), InvalidArgument);
    EXPECT_THROW(Matrix::from_values(f, {{1, 2}, {1}}), InvalidArgument);
    EXPECT_THROW(m * m, InvalidArgument);
}

TEST(Matrix, TransposeSelectAndMap) {
    const Field f = Field::create(5, 1);
    const Matrix m = Matrix::from_values(f, {{1, 2, 3}, {4, 0, 1}});
    EXPECT_EQ(m.transpose().transpose(), m);
    const std::vector<std::size_t> cols{2, 0};
    EXPECT_EQ(m.select_columns(cols), Matrix::from_values(f, {{3, 1}, {1, 4}}));
    EXPECT_EQ(m.map([](const Element& x) { return x + x; }), Matrix::from_values(f, {{2, 4, 1}, {3, 0, 2}}));
    EXPECT_EQ(Matrix::identity(f, 3) * m.transpose(), m.transpose());
}

}  // namespace
