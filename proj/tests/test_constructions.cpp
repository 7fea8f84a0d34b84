#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "galhull/constructions.hpp"
#include "oracles.hpp"

using namespace galhull;

namespace {

// Hull dimension from three independent routes, plus MDS.
void expect_hull(const GrsSpec& spec, unsigned e, std::size_t l) {
    const LinearCode c = generator_matrix(spec);
    ASSERT_EQ(c.k(), spec.k);
    ASSERT_EQ(c.n(), spec.length());
    EXPECT_EQ(hull(c, e).dim, l);
    EXPECT_EQ(oracle::hull_dim_gram(c.generator(), e), l);
    EXPECT_EQ(is_mds(c).verdict, MdsVerdict::ProvedMds);
}

void expect_throws_with(const std::function<void()>& fn, const std::string& fragment) {
    try {
        fn();
        ADD_FAILURE() << "expected HypothesisError containing '" << fragment << "'";
    } catch (const HypothesisError& ex) {
        EXPECT_NE(std::string(ex.what()).find(fragment), std::string::npos) << ex.what();
    }
}

TEST(CosetPoints, LayoutAndEpsilon) {
    const Field f = Field::create(3, 4);
    const auto ps = theorem_c_points(f, 1, 1, 3, 2);
    ASSERT_EQ(ps.n(), 9u);
    EXPECT_EQ(ps.points.size(), 9u);
    EXPECT_EQ(ps.beta_labels.front(), f.zero());
    // First coset is H itself and contains 0.
    EXPECT_EQ(ps.points.front(), f.zero());
    std::vector<std::uint64_t> seen;
    for (const auto& x : ps.points) seen.push_back(x.value());
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
    // epsilon * u_i lies in GF(3)^* at every point.
    const auto u = compute_u(ps.points);
    for (const auto& ui : u) {
        const Element x = ps.epsilon * ui;
        EXPECT_FALSE(x.is_zero());
        EXPECT_EQ(x.pow(3), x);
    }
}

TEST(CosetPoints, SingleCosetIsTheSubspace) {
    const Field f = Field::create(3, 4);
    const auto ps = theorem_c_points(f, 1, 2, 1, 2);
    EXPECT_EQ(ps.n(), 9u);
    // H is closed under addition.
    for (const auto& x : ps.points)
        for (const auto& y : ps.points) EXPECT_NE(std::find(ps.points.begin(), ps.points.end(), x + y), ps.points.end());
}

TEST(CosetPoints, RejectsBadParameters) {
    const Field f = Field::create(3, 4);
    EXPECT_THROW(theorem_c_points(f, 3, 1, 1, 1), HypothesisError);  // m does not divide h
    EXPECT_THROW(theorem_c_points(f, 1, 4, 1, 2), HypothesisError);  // z too large
    EXPECT_THROW(theorem_c_points(f, 1, 1, 4, 2), HypothesisError);  // w > p^m
    EXPECT_THROW(theorem_c_points(f, 1, 1, 1, 3), HypothesisError);  // 8 does not divide 4
    EXPECT_THROW(theorem_c_points(Field::create(2, 4), 1, 1, 1, 1), HypothesisError);
}

TEST(TheoremC, GridOverGf81) {
    const Field f = Field::create(3, 4);
    for (unsigned z : {1u, 2u})
        for (unsigned w = 1; w <= 3; ++w) {
            const auto ps = theorem_c_points(f, 1, z, w, 2);
            const auto kmax = static_cast<std::size_t>(dimension_bound(3, 1, ps.n(), 0));
            for (bool ext : {false, true})
                for (std::size_t k = 1; k <= std::min<std::size_t>(kmax, 4); ++k)
                    for (std::size_t l = 0; l + (ext ? 1 : 0) <= k; ++l) {
                        if (ps.n() < 2) continue;
                        const auto c = theorem_c_code(ps, 1, k, l, ext);
                        SCOPED_TRACE(testing::Message() << "n=" << ps.n() << " k=" << k << " l=" << l << " ext=" << ext);
                        expect_hull(c.spec, 1, l);
                    }
        }
}

TEST(TheoremC, EuclideanOverGf729) {
    const Field f = Field::create(3, 6);
    for (unsigned z : {1u, 2u})
        for (unsigned w = 1; w <= 3; ++w) {
            const auto ps = theorem_c_points(f, 1, z, w, 1);
            if (ps.n() > 12 || ps.n() < 2) continue;
            const auto kmax = static_cast<std::size_t>(dimension_bound(3, 0, ps.n(), 0));
            for (std::size_t k = 1; k <= kmax; ++k)
                for (std::size_t l = 0; l <= k; ++l) expect_hull(theorem_c_code(ps, 0, k, l, false).spec, 0, l);
        }
}

TEST(TheoremC, BruteForceAgreesOnSmallCase) {
    const Field f = Field::create(5, 2);
    const auto ps = theorem_c_points(f, 1, 1, 2, 1);  // n = 10, e = 0
    for (std::size_t l = 0; l <= 2; ++l) {
        const auto c = theorem_c_code(ps, 0, 2, l, false);
        const Matrix g = generator_matrix(c.spec).generator();
        EXPECT_EQ(oracle::hull_dim_bruteforce(g, 0), l);
    }
}

TEST(TheoremC, RejectsMismatchedParameters) {
    const Field f = Field::create(3, 4);
    const auto ps = theorem_c_points(f, 1, 1, 3, 2);
    expect_throws_with([&] { theorem_c_code(ps, 2, 1, 0, false); }, "2^t must equal p^e + 1");
    expect_throws_with([&] { theorem_c_code(ps, 1, 3, 0, false); }, "exceeds the dimension bound");
    expect_throws_with([&] { theorem_c_code(ps, 1, 2, 2, true); }, "extended codes need");
    expect_throws_with([&] { theorem_c_code(ps, 1, 1, 2, false); }, "l must satisfy");
}

TEST(TheoremC, PlanKeepsRescalingTrivial) {
    const Field f = Field::create(3, 4);
    const auto c = theorem_c_code(theorem_c_points(f, 1, 2, 2, 2), 1, 3, 1, false);
    EXPECT_EQ(c.plan.mu, 1);
    EXPECT_EQ(c.plan.nu, 0);
    EXPECT_EQ(c.plan.s, 2u);
    EXPECT_FALSE(c.plan.beta.is_one());
}

// Twisting one more multiplier drops the hull by exactly one.
TEST(TheoremC, TwistIsMonotone) {
    const Field f = Field::create(3, 4);
    const auto ps = theorem_c_points(f, 1, 2, 1, 2);
    const std::size_t k = 2;
    std::size_t prev = k + 1;
    for (std::size_t l = k + 1; l-- > 0;) {
        const auto c = theorem_c_code(ps, 1, k, l, false);
        const std::size_t d = hull(generator_matrix(c.spec), 1).dim;
        EXPECT_EQ(d + 1, prev);
        prev = d;
    }
}

TEST(TheoremA, FromCosetSeeds) {
    const Field f = Field::create(3, 4);
    for (unsigned w = 1; w <= 3; ++w) {
        const auto ps = theorem_c_points(f, 1, 2, w, 2);
        const auto kmax = static_cast<std::size_t>(dimension_bound(3, 1, ps.n(), 0));
        for (std::size_t m = 1; m <= std::min<std::size_t>(kmax, 3); ++m) {
            const GrsSpec seed = theorem_c_code(ps, 1, m, m, false).spec;
            const auto wit = recover_h(seed, 1);
            const auto kb = static_cast<std::size_t>(dimension_bound(3, 3, seed.n(), wit.deg_h()));
            for (std::size_t k = 1; k <= std::min(kb, m); ++k)
                for (std::size_t l = 0; l <= k; ++l) {
                    SCOPED_TRACE(testing::Message() << "n=" << seed.n() << " m=" << m << " k=" << k << " l=" << l);
                    expect_hull(theorem_a_construct(seed, wit, 3, k, l).spec, 3, l);
                }
        }
    }
}

TEST(TheoremA, FromSearchedSeeds) {
    const Field f = Field::create(3, 2);
    const auto seed = find_self_orthogonal_seed(f, first_locators(f, 8), 2, 1, false);
    ASSERT_TRUE(seed.has_value());
    const auto wit = recover_h(*seed, 1);
    const auto kb = static_cast<std::size_t>(dimension_bound(3, 1, 8, wit.deg_h()));
    ASSERT_GE(kb, 1u);
    for (std::size_t k = 1; k <= std::min<std::size_t>(kb, 2); ++k)
        for (std::size_t l = 0; l <= k; ++l) expect_hull(theorem_a_construct(*seed, wit, 1, k, l).spec, 1, l);
}

TEST(TheoremA, ExtendedSeed) {
    const Field f = Field::create(3, 2);
    const auto seed = find_self_orthogonal_seed(f, first_locators(f, 3), 2, 1, true);
    ASSERT_TRUE(seed.has_value());
    const auto wit = recover_h(*seed, 1);
    const auto kb = static_cast<std::size_t>(dimension_bound(3, 1, 3, wit.deg_h()));
    for (std::size_t k = 1; k <= std::min<std::size_t>(kb, 2); ++k)
        for (std::size_t l = 0; l + 1 <= k; ++l) expect_hull(theorem_a_construct(*seed, wit, 1, k, l).spec, 1, l);
}

TEST(TheoremA, Hypotheses) {
    const Field f81 = Field::create(3, 4);
    expect_throws_with([&] { check_theorem_a_hypotheses(f81, 1, 2); }, "gcd(e', h) must equal e");
    expect_throws_with([&] { check_theorem_a_hypotheses(Field::create(3, 6), 2, 2); }, "h/e must be even");
    expect_throws_with([&] { check_theorem_a_hypotheses(Field::create(2, 2), 1, 1); }, "q must be at least 5");
    expect_throws_with([&] { check_theorem_a_hypotheses(f81, 1, 0); }, "e' must satisfy");
    EXPECT_NO_THROW(check_theorem_a_hypotheses(f81, 1, 3));
    EXPECT_NO_THROW(check_theorem_a_hypotheses(f81, 2, 2));

    const auto ps = theorem_c_points(f81, 1, 1, 3, 2);
    const GrsSpec seed = theorem_c_code(ps, 1, 2, 2, false).spec;
    const auto wit = recover_h(seed, 1);
    expect_throws_with([&] { theorem_a_construct(seed, wit, 1, 3, 0); }, "exceeds the dimension bound");
    SelfOrthogonalWitness bad = wit;
    bad.lambda = bad.lambda + f81.one();
    bad.g = bad.h * bad.lambda;
    expect_throws_with([&] { theorem_a_construct(seed, bad, 1, 1, 0); }, "witness");
    const GrsSpec twisted = theorem_c_code(ps, 1, 2, 1, false).spec;
    expect_throws_with([&] { theorem_a_construct(twisted, wit, 1, 1, 0); }, "not 1-Galois self-orthogonal");
}

TEST(TheoremB, FromHermitianSeeds) {
    const Field f = Field::create(3, 4);
    const auto seed = find_self_orthogonal_seed(f, first_locators(f, 4), 1, 2, false);
    ASSERT_TRUE(seed.has_value());
    const auto wit = recover_h(*seed, 2);
    for (std::size_t l = 0; l <= 1; ++l) expect_hull(theorem_b_construct(*seed, wit, 0, 1, l).spec, 0, l);
}

TEST(TheoremB, Gf729NonEuclideanTarget) {
    const Field f = Field::create(3, 6);
    const auto seed = find_self_orthogonal_seed(f, first_locators(f, 4), 1, 3, false);
    ASSERT_TRUE(seed.has_value());
    const auto wit = recover_h(*seed, 3);
    for (unsigned ep : {0u, 2u, 4u}) {
        const auto kb = dimension_bound(3, ep, 4, wit.deg_h());
        if (kb < 1) continue;
        for (std::size_t l = 0; l <= 1; ++l) expect_hull(theorem_b_construct(*seed, wit, ep, 1, l).spec, ep, l);
    }
}

TEST(TheoremB, ExtendedHermitianSeed) {
    const Field f = Field::create(3, 2);
    const auto seed = find_self_orthogonal_seed(f, first_locators(f, 3), 2, 1, true);
    ASSERT_TRUE(seed.has_value());
    const auto wit = recover_h(*seed, 1);
    const auto kb = static_cast<std::size_t>(dimension_bound(3, 0, 3, wit.deg_h()));
    for (std::size_t k = 1; k <= std::min<std::size_t>(kb, 2); ++k)
        for (std::size_t l = 0; l + 1 <= k; ++l) expect_hull(theorem_b_construct(*seed, wit, 0, k, l).spec, 0, l);
}

TEST(TheoremB, Hypotheses) {
    expect_throws_with([] { check_theorem_b_hypotheses(Field::create(2, 2), 0); }, "q must be odd");
    expect_throws_with([] { check_theorem_b_hypotheses(Field::create(3, 3), 0); }, "h must be even");
    expect_throws_with([] { check_theorem_b_hypotheses(Field::create(3, 4), 1); }, "h/gcd(e', h) must be odd");
    EXPECT_NO_THROW(check_theorem_b_hypotheses(Field::create(3, 6), 2));

    const Field f = Field::create(3, 4);
    const auto ps = theorem_c_points(f, 1, 1, 3, 2);
    const GrsSpec seed = theorem_c_code(ps, 1, 2, 2, false).spec;
    expect_throws_with([&] { theorem_b_construct(seed, recover_h(seed, 1), 0, 1, 0); }, "Hermitian");
}

}  // namespace
