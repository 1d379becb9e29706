#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "korobov/approximator.hpp"
#include "korobov/errors.hpp"

using namespace korobov;

namespace {

KorobovParams list_params(std::vector<double> g, std::vector<double> a) {
    return validate(weights::Explicit{std::move(g)}, smoothness::Explicit{std::move(a)});
}

// Random finite-support polynomial scaled onto the unit sphere of H, or
// strictly inside it when `shrink` < 1.
FourierPoly random_unit_ball(std::mt19937& rng, const KorobovParams& p, std::size_t d, double shrink) {
    std::uniform_int_distribution<int> kdist(-4, 4);
    std::uniform_int_distribution<int> sizes(1, 12);
    std::normal_distribution<double> coef;
    FourierPoly f(d);
    const int terms = sizes(rng);
    for (int t = 0; t < terms; ++t) {
        Frequency k(d);
        for (auto& v : k) v = kdist(rng);
        if (product_r(k, p, d) == 0.0) continue;
        f.set(k, {coef(rng), coef(rng)});
    }
    const double norm = h_norm(f, p);
    FourierPoly out(d);
    for (const auto& [k, c] : f.terms()) out.set(k, c * (shrink / norm));
    return out;
}

}  // namespace

TEST(Approximator, HNormExamples) {
    const auto half = list_params({0.5}, {1});
    FourierPoly one(1);
    one.set({0}, 1.0);
    EXPECT_EQ(h_norm(one, half), 1.0);

    FourierPoly f(1);
    f.set({1}, std::sqrt(0.5));
    EXPECT_NEAR(h_norm(f, half), 1.0, 1e-15);

    FourierPoly g(1);
    g.set({1}, 1.0);
    EXPECT_EQ(h_norm(g, list_params({0}, {1})), std::numeric_limits<double>::infinity());
    g.set({1}, 0.0);
    EXPECT_EQ(h_norm(g, list_params({0}, {1})), 0.0);
}

TEST(Approximator, SetChecksDimension) {
    FourierPoly f(2);
    EXPECT_THROW(f.set({1}, 1.0), DimensionMismatch);
    EXPECT_THROW(l2_error(FourierPoly(1), FourierPoly(2)), DimensionMismatch);
    EXPECT_EQ(f.coefficient({3, 3}), FourierPoly::Coefficient(0.0));
}

TEST(Approximator, OptimalIndexSetExamples) {
    const auto p = validate(weights::PolyDecay{1}, smoothness::Constant{1});
    EXPECT_EQ(optimal_index_set(p, 3, 1), (std::vector<Frequency>{{0, 0, 0}}));
    EXPECT_EQ(optimal_index_set(list_params({0.5}, {1}), 1, 3),
              (std::vector<Frequency>{{0}, {1}, {-1}}));
    EXPECT_TRUE(optimal_index_set(p, 2, 0).empty());
}

TEST(Approximator, ApproximateExamples) {
    const auto half = list_params({0.5}, {1});
    FourierPoly f(1);
    f.set({0}, 1.0);
    f.set({2}, 1.0);
    const auto a = approximate(f, half, 3);
    ASSERT_EQ(a.terms().size(), 1u);
    EXPECT_EQ(a.coefficient({0}), FourierPoly::Coefficient(1.0));

    FourierPoly g(1);
    g.set({1}, {0.5, -2.0});
    g.set({-1}, 3.0);
    EXPECT_EQ(approximate(g, half, 3), g);
    EXPECT_TRUE(approximate(g, half, 0).terms().empty());
}

TEST(Approximator, L2ErrorExamples) {
    FourierPoly f(1), zero(1);
    f.set({1}, 3.0);
    f.set({2}, 4.0);
    EXPECT_EQ(l2_error(f, f), 0.0);
    EXPECT_DOUBLE_EQ(l2_error(f, zero), 5.0);
    FourierPoly one(1);
    one.set({0}, 1.0);
    EXPECT_EQ(l2_error(one, zero), 1.0);
}

TEST(Approximator, WitnessExamples) {
    const auto half = list_params({0.5}, {1});
    auto w = worst_case_witness(half, 1, 1);
    ASSERT_EQ(w.f.terms().size(), 1u);
    EXPECT_NEAR(std::abs(w.f.coefficient({1}) - std::sqrt(0.5)), 0.0, 1e-16);
    EXPECT_NEAR(w.error, std::sqrt(0.5), 1e-15);

    w = worst_case_witness(validate(weights::Geometric{0.3}, smoothness::Constant{2}), 4, 0);
    EXPECT_EQ(w.f.coefficient({0, 0, 0, 0}), FourierPoly::Coefficient(1.0));
    EXPECT_EQ(w.error, 1.0);

    w = worst_case_witness(list_params({0.5, 0.5}, {1, 1}), 2, 5);
    EXPECT_NEAR(w.error, 0.5, 1e-15);
}

TEST(Approximator, OptimalityOnUnitBall) {
    std::mt19937 rng(20240611);
    const KorobovParams configs[] = {
        list_params({0.5}, {1}),
        validate(weights::PolyDecay{1}, smoothness::Constant{0.75}),
        validate(weights::Geometric{0.6}, smoothness::LogAffine{1, 0.5}),
    };
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto& p = configs[trial % 3];
        const std::size_t d = 1 + trial % 3;
        const std::size_t n = static_cast<std::size_t>(trial) % 51;
        const auto f = random_unit_ball(rng, p, d, trial % 2 ? 1.0 : 0.7);
        if (f.terms().empty()) continue;
        ASSERT_LE(h_norm(f, p), 1.0 + 1e-12);
        const double err = l2_error(f, approximate(f, p, n));
        ASSERT_LE(err, worst_case_error(p, d, n) + 1e-12) << trial;
        ++checked;
    }
    EXPECT_GE(checked, 190);
}

TEST(Approximator, WitnessIsTight) {
    const KorobovParams configs[] = {
        list_params({0.5, 0.5}, {1, 1}),
        validate(weights::PolyDecay{2}, smoothness::Constant{1}),
        validate(weights::Constant{1}, smoothness::LogAffine{0.6, 0.5}),
    };
    for (const auto& p : configs)
        for (std::size_t d = 1; d <= 3; ++d)
            for (std::size_t n : {0u, 1u, 2u, 7u, 30u, 50u}) {
                const auto w = worst_case_witness(p, d, n);
                EXPECT_NEAR(w.error, worst_case_error(p, d, n), 1e-12);
                EXPECT_NEAR(h_norm(w.f, p), 1.0, 1e-12);
                EXPECT_NEAR(l2_error(w.f, approximate(w.f, p, n)), w.error, 1e-15);
            }
}

TEST(Approximator, ProjectionProperties) {
    std::mt19937 rng(99);
    const auto p = validate(weights::PolyDecay{1}, smoothness::Constant{1});
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const auto f = random_unit_ball(rng, p, d, 1.0);
        FourierPoly zero(d);
        EXPECT_LE(l2_error(f, zero), h_norm(f, p) + 1e-15);
        double prev = l2_error(f, zero);
        for (std::size_t n = 0; n <= 60; n += 3) {
            const auto a = approximate(f, p, n);
            EXPECT_EQ(approximate(a, p, n), a);
            const double e = l2_error(f, a);
            EXPECT_LE(e, prev);
            prev = e;
        }
    }
}
