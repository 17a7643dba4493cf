#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "desinc/bounds.hpp"
#include "desinc/error.hpp"
#include "desinc/testfns.hpp"
#include "oracle.hpp"

using namespace desinc;

namespace {

DecayParams f1_se() { return preset({TestFunction::F1, Method::T22}); }
DecayParams f2_se() { return preset({TestFunction::F2, Method::T22}); }
DecayParams f1_de() { return preset({TestFunction::F1, Method::T23}); }
DecayParams f2_de() { return preset({TestFunction::F2, Method::T23}); }

}  // namespace

TEST(SeBound, MatchesHighPrecisionReevaluation)
{
    for (const auto& p : {f1_se(), f2_se()}) {
        for (int n : {1, 2, 20, 80, 142, 200}) {
            const auto b = se_bound(p, n);
            const auto ref = oracle::se_bound(p, n);
            EXPECT_LE(oracle::rel_diff(b.bound_value, ref.value), 1e-12) << n;
            EXPECT_LE(oracle::rel_diff(b.components.discretization, ref.discretization), 1e-12);
            EXPECT_LE(oracle::rel_diff(b.components.truncation, ref.truncation), 1e-12);
        }
    }
    // Frozen 50-digit values for the f1 parameter set at n = 20.
    const auto b = se_bound(f1_se(), 20);
    EXPECT_NEAR(b.bound_value / 0.014720752094589239, 1.0, 1e-12);
    EXPECT_NEAR(b.components.discretization / 13356.046240191628, 1.0, 1e-12);
    EXPECT_NEAR(b.components.truncation / 551.42164682384071, 1.0, 1e-12);
}

TEST(SeBound, DecayProfile)
{
    const auto p = f1_se();
    const double rate = std::numbers::pi * p.d * p.mu;
    const double ratio = se_bound(p, 80).bound_value / se_bound(p, 20).bound_value;
    const double profile = std::sqrt(80.0) * std::exp(-std::sqrt(rate * 80)) / (std::sqrt(20.0) * std::exp(-std::sqrt(rate * 20)));
    EXPECT_NEAR(ratio / profile, 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(se_bound(p, 20).constant_part, se_bound(p, 80).constant_part);
}

TEST(SeBound, Errors)
{
    auto p = f1_se();
    p.d = std::numbers::pi;
    EXPECT_THROW((void)se_bound(p, 10), RegimeError);
    EXPECT_THROW((void)se_bound(preset({TestFunction::F1, Method::T21}), 10), ContractError);
    EXPECT_THROW((void)se_bound(f1_se(), 0), DomainError);
}

TEST(DeBound, MatchesHighPrecisionReevaluation)
{
    for (const auto& p : {f1_de(), f2_de()}) {
        for (int n = min_n_for_bound(p); n <= 200; n += 7) {
            const auto b = de_bound(p, n);
            const auto ref = oracle::de_bound(p, n);
            EXPECT_LE(oracle::rel_diff(b.bound_value, ref.value), 1e-12) << n;
        }
    }
    const auto b = de_bound(f1_de(), 20);
    // C_T = 34 e^{pi/2}/(1 - log 2) + 3.39 (e^{pi/2 + 1/log 2})^{1.5}
    EXPECT_NEAR(b.components.truncation, 8.4e2, 5.0);
    EXPECT_NEAR(b.components.truncation / 844.40847223515170, 1.0, 1e-12);
    EXPECT_NEAR(b.components.discretization / 116516.66814050311, 1.0, 1e-12);
    EXPECT_NEAR(b.constant_part / 51964.662526466188, 1.0, 1e-12);
    EXPECT_NEAR(b.bound_value / 0.00025957222768665325, 1.0, 1e-12);
    EXPECT_NEAR(b.components.c_d, 1.5691366873591326, 1e-13);
}

TEST(DeBound, DoublingRatio)
{
    const auto p = f1_de();
    for (int n : {5, 12, 25}) {
        const double ratio = de_bound(p, 2 * n).bound_value / de_bound(p, n).bound_value;
        const double d = p.d, mu = p.mu, pi = std::numbers::pi;
        const double want = std::exp(-pi * d * (2 * n) / std::log(4 * d * n / mu) + pi * d * n / std::log(2 * d * n / mu));
        EXPECT_NEAR(ratio / want, 1.0, 1e-12);
    }
}

TEST(DeBound, RefusesOutsideRegime)
{
    auto p = f1_de();
    EXPECT_THROW((void)de_bound(p, 1), RegimeError);  // n < mu e / (2d)
    p.d = 1.2;                                        // >= d_L
    EXPECT_THROW((void)de_bound(p, 20), RegimeError);
    p.d = 0.55;                                       // threshold fails
    EXPECT_THROW((void)de_bound(p, 20), RegimeError);
    p.d = 0.6;
    EXPECT_NO_THROW((void)de_bound(p, 20));
    EXPECT_THROW((void)de_bound(preset({TestFunction::F2, Method::T21}), 20), ContractError);
}

TEST(BoundProperty, PositiveFiniteAndDecreasing)
{
    for (const auto& p : {f1_de(), f2_de()}) {
        double prev = std::numeric_limits<double>::infinity();
        for (int n = min_n_for_bound(p); n <= 200; ++n) {
            const double v = de_bound(p, n).bound_value;
            ASSERT_TRUE(std::isfinite(v));
            ASSERT_GT(v, 0.0);
            ASSERT_LT(v, prev) << n;
            prev = v;
        }
    }
    for (const auto& p : {f1_se(), f2_se()}) {
        double prev = std::numeric_limits<double>::infinity();
        for (int n = 1; n <= 200; ++n) {
            const double v = se_bound(p, n).bound_value;
            ASSERT_TRUE(std::isfinite(v));
            ASSERT_GT(v, 0.0);
            ASSERT_LE(v, prev) << n;
            prev = v;
        }
    }
}

TEST(LemmaMargins, EqualityCasesAtZero)
{
    const std::vector<double> xs{0.0};
    const auto m = lemma_margins(xs);
    ASSERT_EQ(m.size(), 1U);
    ASSERT_TRUE(m[0].right_half.has_value());
    ASSERT_TRUE(m[0].left_half.has_value());
    EXPECT_EQ(*m[0].right_half, 0.0);
    EXPECT_EQ(*m[0].left_half, 0.0);
    EXPECT_GE(m[0].log_over_exp, 0.0);
}

TEST(LemmaMargins, SidesSelectedBySign)
{
    const std::vector<double> xs{-1.0, 1.0};
    const auto m = lemma_margins(xs);
    EXPECT_FALSE(m[0].right_half.has_value());
    EXPECT_TRUE(m[0].left_half.has_value());
    EXPECT_TRUE(m[1].right_half.has_value());
    EXPECT_FALSE(m[1].left_half.has_value());
}

TEST(LemmaMargins, DenseSweepIsNonnegative)
{
    std::vector<double> xs;
    for (int i = 0; i < 1000; ++i) {
        xs.push_back(-6.0 + 12.0 * i / 999.0);
    }
    for (const auto& m : lemma_margins(xs)) {
        ASSERT_GE(m.min_margin(), -1e-15) << m.x;
    }
}

TEST(LemmaMargins, AgreesWithHighPrecision)
{
    // Margin (a) evaluated naively in 50 digits.
    for (double x : {-5.0, -1.0, -0.1, 0.3, 2.0, 5.5}) {
        const oracle::Real t = oracle::pi() * sinh(oracle::Real(x));
        const oracle::Real l = boost::math::log1p(exp(t));
        const oracle::Real value = l / (1 + l) * (1 + exp(t)) / exp(t);
        const std::vector<double> xs{x};
        const double got = lemma_margins(xs)[0].log_over_exp;
        EXPECT_NEAR(got, static_cast<double>(1 - value), 1e-15) << x;
    }
}
