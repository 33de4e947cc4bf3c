#include "irs/clt.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "irs/chernoff.hpp"
#include "irs/montecarlo.hpp"
#include "irs/rng.hpp"
#include "irs/saddlepoint.hpp"
#include "oracles.hpp"

using irs::OutageQuery;
using irs::Scenario;
using irs::SystemConfig;

namespace {

// gamma_t that puts the channel threshold exactly at `s`
double gamma_t_for(const SystemConfig& c, double s) { return c.gamma_bar / (c.beta_r() * s * s); }

}  // namespace

TEST(MomentsG, MatchQuadrature) {
    const auto m = irs::clt::moments_g();
    const double mean = irs::test::moment_g(1);
    const double second = irs::test::moment_g(2);
    EXPECT_NEAR(m.mean, mean, 1e-12);
    EXPECT_NEAR(m.mean, 0.785398, 1e-6);
    EXPECT_NEAR(second, 1.0, 1e-12);
    EXPECT_NEAR(m.variance, second - mean * mean, 1e-12);
    EXPECT_NEAR(m.variance, 1.0 - std::numbers::pi * std::numbers::pi / 16.0, 1e-15);
}

TEST(MomentsG, MatchMonteCarloMean) {
    irs::CounterRng rng(5);
    const std::uint64_t draws = 10'000'000;
    double sum = 0.0;
    for (std::uint64_t i = 0; i < draws; ++i) sum += irs::mc::sample_h1(1, rng);
    const auto m = irs::clt::moments_g();
    const double se = std::sqrt(m.variance / draws);
    EXPECT_NEAR(sum / draws, m.mean, 4.0 * se);
}

TEST(MomentsD, RayleighMoments) {
    const auto m1 = irs::clt::moments_d(1.0);
    EXPECT_NEAR(m1.mean, std::sqrt(std::numbers::pi) / 2.0, 1e-15);
    const double mean_q = irs::test::integrate([](double x) { return 2.0 * x * x * std::exp(-x * x); }, 0.0,
                                               irs::test::kInf);
    const double second_q = irs::test::integrate([](double x) { return 2.0 * x * x * x * std::exp(-x * x); }, 0.0,
                                                 irs::test::kInf);
    EXPECT_NEAR(m1.mean, mean_q, 1e-12);
    EXPECT_NEAR(m1.variance, second_q - mean_q * mean_q, 1e-12);

    const auto m4 = irs::clt::moments_d(4.0);
    EXPECT_NEAR(m4.mean, 2.0 * m1.mean, 1e-15);
    EXPECT_NEAR(m4.variance, 4.0 * m1.variance, 1e-15);

    const auto tiny = irs::clt::moments_d(1e-300);
    EXPECT_LT(tiny.mean, 1e-149);
    EXPECT_LT(tiny.variance, 1e-299);
    EXPECT_THROW(irs::clt::moments_d(0.0), std::domain_error);
    EXPECT_THROW(irs::clt::moments_d(-2.0), std::domain_error);
}

TEST(LogNormalCdf, MatchesErfcAndDeepTail) {
    for (double z = -8.0; z <= 8.0; z += 0.25) {
        EXPECT_NEAR(irs::clt::log_normal_cdf(z), std::log(0.5 * std::erfc(-z / std::sqrt(2.0))), 1e-13)
            << "z = " << z;
    }
    // Mills-ratio leading term at z = -40
    const double z = -40.0;
    const double approx = -0.5 * z * z - std::log(-z) - 0.5 * std::log(2.0 * std::numbers::pi);
    EXPECT_NEAR(irs::clt::log_normal_cdf(z), approx, 1e-3);
    EXPECT_TRUE(std::isfinite(irs::clt::log_normal_cdf(-1e3)));
}

TEST(CltOutage, MedianAtTheMean) {
    SystemConfig c;
    c.n_elements = 8;
    const double mu = 8.0 * std::numbers::pi / 4.0;
    EXPECT_NEAR(irs::clt::clt_outage({c, Scenario::NoDirectLink, gamma_t_for(c, mu)}).log_value, std::log(0.5),
                1e-12);
    const double mu2 = mu + irs::clt::moments_d(c.alpha_l()).mean;
    EXPECT_NEAR(irs::clt::clt_outage({c, Scenario::WithDirectLink, gamma_t_for(c, mu2)}).log_value, std::log(0.5),
                1e-12);
}

TEST(CltOutage, NondecreasingInThreshold) {
    SystemConfig c;
    for (auto sc : {Scenario::NoDirectLink, Scenario::WithDirectLink}) {
        double prev = -INFINITY;
        for (double s = 0.01; s < 20.0; s *= 1.05) {
            const double v = irs::clt::clt_outage({c, sc, gamma_t_for(c, s)}).log_value;
            EXPECT_GE(v, prev);
            EXPECT_LE(v, 0.0);
            prev = v;
        }
    }
}

TEST(CltOutage, AccurateNearTheMean) {
    SystemConfig c;
    c.n_elements = 16;
    // threshold where the Gaussian puts 0.3 of the mass below
    const auto g = irs::clt::moments_g();
    const double s = 16.0 * g.mean - 0.5244005127080407 * std::sqrt(16.0 * g.variance);
    const OutageQuery q{c, Scenario::NoDirectLink, gamma_t_for(c, s)};
    irs::mc::McConfig cfg;
    cfg.n_samples = 2'000'000;
    cfg.seed = 31;
    const auto est = irs::mc::mc_outage(q, cfg);
    const double clt = irs::clt::clt_outage(q).linear();
    EXPECT_NEAR(clt, 0.3, 1e-9);
    EXPECT_LT(std::abs(clt - est.p_hat) / est.p_hat, 0.10) << "mc " << est.p_hat;
}

TEST(CltOutage, FailsInTheDeepTail) {
    // N = 16 at 30 dB lies near 1e-13, beyond Monte Carlo reach. The Chernoff
    // bound is a rigorous ceiling for the true value, so a CLT value more than
    // half a decade above it is at least that far from the truth.
    SystemConfig c;
    c.n_elements = 16;
    const OutageQuery q{c, Scenario::NoDirectLink, irs::db_to_linear(30.0)};
    const double clt10 = irs::clt::clt_outage(q).log10();
    const double bound10 = irs::chernoff::chernoff_outage(q).log_bound.log10();
    const double sp10 = irs::saddlepoint::saddlepoint_outage(q).value.log10();
    EXPECT_GT(clt10 - bound10, 0.5);
    EXPECT_LT(sp10, bound10);
}

TEST(CltOutage, WorseThanSaddlepointWhereMonteCarloResolves) {
    // N = 16 at 20 dB sits near 1e-4: enough hits at 1e7 samples
    SystemConfig c;
    c.n_elements = 16;
    const OutageQuery q{c, Scenario::NoDirectLink, irs::db_to_linear(20.0)};
    irs::mc::McConfig cfg;
    cfg.n_samples = 10'000'000;
    cfg.seed = 77;
    const auto est = irs::mc::mc_outage(q, cfg);
    ASSERT_GE(est.hits, 100u);
    const double mc10 = std::log10(est.p_hat);
    const double clt_gap = std::abs(irs::clt::clt_outage(q).log10() - mc10);
    const double sp_gap = std::abs(irs::saddlepoint::saddlepoint_outage(q).value.log10() - mc10);
    EXPECT_LT(sp_gap, clt_gap);
    EXPECT_GT(clt_gap, 0.5);
}
