#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "riscov/analytic.hpp"
#include "riscov/mcsim.hpp"

using namespace riscov;
using channel::GammaFit;
using geometry::NetworkRealization;
using geometry::SystemParams;

TEST_CASE("estimate bookkeeping") {
    const auto e = mcsim::make_estimate(750, 1000);
    CHECK(e.probability == 0.75);
    CHECK(std::abs(e.ci_halfwidth_95 - 1.96 * std::sqrt(0.75 * 0.25 / 1000.0)) < 1e-12);
    CHECK(e.trials == 1000);
    const auto full = mcsim::make_estimate(1000, 1000);
    CHECK(full.probability == 1.0);
    CHECK(full.ci_halfwidth_95 == 0.0);
}

TEST_CASE("sinr expressions") {
    SystemParams p;  // a_c = 0.6, a_t = 0.4
    CHECK(mcsim::sinr_sic(0.0, 1.0, p) == 0.0);
    CHECK(mcsim::sinr_connected(0.0, 1.0, p) == 0.0);

    // interference-and-noise-free limit approaches a_c / a_t = 1.5
    const double ceiling = mcsim::sinr_sic(1e9, 0.0, p);
    CHECK(std::abs(ceiling - 1.5) < 1e-6);
    CHECK(std::abs(mcsim::sinr_connected(1e9, 0.0, p) - 1.5) < 1e-6);

    // direct substitution: gain = 1, interf = 0, sigma^2 = 1 W, P_t = 1 W
    SystemParams q;
    q.p_t_dbm = 30.0;   // 1 W
    q.noise_dbm = 30.0; // 1 W
    CHECK(std::abs(mcsim::sinr_sic(1.0, 0.0, q) - 0.6 / 1.4) < 1e-12);
    // post-SIC with tiny noise: 0.4 * 100 = 40
    SystemParams r;
    r.p_t_dbm = 30.0;
    r.noise_dbm = -90.0;
    CHECK(std::abs(mcsim::sinr_typical_post_sic(1e-10, 0.0, r) - 0.4 * 100.0) < 1e-9);
}

TEST_CASE("interference on a frozen realization") {
    SystemParams p;
    p.p_t_dbm = 20.0;  // 0.1 W
    NetworkRealization real;
    real.d_serving = 100.0;
    real.d_interferers = {200.0, 300.0, 500.0};
    double sum_pl = 0.0;
    for (double d : real.d_interferers) sum_pl += std::pow(d, -4.0);

    const GammaFit fit{5.0, 5.0};

    SUBCASE("empty interferer list") {
        NetworkRealization none;
        none.d_serving = 100.0;
        RandomStream rng(1);
        CHECK(mcsim::interference_typical(none, p, fit, mcsim::FadingMode::model_faithful,
                                          rng) == 0.0);
    }

    SUBCASE("rho = 0 collapses to the Rayleigh field") {
        SystemParams q = p;
        q.rho_i = 0.0;
        RandomStream rng(2);
        double mean = 0.0;
        const int draws = 1000000;
        for (int i = 0; i < draws; ++i)
            mean += mcsim::interference_typical(real, q, fit,
                                                mcsim::FadingMode::model_faithful, rng);
        mean /= draws;
        const double expect = 0.1 * sum_pl;  // E[Exp(1)] = 1
        CHECK(std::abs(mean - expect) / expect < 0.005);
    }

    SUBCASE("rho = 1 with the Gamma law has mean a b") {
        SystemParams q = p;
        q.rho_i = 1.0;
        RandomStream rng(3);
        double mean = 0.0;
        const int draws = 1000000;
        for (int i = 0; i < draws; ++i)
            mean += mcsim::interference_typical(real, q, fit,
                                                mcsim::FadingMode::model_faithful, rng);
        mean /= draws;
        const double expect = 0.1 * 25.0 * sum_pl;
        CHECK(std::abs(mean - expect) / expect < 0.005);
    }

    SUBCASE("physical mode uses the coherent sum law") {
        SystemParams q = p;
        q.rho_i = 1.0;
        q.n = 5;
        RandomStream rng(4);
        double mean = 0.0;
        const int draws = 300000;
        for (int i = 0; i < draws; ++i)
            mean += mcsim::interference_typical(real, q, fit, mcsim::FadingMode::physical,
                                                rng);
        mean /= draws;
        const double expect = 0.1 * channel::rayleigh_sum_mean_square(6) * sum_pl;
        CHECK(std::abs(mean - expect) / expect < 0.01);
    }
}

TEST_CASE("sic and post-sic ratios share the gain draw") {
    // gamma_SIC = (a_c/a_t) gamma_t / (gamma_t + 1) whenever both are formed
    // from the same gain and interference
    SystemParams p;
    RandomStream rng(64);
    for (int i = 0; i < 200; ++i) {
        const double gain = rng.exponential() * 1e-9;
        const double interf = rng.exponential() * 1e-11;
        const double g_sic = mcsim::sinr_sic(gain, interf, p);
        const double g_t = mcsim::sinr_typical_post_sic(gain, interf, p);
        const double predicted = (p.a_c / p.a_t) * g_t / (g_t + 1.0);
        CHECK(std::abs(g_sic - predicted) / predicted < 1e-12);
    }
}

TEST_CASE("trivial coverage limits") {
    SystemParams p;
    const GammaFit fit{5.0, 5.0};
    SystemParams p0 = p;
    p0.gamma_sic_th = p0.gamma_t_th = p0.gamma_c_th = 0.0;
    const auto t0 = mcsim::estimate_coverage_typical(
        p0, fit, 20000, mcsim::FadingMode::model_faithful, 99);
    CHECK(t0.probability == 1.0);
    const auto c0 = mcsim::estimate_coverage_connected(p0, 20000, 99);
    CHECK(c0.probability == 1.0);

    SystemParams pinf = p;
    pinf.gamma_sic_th = pinf.a_c / pinf.a_t + 1e-3;
    const auto tinf = mcsim::estimate_coverage_typical(
        pinf, fit, 10000, mcsim::FadingMode::model_faithful, 99);
    CHECK(tinf.probability == 0.0);
    SystemParams cinf = p;
    cinf.gamma_c_th = cinf.a_c / cinf.a_t + 1e-3;
    const auto cinf_est = mcsim::estimate_coverage_connected(cinf, 10000, 99);
    CHECK(cinf_est.probability == 0.0);
}

TEST_CASE("estimates are schedule independent") {
    SystemParams p;
    p.gamma_sic_th = p.gamma_t_th = 1.0;  // mid-range coverage
    const GammaFit fit{5.0, 5.0};
    const auto serial = mcsim::estimate_coverage_typical(
        p, fit, 40000, mcsim::FadingMode::model_faithful, 4242,
        mcsim::OwnChannelModel::approx, 1);
    const auto quad = mcsim::estimate_coverage_typical(
        p, fit, 40000, mcsim::FadingMode::model_faithful, 4242,
        mcsim::OwnChannelModel::approx, 4);
    CHECK(serial.successes == quad.successes);
    CHECK(serial.probability == quad.probability);

    const auto c1 = mcsim::estimate_coverage_connected(p, 40000, 777, 1);
    const auto c3 = mcsim::estimate_coverage_connected(p, 40000, 777, 3);
    CHECK(c1.successes == c3.successes);
}

TEST_CASE("connected-user estimator tracks the exact analytic value") {
    SystemParams p;
    p.gamma_c_th = 1.0;  // coverage ~0.93, informative at 1e5 trials
    const auto mc = mcsim::estimate_coverage_connected(p, 100000, 31415);
    const double ana = analytic::coverage_connected(p).probability;
    CHECK(std::abs(mc.probability - ana) < 0.01);
}

TEST_CASE("own-channel model flag") {
    // at beta < 1 the exact law carries the unweighted direct path, so its
    // coverage is at least the approx one (larger mean gain)
    SystemParams p;
    p.beta = 0.6;
    p.gamma_sic_th = p.gamma_t_th = 1.0;
    const GammaFit fit = channel::fit_gamma({p.n, p.beta, p.amplitude_gain},
                                            channel::FitMode::paper);
    const auto approx = mcsim::estimate_coverage_typical(
        p, fit, 200000, mcsim::FadingMode::model_faithful, 5, mcsim::OwnChannelModel::approx);
    const auto exact = mcsim::estimate_coverage_typical(
        p, fit, 200000, mcsim::FadingMode::model_faithful, 5, mcsim::OwnChannelModel::exact);
    CHECK(exact.probability >
          approx.probability - 2.0 * (exact.ci_halfwidth_95 + approx.ci_halfwidth_95));
}

TEST_CASE("csv emitters") {
    std::ostringstream os;
    mcsim::write_estimates_csv(os, "p_t_dbm", {0.0, 10.0},
                               {mcsim::make_estimate(5, 10), mcsim::make_estimate(7, 10)});
    const std::string text = os.str();
    CHECK(text.find("param_swept,value,p_hat,ci95,trials\n") == 0);
    CHECK(text.find("p_t_dbm,0,0.5,") != std::string::npos);
    CHECK(text.find(",10\n") != std::string::npos);
}
