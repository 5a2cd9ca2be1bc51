#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "riscov/analytic.hpp"
#include "riscov/oracles.hpp"
#include "riscov/rng.hpp"

using namespace riscov;
using channel::GammaFit;
using geometry::SystemParams;

namespace {

double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

SystemParams defaults() { return SystemParams{}; }

}  // namespace

TEST_CASE("typical-user interference Laplace transform") {
    const SystemParams p = defaults();
    const GammaFit fit{5.0, 5.0};
    CHECK(analytic::laplace_typical(0.0, 212.0, p, fit) == 1.0);

    // frozen value computed with an independent special-function stack
    CHECK(rel_err(analytic::laplace_typical(1.0, 212.0, p, fit), 0.9999999996786122) <
          1e-12);

    // strictly decreasing in s, in (0,1]
    double prev = 1.0;
    for (double s = 1e4; s <= 1e12; s *= 10.0) {
        const double v = analytic::laplace_typical(s, 212.0, p, fit);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }

    // rho_i = 0 collapses to the single Rayleigh field
    SystemParams p0 = p;
    p0.rho_i = 0.0;
    const double s = 3e9;
    const double direct_only =
        oracle::pgfl_field_laplace(p.lambda_b, 212.0, s * p.p_t_watts() * p.c_t, 1.0,
                                   p.alpha_t);
    CHECK(rel_err(analytic::laplace_typical(s, 212.0, p0, fit), direct_only) < 1e-9);

    // PGFL quadrature oracle at a strongly attenuating point
    SystemParams ph = p;
    ph.rho_i = 0.35;
    const double closed = analytic::laplace_typical(2e10, 180.0, ph, fit);
    const double quad = oracle::pgfl_laplace_typical(2e10, 180.0, ph, fit);
    CHECK(closed < 0.9);
    CHECK(rel_err(closed, quad) < 1e-8);
}

TEST_CASE("connected-user interference Laplace transform") {
    const SystemParams p = defaults();
    CHECK(analytic::laplace_connected(0.0, p) == 1.0);
    CHECK(rel_err(analytic::laplace_connected(1.0, p), 0.9999999995555555) < 1e-12);

    // hypergeometric spot identity 2F1(-1/2,1;1/2;-1) = 1 + pi/4 drives the
    // transform at s r_c^ac / (Pt Cc) = 1
    const double s_unit = std::pow(p.r_c, p.alpha_c) / (p.p_t_watts() * p.c_c);
    const double expect = std::exp(-M_PI * p.lambda_b * p.r_c * p.r_c *
                                   (oracle::gauss2f1_half_identity(1.0) - 1.0));
    CHECK(rel_err(analytic::laplace_connected(s_unit, p), expect) < 1e-12);

    // PGFL quadrature oracle
    const double s = 5e8;
    CHECK(rel_err(analytic::laplace_connected(s, p),
                  oracle::pgfl_laplace_connected(s, p)) < 1e-8);

    double prev = 1.0;
    for (double sv = 1e5; sv <= 1e11; sv *= 10.0) {
        const double v = analytic::laplace_connected(sv, p);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("coverage coefficients") {
    const SystemParams p = defaults();
    const GammaFit fit{5.0, 5.0};
    const auto terms = analytic::build_typical_terms(p, fit);
    CHECK(terms.shape == 5);
    CHECK(rel_err(terms.upsilon, 0.025) < 1e-12);
    CHECK(rel_err(terms.eta_t, 0.0767703899274755) < 1e-12);
    CHECK(rel_err(terms.xi1[0], 1.1387063630411715e-05) < 1e-10);
    // xi1 grows with k (stronger interference attenuation per term)
    for (int k = 1; k < terms.shape; ++k) CHECK(terms.xi1[k] > terms.xi1[k - 1]);

    // non-integer shape rejected (the bound uses a!)
    CHECK_THROWS_AS((analytic::build_typical_terms(p, GammaFit{5.57, 5.31})),
                    std::domain_error);
}

TEST_CASE("typical coverage closed forms at paper defaults") {
    SystemParams p = defaults();
    const GammaFit fit{5.0, 5.0};
    // frozen against the independent implementation (same formulas, scipy stack)
    CHECK(rel_err(analytic::coverage_typical_alpha4(p, fit).probability,
                  0.9999982674814827) < 1e-9);
    p.p_t_dbm = 0.0;
    CHECK(rel_err(analytic::coverage_typical_alpha4(p, fit).probability,
                  0.9995834190669818) < 1e-9);
    p.p_t_dbm = 20.0;
    p.n = 10;
    p.beta = 0.8;
    const GammaFit fit10{10.0, 10.0 * 0.64};
    CHECK(rel_err(analytic::coverage_typical_alpha4(p, fit10).probability,
                  0.9999999988911097) < 1e-9);
}

TEST_CASE("general quadrature matches the alpha=4 closed form") {
    SystemParams p = defaults();
    const GammaFit fit{5.0, 5.0};
    analytic::CoverageQuadrature quad;
    quad.rel_tol = 1e-13;
    const double general = analytic::coverage_typical_general(p, fit, quad).probability;
    const double closed = analytic::coverage_typical_alpha4(p, fit).probability;
    CHECK(rel_err(general, closed) < 1e-9);
}

TEST_CASE("coverage limits and monotonicity") {
    SystemParams p = defaults();
    const GammaFit fit{5.0, 5.0};
    // zero thresholds: exactly 1
    SystemParams p0 = p;
    p0.gamma_sic_th = p0.gamma_t_th = 0.0;
    CHECK(analytic::coverage_typical_alpha4(p0, fit).probability == 1.0);
    CHECK(analytic::coverage_typical_general(p0, fit).probability == 1.0);

    // infeasible threshold: zero with the flag down
    SystemParams pi = p;
    pi.gamma_sic_th = pi.a_c / pi.a_t + 0.01;
    const auto v = analytic::coverage_typical_alpha4(pi, fit);
    CHECK(v.probability == 0.0);
    CHECK(!v.feasible);

    // nonincreasing in the thresholds
    double prev = 1.1;
    for (double th : {1e-3, 1e-2, 1e-1, 0.5, 1.0, 1.4}) {
        SystemParams q = p;
        q.gamma_sic_th = q.gamma_t_th = th;
        const double cov = analytic::coverage_typical_alpha4(q, fit).probability;
        CHECK(cov < prev);
        prev = cov;
    }
    // nondecreasing in transmit power
    prev = 0.0;
    for (double pt : {-10.0, 0.0, 10.0, 20.0}) {
        SystemParams q = p;
        q.p_t_dbm = pt;
        q.gamma_sic_th = q.gamma_t_th = 0.5;  // mid-range so the trend is visible
        const double cov = analytic::coverage_typical_alpha4(q, fit).probability;
        CHECK(cov >= prev);
        prev = cov;
    }
}

TEST_CASE("alpha4 degenerate pieces") {
    // growing noise drives coverage to zero monotonically
    SystemParams p = defaults();
    const GammaFit fit{5.0, 5.0};
    double prev = 1.1;
    for (double noise : {-90.0, -60.0, -40.0, -20.0, 0.0, 10.0}) {
        SystemParams q = p;
        q.noise_dbm = noise;
        const double cov = analytic::coverage_typical_alpha4(q, fit).probability;
        CHECK(cov < prev);
        CHECK(cov >= 0.0);
        prev = cov;
    }
    CHECK(prev < 0.01);

    // xi1 = 0 synthetic term: erfcx(0) = 1 so the k-term reduces to
    // (pi lam / 2) sqrt(pi / xi2)
    analytic::TypicalCoverageTerms terms;
    terms.shape = 1;
    terms.upsilon = 1.0;
    terms.eta_t = 1.0;
    terms.xi1 = {0.0};
    terms.xi2 = {0.37};
    const double lam = 2.3e-6;
    const double got = analytic::coverage_alpha4_from_terms(terms, lam);
    const double want = (M_PI * lam / 2.0) * std::sqrt(M_PI / 0.37);
    CHECK(std::abs(got - want) / want < 1e-14);

    // the noise-free xi2 = 0 case is delegated to the general quadrature
    terms.xi1 = {1e-5};
    terms.xi2 = {0.0};
    CHECK_THROWS_AS(analytic::coverage_alpha4_from_terms(terms, lam), std::domain_error);
    const double gen = analytic::coverage_general_from_terms(terms, 4.0, lam);
    CHECK(std::abs(gen - 2.0 * M_PI * lam / (2.0 * 1e-5)) / gen < 1e-10);
}

TEST_CASE("csv emitter") {
    std::ostringstream os;
    analytic::write_analytic_csv(os, "n", {1.0, 2.0}, {0.25, 0.5});
    CHECK(os.str() == "param_swept,value,p_analytic\nn,1,0.25\nn,2,0.5\n");
    std::ostringstream os2;
    CHECK_THROWS_AS(analytic::write_analytic_csv(os2, "n", {1.0}, {0.1, 0.2}),
                    std::invalid_argument);
}

TEST_CASE("connected coverage (shape-1 exact)") {
    SystemParams p = defaults();
    CHECK(rel_err(analytic::coverage_connected(p).probability, 0.9995355698513907) <
          1e-9);
    p.p_t_dbm = 0.0;
    CHECK(rel_err(analytic::coverage_connected(p).probability, 0.9994318063394019) <
          1e-9);
    p.p_t_dbm = 20.0;
    p.gamma_c_th = 1.0;
    CHECK(rel_err(analytic::coverage_connected(p).probability, 0.9307554391974419) <
          1e-9);

    // zero threshold is certain coverage; infeasible threshold is zero
    p.gamma_c_th = 0.0;
    CHECK(analytic::coverage_connected(p).probability == 1.0);
    p.gamma_c_th = 1.51;
    const auto v = analytic::coverage_connected(p);
    CHECK(v.probability == 0.0);
    CHECK(!v.feasible);

    // noise-free limit: independent of transmit power
    SystemParams a = defaults(), b = defaults();
    a.gamma_c_th = b.gamma_c_th = 0.3;
    a.noise_dbm = b.noise_dbm = -400.0;  // effectively zero watts
    a.p_t_dbm = 0.0;
    b.p_t_dbm = 30.0;
    CHECK(rel_err(analytic::coverage_connected(a).probability,
                  analytic::coverage_connected(b).probability) < 1e-12);

    // connected coverage does not depend on the RIS at all
    SystemParams c = defaults();
    c.gamma_c_th = 0.7;
    const double base = analytic::coverage_connected(c).probability;
    c.n = 10;
    c.beta = 0.6;
    CHECK(analytic::coverage_connected(c).probability == base);
}
