#include "riscov/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "riscov/analytic.hpp"
#include "riscov/oracles.hpp"
#include "riscov/stats.hpp"

namespace riscov::cli {

namespace {

constexpr std::uint64_t kSuiteSeed = 99991;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(8);
    os << v;
    return os.str();
}

// Lower 95%-style confidence limit used in MC-vs-analytic comparisons.
// The Wald interval degenerates at p_hat = 1 (zero observed failures); there
// the exact Clopper-Pearson 2.5% limit 0.025^{1/n} is used instead.
double mc_lower_bound(const mcsim::CoverageEstimate& e) {
    if (e.successes == e.trials)
        return std::pow(0.025, 1.0 / static_cast<double>(e.trials));
    return e.probability - 2.0 * e.ci_halfwidth_95;
}

// ---------------------------------------------------------------------- 1
CheckResult check_channel_fidelity(const RunConfig&) {
    channel::RisChannelSpec spec{5, 1.0, 1.0};
    const auto fit_paper = channel::fit_gamma(spec, channel::FitMode::paper);
    const auto fit_moment = channel::fit_gamma(spec, channel::FitMode::moment);

    std::vector<double> draws(1000000);
    RandomStream rng = RandomStream::substream(kSuiteSeed, 1);
    for (auto& d : draws) d = channel::sample_smallscale_approx(spec, rng);

    const double ks_paper = stats::ks_statistic(
        draws, [&](double x) { return channel::gamma_cdf(x, fit_paper); });
    const double ks_moment = stats::ks_statistic(
        draws, [&](double x) { return channel::gamma_cdf(x, fit_moment); });

    CheckResult r;
    r.name = "1 channel-law fidelity (KS, n=5 beta=1)";
    const bool paper_ok = ks_paper <= 0.05;
    const bool moment_ok = ks_moment <= 0.01;
    r.pass = paper_ok && moment_ok;
    std::ostringstream d;
    d << "KS vs paper fit (a=5,b=5) = " << fmt(ks_paper) << " (req <= 0.05, "
      << (paper_ok ? "ok" : "FAIL") << "); KS vs moment fit (a=" << fmt(fit_moment.shape)
      << ",b=" << fmt(fit_moment.scale) << ") = " << fmt(ks_moment) << " (req <= 0.01, "
      << (moment_ok ? "ok" : "FAIL") << ")";
    if (!paper_ok) {
        d << " | note: the sampled law (A beta S_{n+1})^2 has mean "
          << fmt(channel::rayleigh_sum_mean_square(6))
          << " while Gamma(5,5) has mean 25; an a = n, b = n fit cannot match "
             "the (n+1)-term amplitude sum at n = 5, so this bound is not "
             "attainable by construction";
    }
    r.detail = d.str();
    return r;
}

// ---------------------------------------------------------------------- 2
CheckResult check_exact_law(const RunConfig&) {
    const auto cfg = channel::default_inversion_config();
    double worst1 = 0.0;
    for (int i = 0; i <= 58; ++i) {
        const double t = 0.1 + i * (2.9 / 58.0);
        const double got = channel::exact_pdf_sk(t, 1, cfg);
        const double want = oracle::rayleigh_pdf(t);
        worst1 = std::max(worst1, std::abs(got - want));
    }
    double worst2 = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double t = 0.2 + i * (4.3 / 19.0);
        const double got = channel::exact_pdf_sk(t, 2, cfg);
        const double want = oracle::rayleigh_conv2_pdf(t);
        worst2 = std::max(worst2, std::abs(got - want));
    }
    CheckResult r;
    r.name = "2 exact-law inversion oracle (K=1, K=2)";
    r.pass = worst1 <= 1e-5 && worst2 <= 1e-4;
    r.detail = "K=1 max |pdf - rayleigh| = " + fmt(worst1) +
               " (req <= 1e-5); K=2 max |pdf - convolution| = " + fmt(worst2) +
               " (req <= 1e-4)";
    return r;
}

// ---------------------------------------------------------------------- 3
CheckResult check_laplace_transforms(const RunConfig& base) {
    RandomStream rng = RandomStream::substream(kSuiteSeed, 3);
    double worst_t = 0.0, worst_c = 0.0, worst_joint = 0.0;
    for (int i = 0; i < 10; ++i) {
        geometry::SystemParams p = base.params;
        p.rho_i = 0.05 + 0.9 * rng.uniform();
        const double d_t = 80.0 + 420.0 * rng.uniform();
        const int a = 1 + static_cast<int>(rng.uniform() * 10.0);
        const channel::GammaFit fit{static_cast<double>(a), 0.5 + 9.5 * rng.uniform()};
        // log-uniform s spanning weak to strong attenuation
        const double s = std::pow(10.0, 6.0 + 6.0 * rng.uniform());

        const double closed = analytic::laplace_typical(s, d_t, p, fit);
        const double quad = oracle::pgfl_laplace_typical(s, d_t, p, fit);
        worst_t = std::max(worst_t, std::abs(closed - quad) / quad);

        const double joint = oracle::pgfl_laplace_typical_joint(s, d_t, p, fit);
        worst_joint = std::max(worst_joint, std::abs(closed - joint) / joint);

        geometry::SystemParams pc = base.params;
        pc.r_c = 20.0 + 180.0 * rng.uniform();
        const double sc = std::pow(10.0, 4.0 + 6.0 * rng.uniform());
        const double closed_c = analytic::laplace_connected(sc, pc);
        const double quad_c = oracle::pgfl_laplace_connected(sc, pc);
        worst_c = std::max(worst_c, std::abs(closed_c - quad_c) / quad_c);
    }
    CheckResult r;
    r.name = "3 interference Laplace transforms vs PGFL quadrature";
    r.pass = worst_t <= 1e-6 && worst_c <= 1e-6;
    r.detail = "typical worst rel = " + fmt(worst_t) + ", connected worst rel = " +
               fmt(worst_c) + " (req <= 1e-6); joint-field PGFL differs by up to " +
               fmt(worst_joint) +
               " rel (factorized two-field form is the one the closed form represents)";
    return r;
}

// ---------------------------------------------------------------------- 4
CheckResult check_specializations(const RunConfig& base) {
    RandomStream rng = RandomStream::substream(kSuiteSeed, 4);
    analytic::CoverageQuadrature quad;
    quad.rel_tol = 1e-13;

    // alpha = 2: the interference hypergeometric factor has c = 1 - 2/alpha = 0
    // there (the underlying integral diverges at alpha = 2), so the alpha = 2
    // closed form is checked on synthetic positive coefficients.
    double worst2 = 0.0;
    for (int i = 0; i < 10; ++i) {
        analytic::TypicalCoverageTerms terms;
        terms.shape = 1 + static_cast<int>(rng.uniform() * 10.0);
        const double lam = std::pow(10.0, -6.0 + 2.0 * rng.uniform());
        terms.upsilon = 1.0;
        terms.eta_t = 1.0;
        for (int k = 1; k <= terms.shape; ++k) {
            terms.xi1.push_back(M_PI * lam * (1.0 + 3.0 * rng.uniform()) * k);
            terms.xi2.push_back(M_PI * lam * rng.uniform() * k);
        }
        const double general = analytic::coverage_general_from_terms(terms, 2.0, lam, quad);
        const double closed = analytic::coverage_alpha2_from_terms(terms, lam);
        worst2 = std::max(worst2, std::abs(general - closed) / std::abs(closed));
    }

    // alpha = 4: full parameter path.
    double worst4 = 0.0;
    for (int i = 0; i < 10; ++i) {
        geometry::SystemParams p = base.params;
        p.alpha_t = 4.0;
        p.lambda_b = std::pow(10.0, -6.5 + 1.5 * rng.uniform());
        p.p_t_dbm = -5.0 + 30.0 * rng.uniform();
        p.rho_i = rng.uniform();
        p.n = 1 + static_cast<int>(rng.uniform() * 8.0);
        p.beta = 0.5 + 0.5 * rng.uniform();
        const double th = std::pow(10.0, -2.0 + 2.1 * rng.uniform());
        p.gamma_sic_th = std::min(th, 1.4);
        p.gamma_t_th = p.gamma_sic_th;
        const channel::RisChannelSpec spec{p.n, p.beta, p.amplitude_gain};
        const auto fit = channel::fit_gamma(spec, channel::FitMode::paper);
        const double general = analytic::coverage_typical_general(p, fit, quad).probability;
        const double closed = analytic::coverage_typical_alpha4(p, fit).probability;
        worst4 = std::max(worst4, std::abs(general - closed) / std::abs(closed));
    }
    CheckResult r;
    r.name = "4 specialization consistency (alpha 2 and 4)";
    r.pass = worst2 <= 1e-9 && worst4 <= 1e-9;
    r.detail = "alpha=2 worst rel = " + fmt(worst2) + ", alpha=4 worst rel = " +
               fmt(worst4) + " (req <= 1e-9)";
    return r;
}

// ---------------------------------------------------------------------- 5
CheckResult check_upper_bound(const RunConfig& base, std::ostream& report) {
    CheckResult r;
    r.name = "5 analytic typical coverage upper-bounds MC";
    bool all = true;
    std::ostringstream d;
    int idx = 0;
    for (int n : {5, 10}) {
        for (double beta : {1.0, 0.8}) {
            for (double pt : {0.0, 10.0, 20.0, 30.0}) {
                geometry::SystemParams p = base.params;
                p.n = n;
                p.beta = beta;
                p.p_t_dbm = pt;
                const channel::RisChannelSpec spec{p.n, p.beta, p.amplitude_gain};
                const auto fit = channel::fit_gamma(spec, channel::FitMode::paper);
                const double ana = analytic::coverage_typical_alpha4(p, fit).probability;
                const auto mc = mcsim::estimate_coverage_typical(
                    p, fit, 1000000, mcsim::FadingMode::model_faithful,
                    kSuiteSeed + 50 + idx);
                const double lower = mc_lower_bound(mc);
                const bool ok = ana >= lower;
                all = all && ok;
                report << "  [5." << idx << "] n=" << n << " beta=" << beta
                       << " pt=" << pt << "dBm: analytic=" << fmt(ana)
                       << " mc=" << fmt(mc.probability) << " (misses "
                       << (mc.trials - mc.successes) << ") lower=" << fmt(lower) << " -> "
                       << (ok ? "ok" : "VIOLATED") << '\n';
                if (!ok) {
                    // sensitivity: same point with the own channel drawn from the
                    // Gamma surrogate itself (the law the bound chain assumes)
                    std::uint64_t succ = 0;
                    const std::uint64_t trials = 1000000;
                    for (std::uint64_t t = 0; t < trials; ++t) {
                        RandomStream rng =
                            RandomStream::substream(kSuiteSeed + 77 + idx, t);
                        const auto real = geometry::sample_network(p, rng);
                        const double own = rng.gamma(fit.shape, fit.scale);
                        const double gain = own * p.c_t *
                                            std::pow(real.d_serving, -p.alpha_t);
                        const double interf = mcsim::interference_typical(
                            real, p, fit, mcsim::FadingMode::model_faithful, rng);
                        succ += (mcsim::sinr_sic(gain, interf, p) > p.gamma_sic_th &&
                                 mcsim::sinr_typical_post_sic(gain, interf, p) >
                                     p.gamma_t_th)
                                    ? 1
                                    : 0;
                    }
                    const auto mc_gamma = mcsim::make_estimate(succ, trials);
                    report << "        sensitivity (Gamma-law own channel): mc="
                           << fmt(mc_gamma.probability)
                           << " lower=" << fmt(mc_lower_bound(mc_gamma)) << " -> "
                           << (ana >= mc_lower_bound(mc_gamma) ? "bound holds"
                                                               : "still violated")
                           << '\n';
                }
                ++idx;
            }
        }
    }
    r.pass = all;
    d << (all ? "analytic >= mc - 2ci at all 16 points"
              : "bound violated at one or more points (see rows above); the "
                "approx-law own channel has ~18% higher mean than the paper-fit "
                "Gamma at n=5, which overtakes the Alzer-bound slack in the "
                "noise-limited low-SNR regime");
    r.detail = d.str();
    return r;
}

// ---------------------------------------------------------------------- 6
CheckResult check_connected_exactness(const RunConfig& base, std::ostream& report) {
    CheckResult r;
    r.name = "6 connected-user analytic vs MC (2% absolute)";
    double worst = 0.0;
    int idx = 0;
    bool all = true;
    for (double pt : {0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0}) {
        geometry::SystemParams p = base.params;
        p.p_t_dbm = pt;
        const double ana = analytic::coverage_connected(p).probability;
        const auto mc = mcsim::estimate_coverage_connected(p, 1000000,
                                                           kSuiteSeed + 150 + idx);
        const double diff = std::abs(ana - mc.probability);
        worst = std::max(worst, diff);
        all = all && diff <= 0.02;
        report << "  [6." << idx << "] pt=" << pt << "dBm: analytic=" << fmt(ana)
               << " mc=" << fmt(mc.probability) << " |diff|=" << fmt(diff) << '\n';
        ++idx;
    }
    r.pass = all;
    r.detail = "worst |analytic - mc| = " + fmt(worst) + " (req <= 0.02)";
    return r;
}

// ---------------------------------------------------------------------- 7
CheckResult check_trends(const RunConfig& base, std::ostream& report) {
    CheckResult r;
    r.name = "7 trend reproduction (n sweep at 20 dBm)";
    const std::uint64_t trials = 1000000;
    bool all = true;
    std::vector<std::vector<mcsim::CoverageEstimate>> typical(2);
    std::vector<mcsim::CoverageEstimate> connected;
    const double betas[2] = {1.0, 0.8};
    for (int bi = 0; bi < 2; ++bi) {
        for (int n = 1; n <= 10; ++n) {
            geometry::SystemParams p = base.params;
            p.p_t_dbm = 20.0;
            p.n = n;
            p.beta = betas[bi];
            const channel::RisChannelSpec spec{p.n, p.beta, p.amplitude_gain};
            const auto fit = channel::fit_gamma(spec, channel::FitMode::paper);
            typical[bi].push_back(mcsim::estimate_coverage_typical(
                p, fit, trials, mcsim::FadingMode::model_faithful,
                kSuiteSeed + 200 + 16 * bi + n));
            if (bi == 0)
                connected.push_back(mcsim::estimate_coverage_connected(
                    p, trials, kSuiteSeed + 300 + n));
        }
    }
    // typical coverage nondecreasing in n within CI slack
    for (int bi = 0; bi < 2; ++bi) {
        for (int i = 0; i + 1 < 10; ++i) {
            const auto& a = typical[bi][i];
            const auto& b = typical[bi][i + 1];
            const double slack = 2.0 * std::sqrt(a.ci_halfwidth_95 * a.ci_halfwidth_95 +
                                                 b.ci_halfwidth_95 * b.ci_halfwidth_95);
            if (b.probability < a.probability - slack) {
                all = false;
                report << "  [7] typical beta=" << betas[bi] << " not nondecreasing at n="
                       << (i + 1) << " -> " << (i + 2) << '\n';
            }
        }
    }
    // beta=1 dominates beta=0.8 pointwise within CI slack
    for (int i = 0; i < 10; ++i) {
        const auto& hi = typical[0][i];
        const auto& lo = typical[1][i];
        const double slack = 2.0 * std::sqrt(hi.ci_halfwidth_95 * hi.ci_halfwidth_95 +
                                             lo.ci_halfwidth_95 * lo.ci_halfwidth_95);
        if (hi.probability < lo.probability - slack) {
            all = false;
            report << "  [7] beta=1 does not dominate beta=0.8 at n=" << (i + 1) << '\n';
        }
    }
    // connected coverage flat in n within 2x CI
    for (int i = 1; i < 10; ++i) {
        const auto& a = connected[0];
        const auto& b = connected[i];
        if (std::abs(b.probability - a.probability) >
            2.0 * (a.ci_halfwidth_95 + b.ci_halfwidth_95)) {
            all = false;
            report << "  [7] connected coverage not flat at n=" << (i + 1) << '\n';
        }
    }
    for (int i = 0; i < 10; ++i)
        report << "  [7] n=" << (i + 1) << ": typ(beta=1)=" << fmt(typical[0][i].probability)
               << " typ(beta=0.8)=" << fmt(typical[1][i].probability)
               << " conn=" << fmt(connected[i].probability) << '\n';
    r.pass = all;
    r.detail = all ? "monotone in n, beta=1 dominant, connected flat (within CI slack)"
                   : "one or more trend violations (rows above)";
    return r;
}

// ---------------------------------------------------------------------- 8
CheckResult check_trivial_limits(const RunConfig& base) {
    CheckResult r;
    r.name = "8 trivial limits (zero and infeasible thresholds)";
    geometry::SystemParams p0 = base.params;
    p0.gamma_sic_th = p0.gamma_t_th = p0.gamma_c_th = 0.0;
    const channel::RisChannelSpec spec{p0.n, p0.beta, p0.amplitude_gain};
    const auto fit = channel::fit_gamma(spec, channel::FitMode::paper);
    const double ana_t0 = analytic::coverage_typical_alpha4(p0, fit).probability;
    const double ana_c0 = analytic::coverage_connected(p0).probability;
    const auto mc_t0 = mcsim::estimate_coverage_typical(
        p0, fit, 100000, mcsim::FadingMode::model_faithful, kSuiteSeed + 400);
    const auto mc_c0 = mcsim::estimate_coverage_connected(p0, 100000, kSuiteSeed + 401);

    geometry::SystemParams pinf = base.params;
    pinf.gamma_sic_th = pinf.a_c / pinf.a_t * 1.0001;  // just above the SIC ceiling
    const auto ana_inf = analytic::coverage_typical_alpha4(pinf, fit);
    const auto mc_inf = mcsim::estimate_coverage_typical(
        pinf, fit, 10000, mcsim::FadingMode::model_faithful, kSuiteSeed + 402);

    const bool ok = ana_t0 == 1.0 && ana_c0 == 1.0 && mc_t0.probability >= 0.999 &&
                    mc_c0.probability >= 0.999 && ana_inf.probability == 0.0 &&
                    !ana_inf.feasible && mc_inf.probability == 0.0;
    r.pass = ok;
    r.detail = "zero-threshold: analytic t/c = " + fmt(ana_t0) + "/" + fmt(ana_c0) +
               ", mc t/c = " + fmt(mc_t0.probability) + "/" + fmt(mc_c0.probability) +
               "; infeasible: analytic = " + fmt(ana_inf.probability) +
               " (feasible=" + (ana_inf.feasible ? "1" : "0") +
               "), mc = " + fmt(mc_inf.probability);
    return r;
}

}  // namespace

std::vector<CheckResult> run_acceptance(const RunConfig& base, std::ostream& report) {
    std::vector<CheckResult> results;
    report << "acceptance suite (seed " << kSuiteSeed << ")\n";
    // per-criterion wall-clock budgets, seconds (0 = no budget stated)
    auto push = [&](CheckResult r, double started, double budget_s) {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
                .count() -
            started;
        if (budget_s > 0.0 && elapsed > budget_s) {
            r.pass = false;
            r.detail += " | RUNTIME over budget";
        }
        report << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << " ["
               << fmt(elapsed) << " s" << (budget_s > 0.0 ? " / " + fmt(budget_s) : "")
               << "]\n";
        results.push_back(std::move(r));
    };
    auto now = [] {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now().time_since_epoch())
            .count();
    };
    double t = now();
    push(check_channel_fidelity(base), t, 60.0);
    t = now();
    push(check_exact_law(base), t, 30.0);
    t = now();
    push(check_laplace_transforms(base), t, 60.0);
    t = now();
    push(check_specializations(base), t, 30.0);
    t = now();
    push(check_upper_bound(base, report), t, 900.0);
    t = now();
    push(check_connected_exactness(base, report), t, 300.0);
    t = now();
    push(check_trends(base, report), t, 0.0);
    t = now();
    push(check_trivial_limits(base), t, 0.0);
    return results;
}

int cmd_validate(const RunConfig& base, std::ostream& report) {
    base.validate(true);
    const auto results = run_acceptance(base, report);
    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    report << (failed == 0 ? "all criteria passed" :
               std::to_string(failed) + " criterion/criteria failed") << '\n';
    return failed;
}

}  // namespace riscov::cli
