#include "riscov/analytic.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "riscov/quadrature.hpp"
#include "riscov/specfn.hpp"

namespace riscov::analytic {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;

double upsilon_coefficient(const geometry::SystemParams& p) {
    const double denom = p.a_c - p.gamma_sic_th * p.a_t;
    if (!(denom > 0.0)) throw std::domain_error("upsilon: infeasible SIC threshold");
    return std::max(p.gamma_sic_th / denom, p.gamma_t_th / p.a_t);
}

bool thresholds_feasible(const geometry::SystemParams& p) {
    return p.a_c - p.gamma_sic_th * p.a_t > 0.0;
}

// binomial coefficients C(a,k) for k = 0..a
std::vector<double> binomials(int a) {
    std::vector<double> c(a + 1, 1.0);
    for (int k = 1; k <= a; ++k) c[k] = c[k - 1] * (a - k + 1) / k;
    return c;
}

void write_double(std::ostream& os, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    os.write(buf, res.ptr - buf);
}

}  // namespace

double laplace_typical(double s, double d_t, const geometry::SystemParams& params,
                       const channel::GammaFit& fit) {
    if (s < 0.0) throw std::domain_error("laplace_typical: requires s >= 0");
    if (!(d_t > 0.0)) throw std::domain_error("laplace_typical: requires d_t > 0");
    fit.validate();
    if (s == 0.0) return 1.0;
    const double pt = params.p_t_watts();
    const double dpow = std::pow(d_t, params.alpha_t);
    const double xi1 = (1.0 - params.rho_i) * pt * params.c_t / dpow;
    const double xi2 = fit.scale * params.rho_i * pt * params.c_t / dpow;
    const double m = -2.0 / params.alpha_t;
    const double c = 1.0 + m;
    const double f_dir = specfn::gauss2f1(m, 1.0, c, -xi1 * s);
    const double f_ris = specfn::gauss2f1(m, fit.shape, c, -xi2 * s);
    const double area = kPi * params.lambda_b * d_t * d_t;
    return std::exp(-area * (f_dir - 1.0)) * std::exp(-area * (f_ris - 1.0));
}

double laplace_connected(double s, const geometry::SystemParams& params) {
    if (s < 0.0) throw std::domain_error("laplace_connected: requires s >= 0");
    if (s == 0.0) return 1.0;
    // xi3 already carries the s factor; the printed "-xi3 s" would double it
    const double xi3 = s * params.p_t_watts() * params.c_c /
                       std::pow(params.r_c, params.alpha_c);
    const double m = -2.0 / params.alpha_c;
    const double f = specfn::gauss2f1(m, 1.0, 1.0 + m, -xi3);
    return std::exp(-kPi * params.lambda_b * params.r_c * params.r_c * (f - 1.0));
}

TypicalCoverageTerms build_typical_terms(const geometry::SystemParams& params,
                                         const channel::GammaFit& fit) {
    fit.validate();
    const double a_round = std::nearbyint(fit.shape);
    if (std::abs(fit.shape - a_round) > 1e-9 || a_round < 1.0)
        throw std::domain_error(
            "build_typical_terms: Gamma shape must be a positive integer "
            "(the CDF bound uses a!)");
    TypicalCoverageTerms terms;
    terms.shape = static_cast<int>(a_round);
    terms.upsilon = upsilon_coefficient(params);
    terms.eta_t = channel::alzer_eta(fit);
    const double m = -2.0 / params.alpha_t;
    const double c = 1.0 + m;
    const double pl = kPi * params.lambda_b;
    const double sigma2 = params.noise_watts();
    const double ptct = params.p_t_watts() * params.c_t;
    terms.xi1.resize(terms.shape);
    terms.xi2.resize(terms.shape);
    for (int k = 1; k <= terms.shape; ++k) {
        const double key = k * terms.eta_t * terms.upsilon;
        const double f_dir = specfn::gauss2f1(m, 1.0, c, -key * (1.0 - params.rho_i));
        const double f_ris =
            specfn::gauss2f1(m, fit.shape, c, -key * fit.scale * params.rho_i);
        // The transform is needed at s = k eta Y d^alpha/(Pt Ct), which makes
        // xi * s distance-free; the serving-distance density contributes its
        // own exp(-pi lam x^2), so the combined x^2 rate is
        // pi lam (F_dir + F_ris - 1).
        terms.xi1[k - 1] = pl * f_dir + pl * (f_ris - 1.0);
        terms.xi2[k - 1] = key * sigma2 / ptct;
    }
    return terms;
}

ConnectedCoverageTerms build_connected_terms(const geometry::SystemParams& params) {
    const double denom = params.a_c - params.gamma_c_th * params.a_t;
    if (!(denom > 0.0))
        throw std::domain_error("build_connected_terms: infeasible connected threshold");
    ConnectedCoverageTerms terms;
    terms.eta_c = 1.0;
    terms.xi3 = terms.eta_c * params.gamma_c_th * params.noise_watts() /
                (denom * params.p_t_watts() * params.c_c);
    const double m = -2.0 / params.alpha_c;
    const double f = specfn::gauss2f1(
        m, 1.0, 1.0 + m, -terms.eta_c * params.gamma_c_th / denom);
    terms.xi4 = kPi * params.lambda_b * (f - 1.0);
    return terms;
}

double coverage_general_from_terms(const TypicalCoverageTerms& terms, double alpha_t,
                                   double lambda_b, const CoverageQuadrature& quad) {
    const auto binom = binomials(terms.shape);
    double total = 0.0;
    for (int k = 1; k <= terms.shape; ++k) {
        const double x1 = terms.xi1[k - 1];
        const double x2 = terms.xi2[k - 1];
        auto integrand = [&](double x) {
            return x * std::exp(-x2 * std::pow(x, alpha_t) - x1 * x * x);
        };
        // truncate where the integrand has fallen below tail_cut * peak; the
        // peak sits at the smaller of the two single-factor maxima
        const double x_gauss = 1.0 / std::sqrt(2.0 * x1);
        const double x_noise =
            x2 > 0.0 ? std::pow(1.0 / (alpha_t * x2), 1.0 / alpha_t) : x_gauss;
        const double peak = std::max(integrand(x_gauss), integrand(std::min(x_gauss, x_noise)));
        double x_max = 2.0 * std::min(x_gauss, x_noise);
        while (integrand(x_max) > quad.tail_cut * peak) x_max *= 1.5;
        const auto r = integrate_adaptive(integrand, 0.0, x_max, 0.0, quad.rel_tol, 20000);
        if (!r.converged)
            throw specfn::NonConvergenceError(
                "coverage_typical_general: I1 quadrature did not converge", r.value);
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        total += sign * binom[k] * 2.0 * kPi * lambda_b * r.value;
    }
    return total;
}

double coverage_alpha2_from_terms(const TypicalCoverageTerms& terms, double lambda_b) {
    const auto binom = binomials(terms.shape);
    double total = 0.0;
    for (int k = 1; k <= terms.shape; ++k) {
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        total += sign * binom[k] * kPi * lambda_b /
                 (terms.xi1[k - 1] + terms.xi2[k - 1]);
    }
    return total;
}

double coverage_alpha4_from_terms(const TypicalCoverageTerms& terms, double lambda_b) {
    const auto binom = binomials(terms.shape);
    double total = 0.0;
    for (int k = 1; k <= terms.shape; ++k) {
        const double x1 = terms.xi1[k - 1];
        const double x2 = terms.xi2[k - 1];
        if (!(x2 > 0.0))
            throw std::domain_error(
                "coverage_alpha4_from_terms: requires xi2 > 0 (noise term); use the "
                "general quadrature for the noise-free limit");
        // I1 = (1/4) sqrt(pi/x2) exp(x1^2/(4 x2)) erfc(x1/(2 sqrt(x2))); the
        // exp/erfc pair is evaluated as a scaled complementary error function
        const double z = x1 / (2.0 * std::sqrt(x2));
        const double i1 = 0.25 * std::sqrt(kPi / x2) * specfn::erfcx(z);
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        total += sign * binom[k] * 2.0 * kPi * lambda_b * i1;
    }
    return total;
}

CoverageValue coverage_typical_general(const geometry::SystemParams& params,
                                       const channel::GammaFit& fit,
                                       const CoverageQuadrature& quad) {
    if (!thresholds_feasible(params)) return {0.0, false};
    if (params.gamma_sic_th == 0.0 && params.gamma_t_th == 0.0) return {1.0, true};
    const auto terms = build_typical_terms(params, fit);
    return {coverage_general_from_terms(terms, params.alpha_t, params.lambda_b, quad),
            true};
}

CoverageValue coverage_typical_alpha2(const geometry::SystemParams& params,
                                      const channel::GammaFit& fit) {
    if (params.alpha_t != 2.0)
        throw std::invalid_argument("coverage_typical_alpha2: requires alpha_t == 2");
    if (!thresholds_feasible(params)) return {0.0, false};
    if (params.gamma_sic_th == 0.0 && params.gamma_t_th == 0.0) return {1.0, true};
    const auto terms = build_typical_terms(params, fit);
    return {coverage_alpha2_from_terms(terms, params.lambda_b), true};
}

CoverageValue coverage_typical_alpha4(const geometry::SystemParams& params,
                                      const channel::GammaFit& fit) {
    if (params.alpha_t != 4.0)
        throw std::invalid_argument("coverage_typical_alpha4: requires alpha_t == 4");
    if (!thresholds_feasible(params)) return {0.0, false};
    if (params.gamma_sic_th == 0.0 && params.gamma_t_th == 0.0) return {1.0, true};
    const auto terms = build_typical_terms(params, fit);
    return {coverage_alpha4_from_terms(terms, params.lambda_b), true};
}

CoverageValue coverage_connected(const geometry::SystemParams& params) {
    if (!(params.a_c - params.gamma_c_th * params.a_t > 0.0)) return {0.0, false};
    if (params.gamma_c_th == 0.0) return {1.0, true};
    const auto terms = build_connected_terms(params);
    const double rc2 = params.r_c * params.r_c;
    const double rca = std::pow(params.r_c, params.alpha_c);
    return {std::exp(-terms.xi3 * rca) * std::exp(-terms.xi4 * rc2), true};
}

void write_analytic_csv(std::ostream& os, const std::string& param_swept,
                        const std::vector<double>& values,
                        const std::vector<double>& coverage) {
    if (values.size() != coverage.size())
        throw std::invalid_argument("write_analytic_csv: size mismatch");
    os << "param_swept,value,p_analytic\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        os << param_swept << ',';
        write_double(os, values[i]);
        os.put(',');
        write_double(os, coverage[i]);
        os.put('\n');
    }
}

}  // namespace riscov::analytic
