#include "riscov/channel.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "riscov/specfn.hpp"

namespace riscov::channel {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;

void write_double(std::ostream& os, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    os.write(buf, res.ptr - buf);
}

}  // namespace

void RisChannelSpec::validate() const {
    if (n < 0) throw std::invalid_argument("RisChannelSpec: n must be >= 0");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("RisChannelSpec: beta must lie in [0,1]");
    if (!(amplitude_gain > 0.0))
        throw std::invalid_argument("RisChannelSpec: amplitude gain must be > 0");
}

void GammaFit::validate() const {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw std::invalid_argument("GammaFit: shape and scale must be > 0");
}

void DistributionTable::write_csv(std::ostream& os) const {
    os << "x,pdf,cdf\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        write_double(os, grid[i]);
        os.put(',');
        write_double(os, pdf[i]);
        os.put(',');
        write_double(os, cdf[i]);
        os.put('\n');
    }
}

double sample_smallscale_exact(const RisChannelSpec& spec, RandomStream& rng) {
    const double w = spec.amplitude_gain * spec.beta;
    double amp = 0.0;
    for (int i = 0; i < spec.n; ++i) amp += w * rng.rayleigh();
    amp += rng.rayleigh();  // direct path, unweighted
    return amp * amp;
}

double sample_smallscale_approx(const RisChannelSpec& spec, RandomStream& rng) {
    const double w = spec.amplitude_gain * spec.beta;
    double sum = 0.0;
    for (int i = 0; i <= spec.n; ++i) sum += rng.rayleigh();
    return w * w * sum * sum;
}

double rayleigh_sum_mean_square(int K) {
    if (K < 1) throw std::domain_error("rayleigh_sum_mean_square: K >= 1 required");
    // E[c] = sqrt(pi)/2, E[c^2] = 1
    return K + K * (K - 1.0) * kPi / 4.0;
}

double rayleigh_sum_fourth_moment(int K) {
    if (K < 1) throw std::domain_error("rayleigh_sum_fourth_moment: K >= 1 required");
    const double Ec = kSqrtPi / 2.0;
    const double Ec2 = 1.0;
    const double Ec3 = 0.75 * kSqrtPi;
    const double Ec4 = 2.0;
    const double k = K;
    return k * Ec4 + 4.0 * k * (k - 1.0) * Ec3 * Ec + 3.0 * k * (k - 1.0) * Ec2 * Ec2 +
           6.0 * k * (k - 1.0) * (k - 2.0) * Ec2 * Ec * Ec +
           k * (k - 1.0) * (k - 2.0) * (k - 3.0) * Ec * Ec * Ec * Ec;
}

InverseLaplaceConfig default_inversion_config() {
    InverseLaplaceConfig cfg;
    cfg.method = InverseLaplaceMethod::fourier_euler;
    cfg.method_order = 16;
    cfg.target_abs_tol = 1e-5;
    return cfg;
}

double exact_pdf_sk(double x, int K, const InverseLaplaceConfig& cfg) {
    if (!(x > 0.0)) throw std::domain_error("exact_pdf_sk: requires x > 0");
    const double v = inverse_laplace(
        [K](std::complex<double> s) { return specfn::laplace_of_sk(s, K); }, x, cfg);
    return std::max(v, 0.0);
}

double exact_cdf_sk(double x, int K, const InverseLaplaceConfig& cfg) {
    if (!(x > 0.0)) throw std::domain_error("exact_cdf_sk: requires x > 0");
    const double v = inverse_laplace(
        [K](std::complex<double> s) { return specfn::laplace_of_sk(s, K) / s; }, x, cfg);
    return std::min(std::max(v, 0.0), 1.0);
}

double exact_pdf_power(double x, double lambda_scale, int K,
                       const InverseLaplaceConfig& cfg) {
    if (!(x > 0.0)) throw std::domain_error("exact_pdf_power: requires x > 0");
    if (!(lambda_scale > 0.0))
        throw std::domain_error("exact_pdf_power: requires lambda_scale > 0");
    // one-sided change of variables y = Lambda x^2 (the amplitude sum is
    // nonnegative, so only the positive root contributes)
    const double root = std::sqrt(x / lambda_scale);
    return exact_pdf_sk(root, K, cfg) / (2.0 * std::sqrt(lambda_scale * x));
}

double exact_cdf_power(double x, double lambda_scale, int K,
                       const InverseLaplaceConfig& cfg) {
    if (x < 0.0) throw std::domain_error("exact_cdf_power: requires x >= 0");
    if (!(lambda_scale > 0.0))
        throw std::domain_error("exact_cdf_power: requires lambda_scale > 0");
    if (x == 0.0) return 0.0;
    return exact_cdf_sk(std::sqrt(x / lambda_scale), K, cfg);
}

GammaFit fit_gamma(const RisChannelSpec& spec, FitMode mode) {
    spec.validate();
    const double scale2 = spec.amplitude_gain * spec.beta * spec.amplitude_gain * spec.beta;
    if (mode == FitMode::paper) {
        if (spec.n < 1)
            throw std::invalid_argument("fit_gamma: paper mode needs n >= 1");
        return GammaFit{static_cast<double>(spec.n), spec.n * scale2};
    }
    const int K = spec.n + 1;
    const double m2 = rayleigh_sum_mean_square(K);
    const double m4 = rayleigh_sum_fourth_moment(K);
    const double var = m4 - m2 * m2;
    // (A beta)^2 is a pure scale factor of S_K^2: shape unchanged, scale scaled
    return GammaFit{m2 * m2 / var, scale2 * var / m2};
}

double gamma_pdf(double x, const GammaFit& fit) {
    fit.validate();
    if (x < 0.0) throw std::domain_error("gamma_pdf: requires x >= 0");
    if (x == 0.0) return fit.shape < 1.0 ? std::numeric_limits<double>::infinity()
                                         : (fit.shape == 1.0 ? 1.0 / fit.scale : 0.0);
    const double a = fit.shape, b = fit.scale;
    return std::exp((a - 1.0) * std::log(x) - x / b - std::lgamma(a) - a * std::log(b));
}

double gamma_cdf(double x, const GammaFit& fit) {
    fit.validate();
    if (x < 0.0) throw std::domain_error("gamma_cdf: requires x >= 0");
    if (x == 0.0) return 0.0;
    return specfn::regularized_gamma_p(fit.shape, x / fit.scale);
}

double alzer_eta(const GammaFit& fit) {
    fit.validate();
    const double a = std::nearbyint(fit.shape);
    if (std::abs(fit.shape - a) > 1e-9 || a < 1.0)
        throw std::domain_error("alzer bound: shape must be a positive integer");
    // (a!)^{-1/a} evaluated through lgamma
    return std::exp(-std::lgamma(a + 1.0) / a) / fit.scale;
}

double alzer_cdf_bound(double x, const GammaFit& fit) {
    const double eta = alzer_eta(fit);
    if (x < 0.0) throw std::domain_error("alzer_cdf_bound: requires x >= 0");
    const double n = std::nearbyint(fit.shape);
    return std::pow(-std::expm1(-eta * x), n);
}

DistributionTable tabulate_power_distribution(const RisChannelSpec& spec,
                                              double lambda_scale, double x_max,
                                              int points,
                                              const InverseLaplaceConfig& cfg) {
    spec.validate();
    if (points < 2) throw std::invalid_argument("tabulate_power_distribution: points >= 2");
    if (!(x_max > 0.0)) throw std::invalid_argument("tabulate_power_distribution: x_max > 0");
    const int K = spec.n + 1;
    const double w2 = spec.amplitude_gain * spec.beta * spec.amplitude_gain * spec.beta;
    const double lam = lambda_scale * w2;
    DistributionTable table;
    table.grid.reserve(points);
    table.pdf.reserve(points);
    table.cdf.reserve(points);
    for (int i = 0; i < points; ++i) {
        // skip x = 0 (the K >= 2 pdf vanishes there; K = 1 is exponential)
        const double x = x_max * (i + 1.0) / points;
        table.grid.push_back(x);
        table.pdf.push_back(exact_pdf_power(x, lam, K, cfg));
        table.cdf.push_back(exact_cdf_power(x, lam, K, cfg));
    }
    return table;
}

}  // namespace riscov::channel
