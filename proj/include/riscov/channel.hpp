#pragma once

#include <iosfwd>
#include <vector>

#include "riscov/laplace_inversion.hpp"
#include "riscov/rng.hpp"

namespace riscov::channel {

// Composite RIS channel: n reflecting elements with common power-consumption
// coefficient beta, constant reflected-path amplitude gain A, plus the direct
// path. n = 0 degenerates to the direct path alone.
struct RisChannelSpec {
    int n = 5;
    double beta = 1.0;
    double amplitude_gain = 1.0;  // A

    void validate() const;
};

struct GammaFit {
    double shape = 1.0;  // a
    double scale = 1.0;  // b

    void validate() const;
};

enum class FitMode { paper, moment };

// Tabulated distribution (grid strictly increasing, cdf nondecreasing).
// Serializes as CSV `x,pdf,cdf`.
struct DistributionTable {
    std::vector<double> grid;
    std::vector<double> pdf;
    std::vector<double> cdf;

    void write_csv(std::ostream& os) const;
};

// One draw of |f_BU|^2 = (sum_i A beta c_i + c_BU)^2, all amplitudes unit
// Rayleigh; the direct amplitude enters unweighted.
double sample_smallscale_exact(const RisChannelSpec& spec, RandomStream& rng);

// One draw of (A beta S_K)^2 with S_K the sum of K = n+1 unit-Rayleigh
// amplitudes (the direct path absorbed into the weighted sum).
double sample_smallscale_approx(const RisChannelSpec& spec, RandomStream& rng);

// Moments of S_K = sum of K unit-Rayleigh amplitudes.
double rayleigh_sum_mean_square(int K);    // E[S_K^2]
double rayleigh_sum_fourth_moment(int K);  // E[S_K^4]

// Default inversion settings for the channel law (Fourier-Euler; the Rayleigh
// sum transform is entire and abscissa summation does not converge on it).
InverseLaplaceConfig default_inversion_config();

// PDF of S_K at x > 0 via numerical inversion of laplace_of_sk.
double exact_pdf_sk(double x, int K, const InverseLaplaceConfig& cfg);

// CDF of S_K at x > 0 (inverts laplace_of_sk(s)/s).
double exact_cdf_sk(double x, int K, const InverseLaplaceConfig& cfg);

// PDF of the power-domain channel Lambda * S_K^2 at x > 0:
//   f(x) = exact_pdf_sk(sqrt(x/Lambda), K) / (2 sqrt(Lambda x)).
double exact_pdf_power(double x, double lambda_scale, int K,
                       const InverseLaplaceConfig& cfg);

// CDF of Lambda * S_K^2 at x >= 0.
double exact_cdf_power(double x, double lambda_scale, int K,
                       const InverseLaplaceConfig& cfg);

// Gamma surrogate for the approximate small-scale power law.
//  - paper:  a = n, b = n (A beta)^2
//  - moment: shape/scale matched to the first two moments of (A beta S_K)^2
GammaFit fit_gamma(const RisChannelSpec& spec, FitMode mode);

double gamma_pdf(double x, const GammaFit& fit);
double gamma_cdf(double x, const GammaFit& fit);

// (1 - exp(-eta_t x))^a with eta_t = (1/b) (a!)^{-1/a}; requires integer a.
// Lower-bounds the Gamma CDF for a >= 1 and is exact at a = 1.
double alzer_cdf_bound(double x, const GammaFit& fit);

// eta_t coefficient of the bound above.
double alzer_eta(const GammaFit& fit);

// Tabulates the exact power-domain law on [0, x_max] (K = n+1 <= max_k).
DistributionTable tabulate_power_distribution(const RisChannelSpec& spec,
                                              double lambda_scale, double x_max,
                                              int points, const InverseLaplaceConfig& cfg);

}  // namespace riscov::channel
