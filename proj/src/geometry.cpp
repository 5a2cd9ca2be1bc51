#include "riscov/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace riscov::geometry {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts * 1e3); }

double SystemParams::default_window_radius() const {
    return 10.0 / std::sqrt(kPi * lambda_b);
}

double SystemParams::effective_window_radius() const {
    return window_radius > 0.0 ? window_radius : default_window_radius();
}

void SystemParams::validate_structure() const {
    if (!(lambda_b > 0.0)) throw std::invalid_argument("SystemParams: lambda_b must be > 0");
    if (!(alpha_t > 2.0))
        throw std::invalid_argument(
            "SystemParams: alpha_t must exceed 2 (interference integrals diverge otherwise)");
    if (!(alpha_c > 2.0))
        throw std::invalid_argument(
            "SystemParams: alpha_c must exceed 2 (interference integrals diverge otherwise)");
    if (!(a_c > 0.0 && a_c < 1.0 && a_t > 0.0 && a_t < 1.0))
        throw std::invalid_argument("SystemParams: a_c and a_t must lie in (0,1)");
    if (std::abs(a_c + a_t - 1.0) > 1e-12)
        throw std::invalid_argument("SystemParams: a_c + a_t must equal 1");
    if (!(a_c > a_t)) throw std::invalid_argument("SystemParams: requires a_c > a_t");
    if (n < 1) throw std::invalid_argument("SystemParams: n must be >= 1");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("SystemParams: beta must lie in [0,1]");
    if (!(rho_i >= 0.0 && rho_i <= 1.0))
        throw std::invalid_argument("SystemParams: rho_i must lie in [0,1]");
    if (!(r_c > 0.0)) throw std::invalid_argument("SystemParams: r_c must be > 0");
    if (!(amplitude_gain > 0.0))
        throw std::invalid_argument("SystemParams: amplitude gain must be > 0");
    if (!(c_t > 0.0) || !(c_c > 0.0))
        throw std::invalid_argument("SystemParams: intercepts must be > 0");
    if (gamma_sic_th < 0.0 || gamma_t_th < 0.0 || gamma_c_th < 0.0)
        throw std::invalid_argument("SystemParams: thresholds must be >= 0");
    if (window_radius < 0.0)
        throw std::invalid_argument("SystemParams: window_radius must be >= 0");
    const double expected_points = lambda_b * kPi * effective_window_radius() *
                                   effective_window_radius();
    if (expected_points < 100.0)
        throw std::invalid_argument(
            "SystemParams: simulation window too small (needs >= 100 expected BSs)");
}

void SystemParams::validate() const {
    validate_structure();
    if (!(a_c - gamma_sic_th * a_t > 0.0))
        throw std::invalid_argument(
            "SystemParams: infeasible gamma_sic_th (requires a_c - th*a_t > 0)");
    if (!(a_c - gamma_c_th * a_t > 0.0))
        throw std::invalid_argument(
            "SystemParams: infeasible gamma_c_th (requires a_c - th*a_t > 0)");
}

std::vector<double> sample_hppp_distances(double lambda, double window_radius,
                                          RandomStream& rng) {
    if (!(lambda > 0.0) || !(window_radius > 0.0))
        throw std::invalid_argument("sample_hppp_distances: lambda and radius must be > 0");
    const double mean = lambda * kPi * window_radius * window_radius;
    const std::uint64_t count = rng.poisson(mean);
    std::vector<double> d(count);
    for (auto& v : d) v = window_radius * std::sqrt(rng.uniform());
    std::sort(d.begin(), d.end());
    return d;
}

double nearest_distance_pdf(double x, int k, double lambda) {
    if (!(x > 0.0)) throw std::domain_error("nearest_distance_pdf: requires x > 0");
    if (k < 1) throw std::domain_error("nearest_distance_pdf: order must be >= 1");
    if (!(lambda > 0.0)) throw std::domain_error("nearest_distance_pdf: lambda must be > 0");
    const double pl = kPi * lambda;
    const double logv = k * std::log(pl) + (2.0 * k - 1.0) * std::log(x) - pl * x * x -
                        std::lgamma(static_cast<double>(k));
    return 2.0 * std::exp(logv);
}

NetworkRealization sample_network(const SystemParams& params, RandomStream& rng) {
    const double radius = params.effective_window_radius();
    for (;;) {
        std::vector<double> d = sample_hppp_distances(params.lambda_b, radius, rng);
        if (d.empty()) continue;  // zero BSs in the window: resample
        NetworkRealization real;
        real.d_serving = d.front();
        real.d_interferers.assign(d.begin() + 1, d.end());
        return real;
    }
}

}  // namespace riscov::geometry
