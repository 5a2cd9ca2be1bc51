#include "riscov/laplace_inversion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace riscov {

namespace {

constexpr double kLn2 = 0.6931471805599453094;
constexpr double kLn10 = 2.302585092994045684;

// Stehfest coefficients for even order N, computed in extended precision.
std::vector<double> stehfest_coefficients(int N) {
    std::vector<long double> fact(2 * N + 1, 1.0L);
    for (int i = 1; i <= 2 * N; ++i) fact[i] = fact[i - 1] * i;
    std::vector<double> zeta(N + 1, 0.0);
    const int half = N / 2;
    for (int k = 1; k <= N; ++k) {
        long double sum = 0.0L;
        const int jmin = (k + 1) / 2;
        const int jmax = std::min(k, half);
        for (int j = jmin; j <= jmax; ++j) {
            long double term = std::pow((long double)j, half) * fact[2 * j];
            term /= fact[half - j] * fact[j] * fact[j - 1] * fact[k - j] * fact[2 * j - k];
            sum += term;
        }
        zeta[k] = static_cast<double>(((k + half) % 2 == 0 ? 1.0L : -1.0L) * sum);
    }
    return zeta;
}

double gaver_stehfest_at_order(const RealTransform& F, double t, int N) {
    const auto zeta = stehfest_coefficients(N);
    const double s0 = kLn2 / t;
    long double sum = 0.0L;
    for (int k = 1; k <= N; ++k) sum += (long double)zeta[k] * (long double)F(k * s0);
    return static_cast<double>(sum * s0);
}

double fourier_euler_at_order(const ComplexTransform& F, double t, int M) {
    // Abate-Whitt Euler algorithm: Bromwich line at a = M ln(10)/3 with
    // binomial (Euler) averaging of the alternating tail.
    const double a = M * kLn10 / 3.0;
    std::vector<double> eta(2 * M + 1, 1.0);
    eta[0] = 0.5;
    {
        // eta_{M+j} = 2^{-M} sum_{i=j}^{M} C(M,i)
        std::vector<long double> binom(M + 1);
        binom[0] = 1.0L;
        for (int i = 1; i <= M; ++i) binom[i] = binom[i - 1] * (M - i + 1) / i;
        long double tail = 0.0L;
        const long double scale = std::pow(0.5L, M);
        for (int j = M; j >= 1; --j) {
            tail += binom[j];
            eta[M + j] = static_cast<double>(tail * scale);
        }
    }
    long double sum = 0.0L;
    for (int k = 0; k <= 2 * M; ++k) {
        const std::complex<double> s(a / t, M_PI * k / t);
        const double re = F(s).real();
        sum += (k % 2 == 0 ? 1.0L : -1.0L) * (long double)(eta[k] * re);
    }
    return static_cast<double>(sum * std::exp((long double)a) / t);
}

double talbot_at_order(const ComplexTransform& F, double t, int M) {
    // fixed-Talbot contour s(theta) = r theta (cot theta + i), r = 2M/(5t)
    const double r = 2.0 * M / (5.0 * t);
    double sum = 0.5 * F(std::complex<double>(r, 0.0)).real() * std::exp(r * t);
    for (int k = 1; k < M; ++k) {
        const double theta = k * M_PI / M;
        const double cot = std::cos(theta) / std::sin(theta);
        const std::complex<double> s(r * theta * cot, r * theta);
        const double sigma = theta + (theta * cot - 1.0) * cot;
        const std::complex<double> val =
            std::exp(s * t) * F(s) * std::complex<double>(1.0, sigma);
        sum += val.real();
    }
    return sum * r / M;
}

// Evaluate at orders {M-4, M-2, M} (clipped to >= 4) and require consecutive
// results within tol.
template <class AtOrder>
double with_order_check(const AtOrder& at_order, int M, double tol, const char* what) {
    std::vector<int> orders;
    for (int m = M - 4; m <= M; m += 2)
        if (m >= 4) orders.push_back(m);
    double prev = 0.0, last = 0.0, disagree = 0.0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        last = at_order(orders[i]);
        if (i > 0) disagree = std::max(disagree, std::abs(last - prev));
        prev = last;
    }
    if (orders.size() > 1 && disagree > tol)
        throw specfn::NonConvergenceError(what, last);
    return last;
}

}  // namespace

void InverseLaplaceConfig::validate() const {
    if (method_order < 4 || method_order % 2 != 0)
        throw std::invalid_argument(
            "InverseLaplaceConfig: method_order must be even and >= 4");
    if (!(target_abs_tol > 0.0))
        throw std::invalid_argument("InverseLaplaceConfig: target_abs_tol must be > 0");
}

double inverse_laplace(const RealTransform& transform, double t,
                       const InverseLaplaceConfig& cfg) {
    cfg.validate();
    if (!(t > 0.0)) throw std::domain_error("inverse_laplace: requires t > 0");
    if (cfg.method != InverseLaplaceMethod::gaver_stehfest)
        throw std::invalid_argument(
            "inverse_laplace: contour methods need a complex-capable transform");
    return with_order_check(
        [&](int m) { return gaver_stehfest_at_order(transform, t, m); }, cfg.method_order,
        cfg.target_abs_tol, "inverse_laplace: Gaver-Stehfest orders disagree");
}

double inverse_laplace(const ComplexTransform& transform, double t,
                       const InverseLaplaceConfig& cfg) {
    cfg.validate();
    if (!(t > 0.0)) throw std::domain_error("inverse_laplace: requires t > 0");
    switch (cfg.method) {
        case InverseLaplaceMethod::gaver_stehfest: {
            RealTransform real_fn = [&](double s) {
                return transform(std::complex<double>(s, 0.0)).real();
            };
            return with_order_check(
                [&](int m) { return gaver_stehfest_at_order(real_fn, t, m); },
                cfg.method_order, cfg.target_abs_tol,
                "inverse_laplace: Gaver-Stehfest orders disagree");
        }
        case InverseLaplaceMethod::fourier_euler:
            return with_order_check(
                [&](int m) { return fourier_euler_at_order(transform, t, m); },
                cfg.method_order, cfg.target_abs_tol,
                "inverse_laplace: Fourier-Euler orders disagree");
        case InverseLaplaceMethod::talbot:
            return with_order_check(
                [&](int m) { return talbot_at_order(transform, t, m); }, cfg.method_order,
                cfg.target_abs_tol, "inverse_laplace: Talbot orders disagree");
    }
    throw std::logic_error("inverse_laplace: unknown method");
}

}  // namespace riscov
