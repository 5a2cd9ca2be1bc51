#include "riscov/specfn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <vector>

namespace riscov::specfn {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kInvSqrtPi = 0.5641895835477562869;

bool is_nonpositive_integer(double c) {
    return c <= 0.0 && std::abs(c - std::nearbyint(c)) < 1e-9;
}

}  // namespace

double erfc(double x) { return std::erfc(x); }

double erfcx(double x) {
    if (std::isnan(x)) return x;
    if (x >= 12.0) {
        // asymptotic series 1/(x sqrt(pi)) * sum_k (-1)^k (2k-1)!! / (2x^2)^k
        const double inv2x2 = 1.0 / (2.0 * x * x);
        double term = 1.0, sum = 1.0;
        for (int k = 1; k <= 20; ++k) {
            term *= -(2.0 * k - 1.0) * inv2x2;
            sum += term;
            if (std::abs(term) < 1e-17 * sum) break;
        }
        return sum * kInvSqrtPi / x;
    }
    if (x >= 0.0) return std::exp(x * x) * std::erfc(x);
    // erfcx(-x) relation; overflows for x << -26, which is out of our use range
    const double e = std::exp(x * x);
    if (!std::isfinite(e)) return std::numeric_limits<double>::infinity();
    return 2.0 * e - erfcx(-x);
}

// ---------------------------------------------------------------------------
// Faddeeva function, Weideman (1994) rational approximation with N = 48 terms
// for moderate |z|, Laplace continued fraction for large |z|.
// ---------------------------------------------------------------------------
namespace {

constexpr int kWeidemanN = 48;

const std::vector<double>& weideman_coeffs() {
    static std::vector<double> coeffs = [] {
        const int N = kWeidemanN;
        const int M = 2 * N;
        const int M2 = 2 * M;
        const double L = std::sqrt(N / std::sqrt(2.0));
        // f(theta) = exp(-t^2) (L^2 + t^2), t = L tan(theta/2), sampled on the
        // uniform theta grid; a_j are its Fourier cosine coefficients.
        std::vector<double> f(M2, 0.0);
        for (int k = -M + 1; k <= M - 1; ++k) {
            const double theta = k * M_PI / M;
            const double t = L * std::tan(0.5 * theta);
            f[k + M] = std::exp(-t * t) * (L * L + t * t);
        }
        std::vector<double> a(N + 1, 0.0);
        for (int j = 0; j <= N; ++j) {
            double s = 0.0;
            for (int k = 0; k < M2; ++k) {
                const double theta = (k - M) * M_PI / M;
                s += f[k] * std::cos(j * theta);
            }
            a[j] = s / M2;
        }
        return a;
    }();
    return coeffs;
}

std::complex<double> faddeeva_weideman(std::complex<double> z) {
    const int N = kWeidemanN;
    const double L = std::sqrt(N / std::sqrt(2.0));
    const auto& a = weideman_coeffs();
    const std::complex<double> iz(-z.imag(), z.real());
    const std::complex<double> Zden = L - iz;
    const std::complex<double> Z = (L + iz) / Zden;
    // Horner on a_N ... a_1 (the a_0 term cancels in Weideman's derivation)
    std::complex<double> p = 0.0;
    for (int j = N; j >= 1; --j) p = p * Z + a[j];
    return 2.0 * p / (Zden * Zden) + kInvSqrtPi / Zden;
}

std::complex<double> faddeeva_contfrac(std::complex<double> z) {
    // w(z) = (i/sqrt(pi)) / (z - 1/2/(z - 1/(z - 3/2/(z - ...)))), |z| large
    const int depth = 12;
    std::complex<double> r = 0.0;
    for (int k = depth; k >= 1; --k) r = (0.5 * k) / (z - r);
    return std::complex<double>(0.0, kInvSqrtPi) / (z - r);
}

}  // namespace

std::complex<double> faddeeva_w(std::complex<double> z) {
    if (z.imag() < 0.0)
        throw std::domain_error("faddeeva_w: implemented for Im(z) >= 0 only");
    if (std::norm(z) > 56.25)  // |z| > 7.5
        return faddeeva_contfrac(z);
    return faddeeva_weideman(z);
}

// ---------------------------------------------------------------------------
// Gauss 2F1 on the non-positive real axis.
// ---------------------------------------------------------------------------
namespace {

// Plain Gauss series at argument w, |w| < 1. The stop criterion bounds the
// remaining tail by |term| * w/(1-w), which covers the slow polynomial-decay
// regime as w -> 1.
double gauss_series(double a, double b, double c, double w, double tol, long max_terms,
                    bool* ok) {
    double sum = 1.0;
    double term = 1.0;
    *ok = false;
    const double tail_factor = std::abs(w) / (1.0 - std::abs(w));
    for (long k = 0; k < max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * w;
        sum += term;
        if (k > 8 && std::abs(term) * tail_factor < tol * std::abs(sum)) {
            *ok = true;
            break;
        }
    }
    return sum;
}

}  // namespace

double gauss2f1(double a, double b, double c, double z) {
    if (is_nonpositive_integer(c))
        throw std::domain_error("gauss2f1: c is a non-positive integer");
    if (z > 0.0)
        throw std::domain_error("gauss2f1: only z <= 0 is supported");
    if (z == 0.0) return 1.0;
    if (a > b) std::swap(a, b);  // symmetric in (a,b); canonical order

    bool ok = false;
    double result;
    if (z >= -0.5) {
        result = gauss_series(a, b, c, z, 1e-15, 200000, &ok);
    } else if (z >= -8.0 || a <= -1.0 || std::abs(c - (1.0 + a)) > 1e-13 ||
               is_nonpositive_integer(b - a)) {
        // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)); the mapped
        // argument lies in [1/3, 1) and with a = min(a,b) the transformed
        // series terms decay like k^{a-b-1} w^k with no late sign changes.
        const double w = z / (z - 1.0);
        const double s = gauss_series(a, c - b, c, w, 1e-15, 50000000, &ok);
        result = std::pow(1.0 - z, -a) * s;
    } else {
        // Far negative z with c = 1 + a (the interference-transform family):
        // the z -> 1/z connection formula degenerates, its first series being
        // identically 1:
        //   2F1(a,b;1+a;z) = Gamma(1+a) Gamma(b-a) / Gamma(b) (-z)^{-a}
        //                  + a/(a-b) (-z)^{-b} 2F1(b, b-a; 1+b-a; 1/z)
        const double x = -z;
        const double lead = std::exp(std::lgamma(1.0 + a) + std::lgamma(b - a) -
                                     std::lgamma(b) - a * std::log(x));
        const double inner = gauss_series(b, b - a, 1.0 + b - a, 1.0 / z, 1e-15, 4000, &ok);
        result = lead + a / (a - b) * std::pow(x, -b) * inner;
    }
    if (!ok)
        throw NonConvergenceError("gauss2f1: series did not converge", result);
    return result;
}

// ---------------------------------------------------------------------------
// Tricomi Psi(1, 1/2; z) and relatives.
// ---------------------------------------------------------------------------
double tricomi_psi_1_half(double z) {
    if (z < 0.0) throw std::domain_error("tricomi_psi_1_half: requires z >= 0");
    if (z == 0.0) return 2.0;
    if (z > 1e4) {
        // Psi(1,1/2;z) = z^{-1} sum_k (3/2)_k (-1/z)^k, truncated at the smallest term
        double term = 1.0, sum = 1.0;
        for (int k = 0; k < 40; ++k) {
            const double next = term * -(k + 1.5) / z;
            if (std::abs(next) >= std::abs(term)) break;
            term = next;
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return sum / z;
    }
    const double r = std::sqrt(z);
    return 2.0 - 2.0 * kSqrtPi * r * erfcx(r);
}

std::complex<double> tricomi_psi_1_half(std::complex<double> z) {
    const std::complex<double> r = std::sqrt(z);  // principal branch, Re(r) >= 0
    const std::complex<double> ir(-r.imag(), r.real());
    return 2.0 - 2.0 * kSqrtPi * r * faddeeva_w(ir);
}

double parabolic_d_minus2(double x) {
    const double q = 0.25 * x * x;
    if (q > 745.0) return 0.0;  // exp underflow; the true value is below 1e-300
    return 0.5 * std::exp(-q) * tricomi_psi_1_half(0.5 * x * x);
}

// ---------------------------------------------------------------------------
// Incomplete gamma (series + Lentz continued fraction).
// ---------------------------------------------------------------------------
namespace {

double gamma_p_series(double s, double x) {
    double ap = s;
    double sum = 1.0 / s;
    double del = sum;
    for (int n = 0; n < 10000; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16)
            return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
    throw NonConvergenceError("regularized_gamma_p: series stalled",
                              sum * std::exp(-x + s * std::log(x) - std::lgamma(s)));
}

double gamma_q_contfrac(double s, double x) {
    const double fpmin = std::numeric_limits<double>::min() / 1e-16;
    double b = x + 1.0 - s;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16)
            return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
    throw NonConvergenceError("regularized_gamma_p: continued fraction stalled",
                              h * std::exp(-x + s * std::log(x) - std::lgamma(s)));
}

}  // namespace

double regularized_gamma_p(double s, double x) {
    if (s <= 0.0) throw std::domain_error("regularized_gamma_p: requires s > 0");
    if (x < 0.0) throw std::domain_error("regularized_gamma_p: requires x >= 0");
    if (x == 0.0) return 0.0;
    if (x < s + 1.0) return gamma_p_series(s, x);
    return 1.0 - gamma_q_contfrac(s, x);
}

double lower_incomplete_gamma(double s, double x) {
    return regularized_gamma_p(s, x) * std::tgamma(s);
}

// ---------------------------------------------------------------------------
// Rayleigh-sum Laplace transform.
// ---------------------------------------------------------------------------
double laplace_of_sk(double s, int K) {
    if (K < 1) throw std::domain_error("laplace_of_sk: K must be >= 1");
    if (s < 0.0) throw std::domain_error("laplace_of_sk: requires s >= 0");
    // Gamma(2) e^{s^2/8} D_{-2}(s/sqrt2) = (1/2) Psi(1,1/2;s^2/4): the
    // exponential in D_{-2} cancels symbolically, so no large-s blowup.
    const double base = 0.5 * tricomi_psi_1_half(0.25 * s * s);
    return std::pow(base, K);
}

std::complex<double> laplace_of_sk(std::complex<double> s, int K) {
    if (K < 1) throw std::domain_error("laplace_of_sk: K must be >= 1");
    if (s.real() < 0.0)
        throw std::domain_error("laplace_of_sk: continuation valid for Re(s) >= 0");
    // E[e^{-sX}] = 1 - (sqrt(pi) s / 2) w(i s / 2) for a unit Rayleigh X
    const std::complex<double> half_s = 0.5 * s;
    const std::complex<double> i_half_s(-half_s.imag(), half_s.real());
    const std::complex<double> base = 1.0 - kSqrtPi * half_s * faddeeva_w(i_half_s);
    return std::pow(base, K);
}

}  // namespace riscov::specfn
