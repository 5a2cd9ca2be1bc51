#include "riscov/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace riscov::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

double simpson_rule(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    // `tol` is a relative target against a coarse magnitude estimate; a hard
    // evaluation budget and a machine-precision floor keep the refinement from
    // chasing unreachable goals in flat regions.
    const int coarse_n = 256;
    double scale = 0.0;
    const double h = (b - a) / coarse_n;
    for (int i = 0; i < coarse_n; ++i) {
        const double x0 = a + i * h;
        scale += std::abs(simpson_rule(x0, f(x0), x0 + h, f(x0 + h), f(x0 + 0.5 * h)));
    }
    const double abs_tol = std::max(tol * scale, 1e-300);

    struct Seg {
        double a, fa, b, fb, m, fm, whole, tol;
        int depth;
    };
    std::vector<Seg> stack;
    const double m0 = 0.5 * (a + b);
    const double fa0 = f(a), fb0 = f(b), fm0 = f(m0);
    stack.push_back({a, fa0, b, fb0, m0, fm0, simpson_rule(a, fa0, b, fb0, fm0), abs_tol,
                     std::min(max_depth, 48)});
    double total = 0.0;
    long budget = 2000000;
    while (!stack.empty()) {
        const Seg s = stack.back();
        stack.pop_back();
        const double lm = 0.5 * (s.a + s.m), rm = 0.5 * (s.m + s.b);
        const double flm = f(lm), frm = f(rm);
        budget -= 2;
        const double left = simpson_rule(s.a, s.fa, s.m, s.fm, flm);
        const double right = simpson_rule(s.m, s.fm, s.b, s.fb, frm);
        const double delta = left + right - s.whole;
        const bool small_rel = std::abs(delta) <= 1e-15 * (std::abs(left) + std::abs(right));
        if (std::abs(delta) <= 15.0 * s.tol || small_rel || s.depth <= 0 || budget <= 0) {
            total += left + right + delta / 15.0;
            continue;
        }
        stack.push_back({s.a, s.fa, s.m, s.fm, lm, flm, left, 0.5 * s.tol, s.depth - 1});
        stack.push_back({s.m, s.fm, s.b, s.fb, rm, frm, right, 0.5 * s.tol, s.depth - 1});
    }
    return total;
}

double gauss2f1_series(double a, double b, double c, double z, int terms) {
    if (std::abs(z) >= 1.0)
        throw std::domain_error("gauss2f1_series: |z| must be < 1");
    double sum = 1.0, t = 1.0;
    for (int k = 0; k < terms; ++k) {
        t *= (a + k) * (b + k) / ((c + k) * (1.0 + k)) * z;
        sum += t;
    }
    return sum;
}

double gauss2f1_half_identity(double x) {
    if (x < 0.0) throw std::domain_error("gauss2f1_half_identity: requires x >= 0");
    const double r = std::sqrt(x);
    return 1.0 + r * std::atan(r);
}

double rayleigh_pdf(double x) { return x <= 0.0 ? 0.0 : 2.0 * x * std::exp(-x * x); }

double rayleigh_conv2_pdf(double x) {
    if (x <= 0.0) return 0.0;
    return adaptive_simpson(
        [x](double u) { return rayleigh_pdf(u) * rayleigh_pdf(x - u); }, 0.0, x, 1e-13);
}

double rayleigh_laplace_quadrature(double s) {
    // integrand decays like e^{-x^2}; 10 is far past any mass
    return adaptive_simpson(
        [s](double x) { return rayleigh_pdf(x) * std::exp(-s * x); }, 0.0, 12.0, 1e-13);
}

double pgfl_field_laplace(double lambda, double exclusion_radius, double s_eff,
                          double shape_n, double alpha) {
    if (s_eff == 0.0) return 1.0;
    const double A = exclusion_radius;
    // y = A / v maps (A, inf) to (0, 1); y dy = A^2 / v^3 dv
    auto integrand = [&](double v) {
        if (v <= 0.0) return 0.0;
        const double y_ratio_alpha = std::pow(v / A, alpha);  // y^-alpha = (v/A)^alpha
        const double mark = std::pow(1.0 + s_eff * y_ratio_alpha, -shape_n);
        return (1.0 - mark) * A * A / (v * v * v);
    };
    const double integral = adaptive_simpson(integrand, 0.0, 1.0, 1e-14);
    return std::exp(-2.0 * kPi * lambda * integral);
}

double pgfl_laplace_typical(double s, double d_t, const geometry::SystemParams& params,
                            const channel::GammaFit& fit) {
    const double pt = params.p_t_watts();
    const double dir = pgfl_field_laplace(params.lambda_b, d_t,
                                          s * (1.0 - params.rho_i) * pt * params.c_t,
                                          1.0, params.alpha_t);
    const double ris = pgfl_field_laplace(params.lambda_b, d_t,
                                          s * params.rho_i * pt * params.c_t * fit.scale,
                                          fit.shape, params.alpha_t);
    return dir * ris;
}

double pgfl_laplace_connected(double s, const geometry::SystemParams& params) {
    return pgfl_field_laplace(params.lambda_b, params.r_c,
                              s * params.p_t_watts() * params.c_c, 1.0, params.alpha_c);
}

double pgfl_laplace_typical_joint(double s, double d_t,
                                  const geometry::SystemParams& params,
                                  const channel::GammaFit& fit) {
    const double pt = params.p_t_watts();
    const double s_dir = s * (1.0 - params.rho_i) * pt * params.c_t;
    const double s_ris = s * params.rho_i * pt * params.c_t * fit.scale;
    auto integrand = [&](double v) {
        if (v <= 0.0) return 0.0;
        const double y_ratio_alpha = std::pow(v / d_t, params.alpha_t);
        const double mark = std::pow(1.0 + s_ris * y_ratio_alpha, -fit.shape) /
                            (1.0 + s_dir * y_ratio_alpha);
        return (1.0 - mark) * d_t * d_t / (v * v * v);
    };
    const double integral = adaptive_simpson(integrand, 0.0, 1.0, 1e-14);
    return std::exp(-2.0 * kPi * params.lambda_b * integral);
}

double tricomi_psi_asymptotic(double z, int terms) {
    if (!(z > 0.0)) throw std::domain_error("tricomi_psi_asymptotic: requires z > 0");
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < terms; ++k) {
        term *= -(k + 1.5) / z;
        sum += term;
    }
    return sum / z;
}

double parabolic_d_minus2_quadrature(double x) {
    const double tail = 12.0 + std::abs(x);
    const double integral = adaptive_simpson(
        [x](double t) { return t * std::exp(-0.5 * t * t - x * t); }, 0.0, tail, 1e-14);
    return std::exp(-0.25 * x * x) * integral;
}

}  // namespace riscov::oracle
