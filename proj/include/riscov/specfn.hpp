#pragma once

#include <complex>
#include <stdexcept>

namespace riscov::specfn {

// Raised when an iterative evaluation fails to reach its accuracy target.
class NonConvergenceError : public std::runtime_error {
  public:
    NonConvergenceError(const std::string& what, double best)
        : std::runtime_error(what), best_estimate(best) {}
    double best_estimate;
};

// Complementary error function, relative accuracy better than 1e-12 for |x| <= 10.
double erfc(double x);

// Scaled complementary error function exp(x^2) erfc(x); never over/underflows
// for x >= 0.
double erfcx(double x);

// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im(z) >= 0.
// Weideman rational approximation plus a Laplace continued fraction far out.
std::complex<double> faddeeva_w(std::complex<double> z);

// Gauss hypergeometric 2F1(a,b;c;z) for z <= 0, relative accuracy ~1e-12.
// For z < -0.5 a Pfaff transformation maps the series argument into [0,1).
// a and b are interchangeable; c must not be a non-positive integer.
double gauss2f1(double a, double b, double c, double z);

// Tricomi Psi(1, 1/2; z) for z >= 0, evaluated as 2 - 2 sqrt(pi z) erfcx(sqrt z)
// (cancellation-safe form of 2 - 2 e^z sqrt(pi z) erfc(sqrt z)), with an
// asymptotic series takeover for large z.
double tricomi_psi_1_half(double z);

// Complex continuation of Psi(1, 1/2; z) along sqrt(z) with Re(sqrt z) >= 0.
std::complex<double> tricomi_psi_1_half(std::complex<double> z);

// Parabolic-cylinder function D_{-2}(x) = (1/2) exp(-x^2/4) Psi(1,1/2;x^2/2).
double parabolic_d_minus2(double x);

// Lower incomplete gamma gamma(s,x) = int_0^x t^{s-1} e^{-t} dt, s > 0, x >= 0.
double lower_incomplete_gamma(double s, double x);

// Regularized P(s,x) = gamma(s,x) / Gamma(s).
double regularized_gamma_p(double s, double x);

// Laplace transform of the sum of K unit-Rayleigh amplitudes:
//   E[e^{-s S_K}] = (Gamma(2) e^{s^2/8} D_{-2}(s/sqrt 2))^K
//                 = ((1/2) Psi(1, 1/2; s^2/4))^K,
// with the exponential factors combined before powering.
double laplace_of_sk(double s, int K);

// Analytic continuation of the same transform for Re(s) >= 0 (needed by the
// Fourier-series inversion path).
std::complex<double> laplace_of_sk(std::complex<double> s, int K);

}  // namespace riscov::specfn
