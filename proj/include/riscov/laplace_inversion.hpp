#pragma once

#include <complex>
#include <functional>

#include "riscov/specfn.hpp"

namespace riscov {

enum class InverseLaplaceMethod {
    gaver_stehfest,  // real abscissa summation; needs F on (0, inf) only
    fourier_euler,   // Bromwich line + Euler summation; needs F for Re(s) >= 0
    talbot,          // fixed Talbot contour; needs F analytic left of the line
};

// method_order is the abscissa / node count parameter of the chosen scheme;
// it must be even and >= 4. Convergence is checked by comparing the results
// at orders {order-4, order-2, order}.
struct InverseLaplaceConfig {
    int method_order = 32;
    double target_abs_tol = 1e-8;
    InverseLaplaceMethod method = InverseLaplaceMethod::talbot;

    void validate() const;
};

using RealTransform = std::function<double(double)>;
using ComplexTransform = std::function<std::complex<double>(std::complex<double>)>;

// Numerical inverse Laplace transform f(t) at t > 0.
//
// The real-transform overload supports only the Gaver-Stehfest method (the
// other schemes evaluate off the real axis). Throws
// specfn::NonConvergenceError when consecutive orders disagree by more than
// target_abs_tol.
double inverse_laplace(const RealTransform& transform, double t,
                       const InverseLaplaceConfig& cfg);
double inverse_laplace(const ComplexTransform& transform, double t,
                       const InverseLaplaceConfig& cfg);

}  // namespace riscov
