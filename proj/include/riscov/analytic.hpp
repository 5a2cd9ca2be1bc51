#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "riscov/channel.hpp"
#include "riscov/geometry.hpp"

namespace riscov::analytic {

// Per-k coefficients of the typical-user coverage expression. For term k of
// the alternating binomial sum,
//   xi1[k-1] = pi lam ( 2F1(-2/at,1;1-2/at;-k eta Y (1-rho))
//            + 2F1(-2/at,a;1-2/at;-k eta b Y rho) - 1 )
//   xi2[k-1] = k eta Y sigma^2 / (P_t C_t)
// with Y = max(th_sic/(a_c - th_sic a_t), th_t/a_t) and eta = (1/b)(a!)^{-1/a}.
struct TypicalCoverageTerms {
    double upsilon = 0.0;
    double eta_t = 0.0;
    int shape = 0;  // integer Gamma shape a (bound exponent)
    std::vector<double> xi1;
    std::vector<double> xi2;
};

struct ConnectedCoverageTerms {
    double xi3 = 0.0;
    double xi4 = 0.0;
    double eta_c = 1.0;
};

struct CoverageValue {
    double probability = 0.0;
    bool feasible = true;
};

struct CoverageQuadrature {
    double rel_tol = 1e-12;
    double tail_cut = 1e-12;  // integrand tail cutoff relative to its peak
};

// Laplace transform of the typical-user interference (two-portion field,
// Rayleigh direct part and Gamma(fit) RIS part).
double laplace_typical(double s, double d_t, const geometry::SystemParams& params,
                       const channel::GammaFit& fit);

// Laplace transform of the connected-user interference (Rayleigh field
// outside radius r_c); the hypergeometric argument is linear in s.
double laplace_connected(double s, const geometry::SystemParams& params);

// Builds the per-k coverage coefficients. Throws if the fit shape is not a
// positive integer or thresholds are infeasible.
TypicalCoverageTerms build_typical_terms(const geometry::SystemParams& params,
                                         const channel::GammaFit& fit);

ConnectedCoverageTerms build_connected_terms(const geometry::SystemParams& params);

// Typical-user coverage, general path-loss exponent: alternating binomial sum
// over I1(k) = int_0^inf x exp(-xi2 x^alpha) exp(-xi1 x^2) dx by adaptive
// quadrature with the tail truncated where the integrand falls below
// tail_cut * peak.
CoverageValue coverage_typical_general(const geometry::SystemParams& params,
                                       const channel::GammaFit& fit,
                                       const CoverageQuadrature& quad = {});

// Closed forms for alpha_t = 2 and alpha_t = 4.
CoverageValue coverage_typical_alpha2(const geometry::SystemParams& params,
                                      const channel::GammaFit& fit);
CoverageValue coverage_typical_alpha4(const geometry::SystemParams& params,
                                      const channel::GammaFit& fit);

// Term-level entry points (shared by the params overloads and by the
// specialization consistency checks, where the coefficients are synthetic).
double coverage_general_from_terms(const TypicalCoverageTerms& terms, double alpha_t,
                                   double lambda_b, const CoverageQuadrature& quad = {});
double coverage_alpha2_from_terms(const TypicalCoverageTerms& terms, double lambda_b);
double coverage_alpha4_from_terms(const TypicalCoverageTerms& terms, double lambda_b);

// Connected-user coverage exp(-xi3 r_c^alpha_c) exp(-xi4 r_c^2); the shape-1
// bound is exact, so this is the exact coverage under the model.
CoverageValue coverage_connected(const geometry::SystemParams& params);

// CSV row emitter: `param_swept,value,p_analytic`.
void write_analytic_csv(std::ostream& os, const std::string& param_swept,
                        const std::vector<double>& values,
                        const std::vector<double>& coverage);

}  // namespace riscov::analytic
