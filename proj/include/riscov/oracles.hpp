#pragma once

#include <functional>

#include "riscov/channel.hpp"
#include "riscov/geometry.hpp"

// Reference implementations that deliberately avoid the main evaluation
// paths. They back the validation suite and the unit tests; keep them
// independent of specfn/analytic internals.
namespace riscov::oracle {

// Recursive adaptive Simpson on [a,b].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_depth = 60);

// Plain Gauss series for 2F1; valid for |z| < 1 only.
double gauss2f1_series(double a, double b, double c, double z, int terms = 400);

// 2F1(-1/2, 1; 1/2; -x) = 1 + sqrt(x) atan(sqrt(x)) for x >= 0.
double gauss2f1_half_identity(double x);

// Rayleigh density 2x e^{-x^2}.
double rayleigh_pdf(double x);

// Density of the sum of two unit-Rayleigh amplitudes by convolution quadrature.
double rayleigh_conv2_pdf(double x);

// Quadrature value of E[e^{-s X}] for X unit Rayleigh.
double rayleigh_laplace_quadrature(double s);

// Direct PGFL integral for one interference portion:
//   exp(-2 pi lambda int_A^inf (1 - (1 + s_eff y^-alpha)^-N) y dy),
// integrated by adaptive Simpson after the substitution y = A / v.
double pgfl_field_laplace(double lambda, double exclusion_radius, double s_eff,
                          double shape_n, double alpha);

// Factorized two-portion PGFL for the typical user (matches the model under
// which the closed form is exact: independent RIS-faded and direct fields).
double pgfl_laplace_typical(double s, double d_t, const geometry::SystemParams& params,
                            const channel::GammaFit& fit);

// Single-portion PGFL for the connected user.
double pgfl_laplace_connected(double s, const geometry::SystemParams& params);

// Joint-field PGFL (both fading portions attached to one point set). Reported
// alongside the factorized form; the factorized closed form differs from this
// at second order in s.
double pgfl_laplace_typical_joint(double s, double d_t,
                                  const geometry::SystemParams& params,
                                  const channel::GammaFit& fit);

// Asymptotic Psi(1, 1/2; z) for large z (Kummer expansion, leading terms).
double tricomi_psi_asymptotic(double z, int terms = 8);

// D_{-2}(x) through its integral representation e^{-x^2/4} int_0^inf t
// exp(-t^2/2 - x t) dt.
double parabolic_d_minus2_quadrature(double x);

}  // namespace riscov::oracle
