#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "riscov/channel.hpp"
#include "riscov/geometry.hpp"
#include "riscov/rng.hpp"

namespace riscov::mcsim {

// Interferer fading law for the RIS-aided portion.
//  - model_faithful: Gamma(fit) marks, the law the interference analysis uses
//  - physical:       coherent-sum draws (A beta S_K)^2
enum class FadingMode { model_faithful, physical };

// Law of the typical user's own channel draw.
enum class OwnChannelModel { approx, exact };

struct CoverageEstimate {
    double probability = 0.0;
    double ci_halfwidth_95 = 0.0;  // 1.96 sqrt(p(1-p)/trials)
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
};

CoverageEstimate make_estimate(std::uint64_t successes, std::uint64_t trials);

// Aggregate interference at the typical user (watts):
//   sum over interferers of P_t C_t d^-alpha (rho_I G_ris + (1-rho_I) G_dir),
// G_dir ~ Exp(1), G_ris drawn per the fading mode.
double interference_typical(const geometry::NetworkRealization& real,
                            const geometry::SystemParams& params,
                            const channel::GammaFit& fit, FadingMode mode,
                            RandomStream& rng);

// SINR of the SIC stage at the typical user; gain is the full channel gain
// |f_BU|^2 C_t d^-alpha_t.
double sinr_sic(double gain_t, double interference, const geometry::SystemParams& params);

// SINR of the typical user's own message after SIC.
double sinr_typical_post_sic(double gain_t, double interference,
                             const geometry::SystemParams& params);

// SINR at the connected user (decodes directly, own-pair signal as interference).
double sinr_connected(double gain_c, double interference_c,
                      const geometry::SystemParams& params);

// Joint coverage Pr{gamma_SIC > th, gamma_t > th} by Monte Carlo. Trials draw
// independent substreams of `seed`, so the estimate is bit-identical for any
// thread count (`threads` 0 = hardware default).
CoverageEstimate estimate_coverage_typical(const geometry::SystemParams& params,
                                           const channel::GammaFit& fit,
                                           std::uint64_t trials, FadingMode mode,
                                           std::uint64_t seed,
                                           OwnChannelModel own = OwnChannelModel::approx,
                                           int threads = 0);

// Pr{gamma_c > th} with interferers outside radius r_c and Rayleigh fading.
CoverageEstimate estimate_coverage_connected(const geometry::SystemParams& params,
                                             std::uint64_t trials, std::uint64_t seed,
                                             int threads = 0);

// CSV row emitter: `param_swept,value,p_hat,ci95,trials`.
void write_estimates_csv(std::ostream& os, const std::string& param_swept,
                         const std::vector<double>& values,
                         const std::vector<CoverageEstimate>& estimates);

}  // namespace riscov::mcsim
