#pragma once

#include <iosfwd>

#include "riscov/config.hpp"

namespace riscov::cli {

// Writes the channel-law comparison grid (empirical approx-sampler CDF,
// Gamma-fit CDF, exact inverse-Laplace CDF where K = n+1 <= 8) for each value
// of an n or beta sweep. Columns: n,beta,x,cdf_empirical,cdf_gamma,cdf_exact.
// Inverse-Laplace failures are reported per row as `nan`, not fatally.
void cmd_channel_cdf(const RunConfig& config, std::ostream& out);

// Writes one row per sweep value:
// value,p_t_analytic,p_c_analytic,p_t_mc,p_t_ci,p_c_mc,p_c_ci,feasible
void cmd_coverage_sweep(const RunConfig& config, std::ostream& out);

// File-based wrappers honoring config.output_path.
void cmd_channel_cdf(const RunConfig& config);
void cmd_coverage_sweep(const RunConfig& config);

}  // namespace riscov::cli
