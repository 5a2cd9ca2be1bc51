#include "riscov/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <vector>

#include "riscov/analytic.hpp"
#include "riscov/stats.hpp"

namespace riscov::cli {

namespace {

void write_double(std::ostream& os, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    os.write(buf, res.ptr - buf);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
    if (!out) throw ConfigError("cannot open output file '" + path + "'");
    return out;
}

}  // namespace

void cmd_channel_cdf(const RunConfig& config, std::ostream& out) {
    config.validate();
    if (config.sweep_variable != SweepVariable::n &&
        config.sweep_variable != SweepVariable::beta)
        throw ConfigError("channel-cdf sweeps n or beta");

    out << "n,beta,x,cdf_empirical,cdf_gamma,cdf_exact\n";
    const int grid_points = 200;
    for (double value : config.sweep_values) {
        const geometry::SystemParams p =
            apply_sweep(config.params, config.sweep_variable, value);
        const channel::RisChannelSpec spec{p.n, p.beta, p.amplitude_gain};
        const channel::GammaFit fit = channel::fit_gamma(spec, config.fit_mode);

        // empirical CDF of the approx sampler
        std::vector<double> draws(config.trials);
        RandomStream rng = RandomStream::substream(config.seed, 0x5eed);
        for (auto& d : draws) d = channel::sample_smallscale_approx(spec, rng);
        std::sort(draws.begin(), draws.end());
        const double x_max = draws[static_cast<std::size_t>(0.999 * (draws.size() - 1))] * 1.15;

        const int K = p.n + 1;
        const auto inv_cfg = channel::default_inversion_config();
        const double w2 = p.amplitude_gain * p.beta * p.amplitude_gain * p.beta;
        for (int i = 1; i <= grid_points; ++i) {
            const double x = x_max * i / grid_points;
            const double emp =
                static_cast<double>(std::lower_bound(draws.begin(), draws.end(), x) -
                                    draws.begin()) /
                static_cast<double>(draws.size());
            const double gam = channel::gamma_cdf(x, fit);
            double exact = std::numeric_limits<double>::quiet_NaN();
            if (K <= 8 && w2 > 0.0) {
                try {
                    exact = channel::exact_cdf_power(x, w2, K, inv_cfg);
                } catch (const specfn::NonConvergenceError&) {
                    // leave nan; the row stays usable
                }
            }
            out << p.n << ',';
            write_double(out, p.beta);
            out.put(',');
            write_double(out, x);
            out.put(',');
            write_double(out, emp);
            out.put(',');
            write_double(out, gam);
            out.put(',');
            write_double(out, exact);
            out.put('\n');
        }
    }
}

void cmd_coverage_sweep(const RunConfig& config, std::ostream& out) {
    config.validate();
    out << "value,p_t_analytic,p_c_analytic,p_t_mc,p_t_ci,p_c_mc,p_c_ci,feasible\n";
    for (double value : config.sweep_values) {
        const geometry::SystemParams p =
            apply_sweep(config.params, config.sweep_variable, value);
        const channel::RisChannelSpec spec{p.n, p.beta, p.amplitude_gain};
        const channel::GammaFit fit = channel::fit_gamma(spec, config.fit_mode);

        // The coverage bound needs an integer Gamma shape; a moment-matched fit
        // generally is not, in which case the analytic column is nan while the
        // Monte Carlo columns still run.
        analytic::CoverageValue t_ana{std::numeric_limits<double>::quiet_NaN(), true};
        try {
            t_ana = p.alpha_t == 4.0 ? analytic::coverage_typical_alpha4(p, fit)
                                     : analytic::coverage_typical_general(p, fit);
        } catch (const std::domain_error&) {
        }
        const analytic::CoverageValue c_ana = analytic::coverage_connected(p);
        const bool feasible = t_ana.feasible && c_ana.feasible;

        mcsim::CoverageEstimate t_mc{0.0, 0.0, config.trials, 0};
        mcsim::CoverageEstimate c_mc{0.0, 0.0, config.trials, 0};
        if (feasible) {
            t_mc = mcsim::estimate_coverage_typical(p, fit, config.trials,
                                                    config.fading_mode, config.seed);
            c_mc = mcsim::estimate_coverage_connected(p, config.trials, config.seed + 1);
        }

        write_double(out, value);
        out.put(',');
        write_double(out, t_ana.probability);
        out.put(',');
        write_double(out, c_ana.probability);
        out.put(',');
        write_double(out, t_mc.probability);
        out.put(',');
        write_double(out, t_mc.ci_halfwidth_95);
        out.put(',');
        write_double(out, c_mc.probability);
        out.put(',');
        write_double(out, c_mc.ci_halfwidth_95);
        out << ',' << (feasible ? 1 : 0) << '\n';
    }
}

void cmd_channel_cdf(const RunConfig& config) {
    auto out = open_output(config.output_path);
    cmd_channel_cdf(config, out);
}

void cmd_coverage_sweep(const RunConfig& config) {
    auto out = open_output(config.output_path);
    cmd_coverage_sweep(config, out);
}

}  // namespace riscov::cli
