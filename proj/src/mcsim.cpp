#include "riscov/mcsim.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace riscov::mcsim {

namespace {

double pathloss(double d, double alpha) {
    if (alpha == 4.0) {
        const double d2 = d * d;
        return 1.0 / (d2 * d2);
    }
    return std::pow(d, -alpha);
}

int resolve_threads(int threads, std::uint64_t trials) {
    if (threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : static_cast<int>(hw);
    }
    const std::uint64_t max_useful = std::max<std::uint64_t>(1, trials / 1024);
    return static_cast<int>(std::min<std::uint64_t>(threads, max_useful));
}

// Integer success counts are summed per block, so the reduction is exact and
// schedule-independent.
template <class Trial>
std::uint64_t run_trials(std::uint64_t trials, std::uint64_t seed, int threads,
                         const Trial& trial) {
    threads = resolve_threads(threads, trials);
    if (threads <= 1) {
        std::uint64_t succ = 0;
        for (std::uint64_t i = 0; i < trials; ++i) {
            RandomStream rng = RandomStream::substream(seed, i);
            succ += trial(rng) ? 1 : 0;
        }
        return succ;
    }
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            const std::uint64_t lo = trials * w / threads;
            const std::uint64_t hi = trials * (w + 1) / threads;
            std::uint64_t succ = 0;
            for (std::uint64_t i = lo; i < hi; ++i) {
                RandomStream rng = RandomStream::substream(seed, i);
                succ += trial(rng) ? 1 : 0;
            }
            partial[w] = succ;
        });
    }
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (auto v : partial) total += v;
    return total;
}

void write_double(std::ostream& os, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    os.write(buf, res.ptr - buf);
}

}  // namespace

CoverageEstimate make_estimate(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) throw std::invalid_argument("make_estimate: trials must be > 0");
    CoverageEstimate e;
    e.successes = successes;
    e.trials = trials;
    e.probability = static_cast<double>(successes) / static_cast<double>(trials);
    e.ci_halfwidth_95 =
        1.96 * std::sqrt(e.probability * (1.0 - e.probability) / static_cast<double>(trials));
    return e;
}

double interference_typical(const geometry::NetworkRealization& real,
                            const geometry::SystemParams& params,
                            const channel::GammaFit& fit, FadingMode mode,
                            RandomStream& rng) {
    const double pt = params.p_t_watts();
    const double rho = params.rho_i;
    const channel::RisChannelSpec spec{params.n, params.beta, params.amplitude_gain};
    double sum = 0.0;
    for (double d : real.d_interferers) {
        const double g_dir = rng.exponential();
        double g_ris;
        if (mode == FadingMode::model_faithful) {
            g_ris = rng.gamma(fit.shape, fit.scale);
        } else {
            g_ris = channel::sample_smallscale_approx(spec, rng);
        }
        sum += (rho * g_ris + (1.0 - rho) * g_dir) * pathloss(d, params.alpha_t);
    }
    return pt * params.c_t * sum;
}

double sinr_sic(double gain_t, double interference, const geometry::SystemParams& params) {
    const double pt = params.p_t_watts();
    const double signal = params.a_c * pt * gain_t;
    return signal / (params.a_t * pt * gain_t + interference + params.noise_watts());
}

double sinr_typical_post_sic(double gain_t, double interference,
                             const geometry::SystemParams& params) {
    return params.a_t * params.p_t_watts() * gain_t /
           (interference + params.noise_watts());
}

double sinr_connected(double gain_c, double interference_c,
                      const geometry::SystemParams& params) {
    const double pt = params.p_t_watts();
    return params.a_c * pt * gain_c /
           (params.a_t * pt * gain_c + interference_c + params.noise_watts());
}

CoverageEstimate estimate_coverage_typical(const geometry::SystemParams& params,
                                           const channel::GammaFit& fit,
                                           std::uint64_t trials, FadingMode mode,
                                           std::uint64_t seed, OwnChannelModel own,
                                           int threads) {
    params.validate_structure();
    fit.validate();
    if (trials == 0)
        throw std::invalid_argument("estimate_coverage_typical: trials must be > 0");
    const channel::RisChannelSpec spec{params.n, params.beta, params.amplitude_gain};
    const std::uint64_t successes = run_trials(trials, seed, threads, [&](RandomStream& rng) {
        const geometry::NetworkRealization real = geometry::sample_network(params, rng);
        const double smallscale = own == OwnChannelModel::approx
                                      ? channel::sample_smallscale_approx(spec, rng)
                                      : channel::sample_smallscale_exact(spec, rng);
        const double gain =
            smallscale * params.c_t * pathloss(real.d_serving, params.alpha_t);
        const double interf = interference_typical(real, params, fit, mode, rng);
        return sinr_sic(gain, interf, params) > params.gamma_sic_th &&
               sinr_typical_post_sic(gain, interf, params) > params.gamma_t_th;
    });
    return make_estimate(successes, trials);
}

CoverageEstimate estimate_coverage_connected(const geometry::SystemParams& params,
                                             std::uint64_t trials, std::uint64_t seed,
                                             int threads) {
    params.validate_structure();
    if (trials == 0)
        throw std::invalid_argument("estimate_coverage_connected: trials must be > 0");
    const double radius = params.effective_window_radius();
    const double rc2 = params.r_c * params.r_c;
    const double area_mean = params.lambda_b * 3.14159265358979323846 *
                             (radius * radius - rc2);
    if (!(area_mean > 0.0))
        throw std::invalid_argument("estimate_coverage_connected: window smaller than r_c");
    const double pt = params.p_t_watts();
    const std::uint64_t successes = run_trials(trials, seed, threads, [&](RandomStream& rng) {
        // interferers: HPPP restricted to the annulus (r_c, window_radius]
        const std::uint64_t count = rng.poisson(area_mean);
        double interf = 0.0;
        for (std::uint64_t i = 0; i < count; ++i) {
            const double d =
                std::sqrt(rc2 + (radius * radius - rc2) * rng.uniform());
            interf += rng.exponential() * pathloss(d, params.alpha_c);
        }
        interf *= pt * params.c_c;
        const double gain_c =
            rng.exponential() * params.c_c * pathloss(params.r_c, params.alpha_c);
        return sinr_connected(gain_c, interf, params) > params.gamma_c_th;
    });
    return make_estimate(successes, trials);
}

void write_estimates_csv(std::ostream& os, const std::string& param_swept,
                         const std::vector<double>& values,
                         const std::vector<CoverageEstimate>& estimates) {
    if (values.size() != estimates.size())
        throw std::invalid_argument("write_estimates_csv: size mismatch");
    os << "param_swept,value,p_hat,ci95,trials\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        os << param_swept << ',';
        write_double(os, values[i]);
        os.put(',');
        write_double(os, estimates[i].probability);
        os.put(',');
        write_double(os, estimates[i].ci_halfwidth_95);
        os << ',' << estimates[i].trials << '\n';
    }
}

}  // namespace riscov::mcsim
