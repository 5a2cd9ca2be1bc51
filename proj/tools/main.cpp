#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "riscov/commands.hpp"
#include "riscov/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitConfigError = 2;

struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::uint64_t trials = 0;
    bool trials_set = false;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string fit_mode;
    std::string fading_mode;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "configuration file (flat key = value)");
    cmd->add_option("--out", f.out_path, "output path (overrides output_path)");
    cmd->add_option("--trials", f.trials, "Monte Carlo trials per point")
        ->each([&](const std::string&) { f.trials_set = true; });
    cmd->add_option("--seed", f.seed, "master RNG seed")
        ->each([&](const std::string&) { f.seed_set = true; });
    cmd->add_option("--fit-mode", f.fit_mode, "Gamma fit mode: paper|moment");
    cmd->add_option("--fading-mode", f.fading_mode,
                    "interferer RIS fading: model-faithful|physical");
}

riscov::cli::RunConfig resolve(const CommonFlags& f) {
    riscov::cli::RunConfig cfg = f.config_path.empty()
                                     ? riscov::cli::default_config()
                                     : riscov::cli::load_config_file(f.config_path);
    if (!f.out_path.empty()) cfg.output_path = f.out_path;
    if (f.trials_set) cfg.trials = f.trials;
    if (f.seed_set) cfg.seed = f.seed;
    if (!f.fit_mode.empty()) cfg.fit_mode = riscov::cli::fit_mode_from_string(f.fit_mode);
    if (!f.fading_mode.empty())
        cfg.fading_mode = riscov::cli::fading_mode_from_string(f.fading_mode);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RIS-aided multi-cell NOMA downlink coverage: analytical "
                 "pipeline and Monte Carlo validation"};
    app.require_subcommand(1);

    CommonFlags flags;
    auto* cdf = app.add_subcommand(
        "channel-cdf", "tabulate empirical, Gamma-fit and exact channel CDFs");
    add_common(cdf, flags);
    auto* sweep = app.add_subcommand(
        "coverage-sweep", "analytic + Monte Carlo coverage across a parameter sweep");
    add_common(sweep, flags);
    auto* validate = app.add_subcommand("validate", "run the acceptance suite");
    add_common(validate, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        const riscov::cli::RunConfig cfg = resolve(flags);
        if (cdf->parsed()) {
            cfg.validate();
            riscov::cli::cmd_channel_cdf(cfg);
            std::cout << "wrote " << cfg.output_path << '\n';
            return kExitOk;
        }
        if (sweep->parsed()) {
            cfg.validate();
            riscov::cli::cmd_coverage_sweep(cfg);
            std::cout << "wrote " << cfg.output_path << '\n';
            return kExitOk;
        }
        cfg.validate(true);
        std::ofstream report(cfg.output_path, std::ios::binary);
        if (!report)
            throw riscov::cli::ConfigError("cannot open report file '" + cfg.output_path +
                                           "'");
        struct Tee : std::streambuf {
            std::streambuf *a, *b;
            Tee(std::streambuf* x, std::streambuf* y) : a(x), b(y) {}
            int overflow(int c) override {
                if (c != EOF) {
                    a->sputc(static_cast<char>(c));
                    b->sputc(static_cast<char>(c));
                }
                return c;
            }
        } tee{std::cout.rdbuf(), report.rdbuf()};
        std::ostream both(&tee);
        const int failed = riscov::cli::cmd_validate(cfg, both);
        return failed == 0 ? kExitOk : kExitValidationFailure;
    } catch (const riscov::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidationFailure;
    }
}
