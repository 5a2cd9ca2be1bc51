#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "riscov/channel.hpp"
#include "riscov/geometry.hpp"
#include "riscov/mcsim.hpp"

namespace riscov::cli {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class SweepVariable { p_t_dbm, n, beta, rho_i };

std::string to_string(SweepVariable v);
SweepVariable sweep_variable_from_string(const std::string& s);

std::string to_string(mcsim::FadingMode m);
mcsim::FadingMode fading_mode_from_string(const std::string& s);

std::string to_string(channel::FitMode m);
channel::FitMode fit_mode_from_string(const std::string& s);

struct RunConfig {
    geometry::SystemParams params;
    SweepVariable sweep_variable = SweepVariable::p_t_dbm;
    std::vector<double> sweep_values = {0, 5, 10, 15, 20, 25, 30};
    std::uint64_t trials = 100000;
    std::uint64_t seed = 12345;
    mcsim::FadingMode fading_mode = mcsim::FadingMode::model_faithful;
    channel::FitMode fit_mode = channel::FitMode::paper;
    std::string output_path = "out.csv";

    // Throws ConfigError on invalid values (delegates physical invariants to
    // SystemParams::validate).
    void validate(bool for_validate_command = false) const;
};

// Flat key-value text, a TOML-compatible subset: `key = value` lines,
// `#` comments, numeric arrays as `[v1, v2, ...]`, strings quoted.
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);
std::string serialize_config(const RunConfig& config);

RunConfig default_config();

// Applies one sweep value to a copy of the base parameters.
geometry::SystemParams apply_sweep(const geometry::SystemParams& base, SweepVariable v,
                                   double value);

}  // namespace riscov::cli
