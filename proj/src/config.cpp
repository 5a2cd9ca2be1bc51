#include "riscov/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace riscov::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& token, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + token);
    }
}

std::vector<double> parse_array(const std::string& token, const std::string& key) {
    if (token.size() < 2 || token.front() != '[' || token.back() != ']')
        throw ConfigError("config: '" + key + "' expects an array [v1, v2, ...]");
    std::vector<double> out;
    std::string inner = token.substr(1, token.size() - 2);
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parse_number(item, key));
    }
    return out;
}

std::string parse_string(const std::string& token, const std::string& key) {
    if (token.size() >= 2 && token.front() == '"' && token.back() == '"')
        return token.substr(1, token.size() - 2);
    throw ConfigError("config: '" + key + "' expects a quoted string");
}

std::string format_number(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::p_t_dbm: return "p_t_dbm";
        case SweepVariable::n: return "n";
        case SweepVariable::beta: return "beta";
        case SweepVariable::rho_i: return "rho_i";
    }
    return "?";
}

SweepVariable sweep_variable_from_string(const std::string& s) {
    if (s == "p_t_dbm") return SweepVariable::p_t_dbm;
    if (s == "n") return SweepVariable::n;
    if (s == "beta") return SweepVariable::beta;
    if (s == "rho_i") return SweepVariable::rho_i;
    throw ConfigError("config: unknown sweep variable '" + s + "'");
}

std::string to_string(mcsim::FadingMode m) {
    return m == mcsim::FadingMode::model_faithful ? "model-faithful" : "physical";
}

mcsim::FadingMode fading_mode_from_string(const std::string& s) {
    if (s == "model-faithful" || s == "model_faithful")
        return mcsim::FadingMode::model_faithful;
    if (s == "physical") return mcsim::FadingMode::physical;
    throw ConfigError("config: unknown fading mode '" + s + "'");
}

std::string to_string(channel::FitMode m) {
    return m == channel::FitMode::paper ? "paper" : "moment";
}

channel::FitMode fit_mode_from_string(const std::string& s) {
    if (s == "paper") return channel::FitMode::paper;
    if (s == "moment") return channel::FitMode::moment;
    throw ConfigError("config: unknown fit mode '" + s + "'");
}

void RunConfig::validate(bool for_validate_command) const {
    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (sweep_values.empty()) throw ConfigError("config: sweep values must be nonempty");
    if (trials == 0) throw ConfigError("config: trials must be positive");
    if (for_validate_command && trials < 10000)
        throw ConfigError("config: validate requires trials >= 10000");
    if (output_path.empty()) throw ConfigError("config: output path must be nonempty");
    for (double v : sweep_values) {
        switch (sweep_variable) {
            case SweepVariable::n:
                if (v < 1.0 || v != std::floor(v))
                    throw ConfigError("config: n sweep values must be positive integers");
                break;
            case SweepVariable::beta:
                if (v < 0.0 || v > 1.0)
                    throw ConfigError("config: beta sweep values must lie in [0,1]");
                break;
            case SweepVariable::rho_i:
                if (v < 0.0 || v > 1.0)
                    throw ConfigError("config: rho_i sweep values must lie in [0,1]");
                break;
            case SweepVariable::p_t_dbm:
                break;
        }
    }
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg = default_config();
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) +
                              " is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config: line " + std::to_string(lineno) +
                              " is not 'key = value'");
        kv[key] = value;
    }

    auto& p = cfg.params;
    for (const auto& [key, value] : kv) {
        if (key == "lambda_b") p.lambda_b = parse_number(value, key);
        else if (key == "p_t_dbm") p.p_t_dbm = parse_number(value, key);
        else if (key == "noise_dbm") p.noise_dbm = parse_number(value, key);
        else if (key == "alpha_t") p.alpha_t = parse_number(value, key);
        else if (key == "alpha_c") p.alpha_c = parse_number(value, key);
        else if (key == "a_c") p.a_c = parse_number(value, key);
        else if (key == "a_t") p.a_t = parse_number(value, key);
        else if (key == "n") p.n = static_cast<int>(parse_number(value, key));
        else if (key == "beta") p.beta = parse_number(value, key);
        else if (key == "rho_i") p.rho_i = parse_number(value, key);
        else if (key == "r_c") p.r_c = parse_number(value, key);
        else if (key == "amplitude_gain") p.amplitude_gain = parse_number(value, key);
        else if (key == "c_t") p.c_t = parse_number(value, key);
        else if (key == "c_c") p.c_c = parse_number(value, key);
        else if (key == "gamma_sic_th") p.gamma_sic_th = parse_number(value, key);
        else if (key == "gamma_t_th") p.gamma_t_th = parse_number(value, key);
        else if (key == "gamma_c_th") p.gamma_c_th = parse_number(value, key);
        else if (key == "window_radius") p.window_radius = parse_number(value, key);
        else if (key == "sweep_variable") cfg.sweep_variable =
            sweep_variable_from_string(parse_string(value, key));
        else if (key == "sweep_values") cfg.sweep_values = parse_array(value, key);
        else if (key == "trials") cfg.trials =
            static_cast<std::uint64_t>(parse_number(value, key));
        else if (key == "seed") cfg.seed =
            static_cast<std::uint64_t>(parse_number(value, key));
        else if (key == "fading_mode") cfg.fading_mode =
            fading_mode_from_string(parse_string(value, key));
        else if (key == "fit_mode") cfg.fit_mode =
            fit_mode_from_string(parse_string(value, key));
        else if (key == "output_path") cfg.output_path = parse_string(value, key);
        else throw ConfigError("config: unknown key '" + key + "'");
    }
    cfg.validate();  // reject bad physical configurations at load time
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream os;
    const auto& p = cfg.params;
    os << "lambda_b = " << format_number(p.lambda_b) << '\n'
       << "p_t_dbm = " << format_number(p.p_t_dbm) << '\n'
       << "noise_dbm = " << format_number(p.noise_dbm) << '\n'
       << "alpha_t = " << format_number(p.alpha_t) << '\n'
       << "alpha_c = " << format_number(p.alpha_c) << '\n'
       << "a_c = " << format_number(p.a_c) << '\n'
       << "a_t = " << format_number(p.a_t) << '\n'
       << "n = " << p.n << '\n'
       << "beta = " << format_number(p.beta) << '\n'
       << "rho_i = " << format_number(p.rho_i) << '\n'
       << "r_c = " << format_number(p.r_c) << '\n'
       << "amplitude_gain = " << format_number(p.amplitude_gain) << '\n'
       << "c_t = " << format_number(p.c_t) << '\n'
       << "c_c = " << format_number(p.c_c) << '\n'
       << "gamma_sic_th = " << format_number(p.gamma_sic_th) << '\n'
       << "gamma_t_th = " << format_number(p.gamma_t_th) << '\n'
       << "gamma_c_th = " << format_number(p.gamma_c_th) << '\n'
       << "window_radius = " << format_number(p.window_radius) << '\n'
       << "sweep_variable = \"" << to_string(cfg.sweep_variable) << "\"\n"
       << "sweep_values = [";
    for (std::size_t i = 0; i < cfg.sweep_values.size(); ++i) {
        if (i) os << ", ";
        os << format_number(cfg.sweep_values[i]);
    }
    os << "]\n"
       << "trials = " << cfg.trials << '\n'
       << "seed = " << cfg.seed << '\n'
       << "fading_mode = \"" << to_string(cfg.fading_mode) << "\"\n"
       << "fit_mode = \"" << to_string(cfg.fit_mode) << "\"\n"
       << "output_path = \"" << cfg.output_path << "\"\n";
    return os.str();
}

RunConfig default_config() { return RunConfig{}; }

geometry::SystemParams apply_sweep(const geometry::SystemParams& base, SweepVariable v,
                                   double value) {
    geometry::SystemParams p = base;
    switch (v) {
        case SweepVariable::p_t_dbm: p.p_t_dbm = value; break;
        case SweepVariable::n: p.n = static_cast<int>(value); break;
        case SweepVariable::beta: p.beta = value; break;
        case SweepVariable::rho_i: p.rho_i = value; break;
    }
    return p;
}

}  // namespace riscov::cli
