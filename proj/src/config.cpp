#include "umemura/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "umemura/errors.hpp"

namespace umemura {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for " + key + ": '" + value + "'");
    }
}

double parse_dbl(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad number for " + key + ": '" + value + "'");
    }
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::istringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

void Config::validate() const {
    if (integrator_tol <= 0 || residual_tol <= 0)
        throw ConfigError("config: tolerances must be positive");
    if (n_max_symbolic < 2 || n_max_numeric < 2 || pv_n_max < 2 || series_N < 2)
        throw ConfigError("config: n caps must be >= 2");
    if (lambda_samples.empty() || r_samples.empty())
        throw ConfigError("config: sample lists must be nonempty");
}

Config parse_config_text(const std::string& text, Config base) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(line_no) +
                              " is not key=value: '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key == "n_max_symbolic") base.n_max_symbolic = parse_int(key, value);
        else if (key == "n_max_numeric") base.n_max_numeric = parse_int(key, value);
        else if (key == "pv_n_max") base.pv_n_max = parse_int(key, value);
        else if (key == "series_N") base.series_N = parse_int(key, value);
        else if (key == "integrator_tol") base.integrator_tol = parse_dbl(key, value);
        else if (key == "residual_tol") base.residual_tol = parse_dbl(key, value);
        else if (key == "output_dir") base.output_dir = value;
        else if (key == "cache_path") base.cache_path = value;
        else if (key == "strict_heun") base.strict_heun = (value == "1" || value == "true");
        else if (key == "lambda_samples") {
            base.lambda_samples.clear();
            for (const auto& item : split_list(value))
                base.lambda_samples.push_back(parse_dbl(key, item));
        } else if (key == "r_samples") {
            base.r_samples = split_list(value);
        } else {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }
    return base;
}

Config load_config_file(const std::string& path, Config base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), std::move(base));
}

void apply_env_overrides(Config& cfg) {
    if (const char* cache = std::getenv("UMEMURA_CACHE")) cfg.cache_path = cache;
}

}  // namespace umemura
