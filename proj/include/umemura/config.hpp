#pragma once

#include <string>
#include <vector>

namespace umemura {

/// Runtime configuration. Sources, weakest first: built-in defaults, a
/// key=value config file, CLI flag overrides. UMEMURA_CACHE in the
/// environment overrides cache_path.
struct Config {
    int n_max_symbolic = 10;
    int n_max_numeric = 14;
    int pv_n_max = 6;
    int series_N = 20;
    double integrator_tol = 1e-10;
    double residual_tol = 1e-8;
    std::vector<double> lambda_samples = {0.5, 1.0, 1.5, 2.5};
    std::vector<std::string> r_samples = {"1/3", "-1/2", "2"};
    std::string output_dir = ".";
    std::string cache_path;  // empty: persistence disabled
    bool strict_heun = false;

    /// Throws ConfigError when a tolerance is nonpositive or an n cap < 2.
    void validate() const;
};

/// Parses "key=value" lines ('#' comments and blank lines allowed) on top of
/// the given base. Unknown keys throw ConfigError.
Config load_config_file(const std::string& path, Config base = {});
Config parse_config_text(const std::string& text, Config base = {});

/// Applies the UMEMURA_CACHE environment override.
void apply_env_overrides(Config& cfg);

}  // namespace umemura
