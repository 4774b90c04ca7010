#include "soapfilm/config.hpp"

#include <fstream>

#include <json.hpp>

#include "soapfilm/stationary.hpp"

namespace soapfilm::cli {

// Default window lambda_cyl +- 0.015: at sigma = 1.6 the branch folds
// (pull-in) near lambda_cyl + 0.0184, so +-0.02 would step past the last
// existing stationary solution.
double RunConfig::lambda_min_resolved() const {
    return lambda_min != 0.0 ? lambda_min : stationary::lambda_cyl() - 0.015;
}

double RunConfig::lambda_max_resolved() const {
    return lambda_max != 0.0 ? lambda_max : stationary::lambda_cyl() + 0.015;
}

void RunConfig::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) throw std::invalid_argument(std::string("config: ") + name +
                                                    " must be positive");
    };
    if (radial_n < 1 || z_n < 1 || field_nz < 1 || field_nr < 2)
        throw std::invalid_argument("config: grid sizes must be positive");
    positive(newton_tol, "newton_tol");
    positive(root_tol, "root_tol");
    positive(linear_tol, "linear_tol");
    if (K < 1 || J < 0) throw std::invalid_argument("config: bad truncation");
    positive(sigma, "sigma");
    positive(dt, "dt");
    positive(T, "T");
    if (steps < 1) throw std::invalid_argument("config: steps must be positive");
    if (snapshot_stride < 0)
        throw std::invalid_argument("config: snapshot_stride must be non-negative");
    if (!(lambda_min_resolved() < lambda_max_resolved()))
        throw std::invalid_argument("config: empty lambda window");
    if (s_count < 2 || !(s_min < s_max))
        throw std::invalid_argument("config: bad eigencurve sampling window");
    if (format != "csv" && format != "json")
        throw std::invalid_argument("config: format must be csv or json");
}

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config: parse error in " + path + ": " + e.what());
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const auto& v = it.value();
        try {
            if (key == "radial_n") cfg.radial_n = v.get<int>();
            else if (key == "z_n") cfg.z_n = v.get<int>();
            else if (key == "field_nz") cfg.field_nz = v.get<int>();
            else if (key == "field_nr") cfg.field_nr = v.get<int>();
            else if (key == "newton_tol") cfg.newton_tol = v.get<double>();
            else if (key == "root_tol") cfg.root_tol = v.get<double>();
            else if (key == "linear_tol") cfg.linear_tol = v.get<double>();
            else if (key == "K") cfg.K = v.get<int>();
            else if (key == "J") cfg.J = v.get<int>();
            else if (key == "sigma") cfg.sigma = v.get<double>();
            else if (key == "lambda_min") cfg.lambda_min = v.get<double>();
            else if (key == "lambda_max") cfg.lambda_max = v.get<double>();
            else if (key == "steps") cfg.steps = v.get<int>();
            else if (key == "dt") cfg.dt = v.get<double>();
            else if (key == "T") cfg.T = v.get<double>();
            else if (key == "seed_amplitude") cfg.seed_amplitude = v.get<double>();
            else if (key == "window_start") cfg.window_start = v.get<double>();
            else if (key == "snapshot_stride") cfg.snapshot_stride = v.get<int>();
            else if (key == "window_end") cfg.window_end = v.get<double>();
            else if (key == "s_min") cfg.s_min = v.get<double>();
            else if (key == "s_max") cfg.s_max = v.get<double>();
            else if (key == "s_count") cfg.s_count = v.get<int>();
            else if (key == "out") cfg.out = v.get<std::string>();
            else if (key == "format") cfg.format = v.get<std::string>();
            else throw std::invalid_argument("config: unknown key '" + key + "'");
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("config: bad value for '" + key + "': " + e.what());
        }
    }
}

}  // namespace soapfilm::cli
