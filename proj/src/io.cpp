#include "soapfilm/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace soapfilm::io {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_eigencurve_csv(std::ostream& os,
                          const std::vector<eigencurve::EigencurveSample>& samples) {
    os << "s,mu,mu_prime\n";
    for (const auto& s : samples)
        os << fmt17(s.s) << ',' << fmt17(s.mu) << ',' << fmt17(s.mu_prime) << '\n';
}

void write_spectrum_csv(std::ostream& os, const eigencurve::SpectrumReport& rep,
                        const std::vector<std::pair<double, double>>* bounds) {
    os << (bounds ? "j,nu,mu,lower,upper\n" : "j,nu,mu\n");
    for (std::size_t j = 0; j < rep.mus.size(); ++j) {
        os << j << ',' << fmt17(rep.nus[j]) << ',' << fmt17(rep.mus[j]);
        if (bounds) os << ',' << fmt17((*bounds)[j].first) << ',' << fmt17((*bounds)[j].second);
        os << '\n';
    }
}

void write_branch_csv(std::ostream& os, const std::vector<stationary::BranchPoint>& branch) {
    if (branch.empty()) return;
    const Grid1D& grid = branch.front().u.grid;
    os << "lambda";
    for (double z : grid.nodes) os << ',' << fmt17(z);
    os << '\n';
    for (const auto& bp : branch) {
        os << fmt17(bp.lambda);
        for (double v : bp.u.values) os << ',' << fmt17(v);
        os << '\n';
    }
}

namespace {

std::vector<double> split_csv_doubles(const std::string& line, std::size_t skip) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string tok;
    std::size_t idx = 0;
    while (std::getline(ss, tok, ',')) {
        if (idx++ < skip) continue;
        out.push_back(std::strtod(tok.c_str(), nullptr));
    }
    return out;
}

}  // namespace

std::vector<std::pair<double, FilmProfile>> read_branch_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("read_branch_csv: empty input");
    const std::vector<double> zs = split_csv_doubles(line, 1);
    if (zs.size() < 3) throw std::invalid_argument("read_branch_csv: malformed header");
    Grid1D grid = make_uniform_grid(-1.0, 1.0, static_cast<int>(zs.size()) - 2);
    for (std::size_t i = 0; i < zs.size(); ++i)
        if (std::abs(zs[i] - grid.nodes[i]) > 1e-12)
            throw std::invalid_argument("read_branch_csv: header nodes are not the uniform grid");

    std::vector<std::pair<double, FilmProfile>> out;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '{') continue;
        std::stringstream ss(line);
        std::string tok;
        std::getline(ss, tok, ',');
        const double lambda = std::strtod(tok.c_str(), nullptr);
        std::vector<double> u;
        while (std::getline(ss, tok, ',')) u.push_back(std::strtod(tok.c_str(), nullptr));
        if (u.size() != grid.size())
            throw std::invalid_argument("read_branch_csv: row width mismatch");
        out.emplace_back(lambda, FilmProfile{grid, std::move(u)});
    }
    return out;
}

void write_trajectory_csv(std::ostream& os, const dynamics::Trajectory& traj) {
    os << "t,sup_norm\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i)
        os << fmt17(traj.times[i]) << ',' << fmt17(traj.sup_norms[i]) << '\n';
}

void write_snapshots_csv(std::ostream& os, const dynamics::Trajectory& traj, int stride) {
    if (stride < 1 || traj.states.empty()) return;
    const Grid1D& grid = traj.states.front().grid;
    os << "t";
    for (double z : grid.nodes) os << ',' << fmt17(z);
    os << '\n';
    for (std::size_t i = 0; i < traj.states.size(); i += stride) {
        os << fmt17(traj.times[i]);
        for (double v : traj.states[i].values) os << ',' << fmt17(v);
        os << '\n';
    }
}

nlohmann::json certificate_to_json(const stationary::DeflectionCertificate& cert) {
    nlohmann::json j;
    j["sigma"] = cert.sigma;
    j["s0"] = cert.s0;
    j["sigma_cyl"] = cert.sigma_cyl;
    j["C1"] = cert.C1;
    j["C1_lower_bound"] = cert.C1_lower_bound;
    j["a_j"] = cert.coeffs;
    return j;
}

const char* stop_reason_name(dynamics::StopReason r) {
    switch (r) {
        case dynamics::StopReason::pinch_off: return "pinch_off";
        case dynamics::StopReason::touch: return "touch";
        default: return "completed";
    }
}

}  // namespace soapfilm::io
