// Command-line front end: computes, cross-checks and exports the eigencurve
// profile, stability threshold, linearized spectrum, stationary branch and
// time evolution of the electrostatic soap-film bridge model.

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "soapfilm/commands.hpp"
#include "soapfilm/types.hpp"

namespace {

using soapfilm::cli::RunConfig;

const std::vector<std::string> kCommands = {"eigencurve", "threshold",  "spectrum",
                                            "branch",     "evolve",     "deflection",
                                            "selftest"};

std::unique_ptr<CLI::App> build_app(RunConfig& cfg, std::string& config_path) {
    auto app = std::make_unique<CLI::App>("electrostatic soap-film bridge toolkit");
    app->require_subcommand(1);
    for (const auto& n : kCommands) {
        auto* sub = app->add_subcommand(n);
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--sigma", cfg.sigma, "aspect-ratio parameter");
        sub->add_option("--lambda-min", cfg.lambda_min, "branch window lower end");
        sub->add_option("--lambda-max", cfg.lambda_max, "branch window upper end");
        sub->add_option("--steps", cfg.steps, "branch continuation steps");
        sub->add_option("--radial-n", cfg.radial_n, "radial interior nodes");
        sub->add_option("--z-n", cfg.z_n, "film interior nodes");
        sub->add_option("--field-nz", cfg.field_nz, "field tensor z interior nodes");
        sub->add_option("--field-nr", cfg.field_nr, "field tensor r interior nodes");
        sub->add_option("--K", cfg.K, "radial eigenpair count");
        sub->add_option("--J", cfg.J, "cosine mode count");
        sub->add_option("--dt", cfg.dt, "time step");
        sub->add_option("--T", cfg.T, "final time");
        sub->add_option("--s-min", cfg.s_min, "eigencurve sampling start");
        sub->add_option("--s-max", cfg.s_max, "eigencurve sampling end");
        sub->add_option("--s-count", cfg.s_count, "eigencurve sample count");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "csv|json");
    }
    return app;
}

int dispatch(const std::string& name, const RunConfig& cfg) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) {
            std::cerr << "error: cannot open output file " << cfg.out << '\n';
            return 1;
        }
        os = &file;
    }
    using Fn = int (*)(const RunConfig&, std::ostream&);
    Fn fn = nullptr;
    if (name == "eigencurve") fn = soapfilm::cli::cmd_eigencurve;
    else if (name == "threshold") fn = soapfilm::cli::cmd_threshold;
    else if (name == "spectrum") fn = soapfilm::cli::cmd_spectrum;
    else if (name == "branch") fn = soapfilm::cli::cmd_branch;
    else if (name == "evolve") fn = soapfilm::cli::cmd_evolve;
    else if (name == "deflection") fn = soapfilm::cli::cmd_deflection;
    else fn = soapfilm::cli::cmd_selftest;
    return fn(cfg, *os);
}

}  // namespace

int main(int argc, char** argv) {
    // first pass: find --config, then re-parse so flags override file values
    RunConfig cfg;
    std::string config_path;
    std::string subcommand;
    {
        auto probe = build_app(cfg, config_path);
        try {
            probe->parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            return probe->exit(e) == 0 ? 0 : 1;
        }
        subcommand = probe->get_subcommands().front()->get_name();
    }
    if (!config_path.empty()) {
        cfg = RunConfig{};
        try {
            soapfilm::cli::load_config_file(config_path, cfg);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 1;
        }
        auto app = build_app(cfg, config_path);
        try {
            app->parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            return app->exit(e) == 0 ? 0 : 1;
        }
    }

    try {
        return dispatch(subcommand, cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const soapfilm::ComputeError& e) {
        std::cerr << "compute error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "compute error: " << e.what() << '\n';
        return 2;
    }
}
