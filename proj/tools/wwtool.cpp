// Command-line entry: simulate, verify, fit.

#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>

#include "ww/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Water-wave normal form and wave-packet toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    auto* sim = app.add_subcommand("simulate", "Run a simulation from a config file");
    sim->add_option("--config", config_path, "key = value config file")->required();

    std::string suite;
    int modes = 0;
    auto* ver = app.add_subcommand("verify", "Run an acceptance suite (or 'all')");
    ver->add_option("--suite", suite, "suite id")->required();
    ver->add_option("--n", modes, "grid modes (default 2048)");

    std::string run_dir, norm_id;
    double t_lo = 0.0, t_hi = std::numeric_limits<double>::infinity();
    auto* fit = app.add_subcommand("fit", "Fit a decay exponent to a run's norm series");
    fit->add_option("--run", run_dir, "run directory")->required();
    fit->add_option("--norm", norm_id, "norm id, e.g. X or H_0.5")->required();
    fit->add_option("--from", t_lo, "window start");
    fit->add_option("--to", t_hi, "window end");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim) {
            const ww::RunResult r = ww::cmd_simulate(ww::load_config(config_path));
            std::cout << r.dir << "\n";
            return 0;
        }
        if (*ver) return ww::cmd_verify(suite, modes, std::cout);
        if (*fit) {
            ww::cmd_fit(run_dir, norm_id, std::cout, t_lo, t_hi);
            return 0;
        }
    } catch (const ww::Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == ww::ErrorCode::UsageError ? 2 : 1;
    }
    return 0;
}
