#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"

namespace {

struct Shared {
    std::string config_path;
    std::string out_dir = ".";
    std::int64_t seed = -1;
    std::vector<std::string> overrides;
};

void add_shared(CLI::App* cmd, Shared& shared) {
    cmd->add_option("--config", shared.config_path, "key=value configuration file");
    cmd->add_option("--out", shared.out_dir, "output directory (default: current)");
    cmd->add_option("--seed", shared.seed, "random seed (overrides the config file)");
    cmd->add_option("--set", shared.overrides, "extra key=value overrides (repeatable)");
}

nar::cli::Config resolve(const Shared& shared) {
    nar::cli::Config cfg;
    if (!shared.config_path.empty()) cfg = nar::cli::Config::from_file(shared.config_path);
    for (const auto& kv : shared.overrides) cfg.set_pair(kv);
    if (shared.seed >= 0) cfg.set("seed", std::to_string(shared.seed));
    return cfg;
}

std::string one_line(std::string s) {
    for (auto& ch : s)
        if (ch == '\n' || ch == '\r') ch = ' ';
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Opinion-dynamics simulation and sparse delay-model identification"};
    app.require_subcommand(1);

    Shared s_sim, s_fit, s_pred, s_sweep, s_henon, s_appc, s_haus;
    std::vector<std::string> fit_files;
    std::string pred_model, pred_traj, haus_a, haus_b, henon_mode, appc_variant;

    CLI::App* c_sim = app.add_subcommand("simulate", "Simulate an ensemble of trajectories");
    add_shared(c_sim, s_sim);

    CLI::App* c_fit = app.add_subcommand("fit", "Fit a sparse delay model to trajectories");
    add_shared(c_fit, s_fit);
    c_fit->add_option("files", fit_files, "trajectory CSV files");

    CLI::App* c_pred = app.add_subcommand("predict", "Evaluate or roll out a fitted model");
    add_shared(c_pred, s_pred);
    c_pred->add_option("model", pred_model, "model file")->required();
    c_pred->add_option("trajectory", pred_traj, "trajectory CSV providing the history")
        ->required();

    CLI::App* c_sweep = app.add_subcommand("sweep", "Memory-depth / penalty sweep");
    add_shared(c_sweep, s_sweep);

    CLI::App* c_henon = app.add_subcommand("henon", "Chaotic benchmark experiments");
    add_shared(c_henon, s_henon);
    c_henon->add_option("--mode", henon_mode, "recovery | attractor");

    CLI::App* c_appc = app.add_subcommand("appendix-c", "Deterministic two-cluster experiments");
    add_shared(c_appc, s_appc);
    c_appc->add_option("--variant", appc_variant, "symmetric | nonsymmetric | linear");

    CLI::App* c_haus = app.add_subcommand("hausdorff", "Hausdorff distance of two point clouds");
    add_shared(c_haus, s_haus);
    c_haus->add_option("cloud_a", haus_a, "CSV of points (one per row)")->required();
    c_haus->add_option("cloud_b", haus_b, "CSV of points (one per row)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << one_line(e.what()) << "\n";
        return 2;
    }

    try {
        if (c_sim->parsed()) return nar::cli::cmd_simulate(resolve(s_sim), s_sim.out_dir);
        if (c_fit->parsed()) return nar::cli::cmd_fit(resolve(s_fit), fit_files, s_fit.out_dir);
        if (c_pred->parsed())
            return nar::cli::cmd_predict(resolve(s_pred), pred_model, pred_traj, s_pred.out_dir);
        if (c_sweep->parsed()) return nar::cli::cmd_sweep(resolve(s_sweep), s_sweep.out_dir);
        if (c_henon->parsed()) {
            nar::cli::Config cfg = resolve(s_henon);
            if (!henon_mode.empty()) cfg.set("mode", henon_mode);
            return nar::cli::cmd_henon(cfg, s_henon.out_dir);
        }
        if (c_appc->parsed()) {
            nar::cli::Config cfg = resolve(s_appc);
            if (!appc_variant.empty()) cfg.set("variant", appc_variant);
            return nar::cli::cmd_appendix_c(cfg, s_appc.out_dir);
        }
        if (c_haus->parsed())
            return nar::cli::cmd_hausdorff(resolve(s_haus), haus_a, haus_b, s_haus.out_dir);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << one_line(e.what()) << "\n";
        return 1;
    }
}
