#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "nar/abm.hpp"
#include "nar/csv.hpp"
#include "nar/dictionary.hpp"
#include "nar/errors.hpp"
#include "nar/hankel.hpp"
#include "nar/hausdorff.hpp"
#include "nar/henon.hpp"
#include "nar/macro.hpp"
#include "nar/model.hpp"
#include "nar/network.hpp"
#include "nar/validation.hpp"

namespace fs = std::filesystem;

namespace nar::cli {

namespace {

std::string lambda_tag(double lambda) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", lambda);
    return buf;
}

std::string realisation_name(std::size_t k, const char* prefix) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s_%03zu.csv", prefix, k);
    return buf;
}

AdaptionMatrix load_alpha(const Config& cfg) {
    if (!cfg.has("alpha")) return AdaptionMatrix::reference3();
    const std::string path = cfg.str("alpha");
    if (!fs::exists(path)) throw std::runtime_error("alpha matrix file not found: " + path);
    return AdaptionMatrix(csv::read_matrix(path));
}

Network build_network(const Config& cfg, std::uint64_t seed) {
    const std::string kind = cfg.str_or("network", "complete");
    const auto n = static_cast<std::size_t>(cfg.integer_or("N", 5000));
    if (kind == "complete") return Network::complete(n);
    if (kind == "clustered") {
        const auto k = static_cast<std::size_t>(cfg.integer_or("clusters", 2));
        const double p_between = cfg.num_or("p_between", 1e-4);
        return Network::clustered(n, k, p_between, seed);
    }
    throw std::runtime_error("unknown network kind: " + kind);
}

InitSpec build_init(const Config& cfg) {
    const std::string kind = cfg.str_or("init", "counts");
    if (kind == "counts") {
        const auto v = cfg.numbers("init_counts");
        return InitGlobalCounts{Eigen::Map<const Eigen::VectorXd>(v.data(),
                                                                  static_cast<Eigen::Index>(v.size()))};
    }
    if (kind == "per-cluster") return InitPerCluster{cfg.rows("init_per_cluster")};
    throw std::runtime_error("unknown init kind: " + kind);
}

MacroTrajectory project(const MacroTrajectory& tr, int keep) {
    MacroTrajectory out;
    out.reserve(tr.size());
    for (const auto& x : tr) out.push_back(x.head(keep));
    return out;
}

std::vector<MacroTrajectory> simulate_dataset(const Config& cfg) {
    const std::uint64_t seed = cfg.seed_or(1);
    const AdaptionMatrix alpha = load_alpha(cfg);
    const Network net = build_network(cfg, seed);
    const InitSpec init = build_init(cfg);
    const auto T = static_cast<std::size_t>(cfg.integer_or("T", 300));
    const auto r = static_cast<std::size_t>(cfg.integer_or("r", 20));
    const int keep =
        static_cast<int>(cfg.integer_or("observed_opinions", alpha.m_opinions() - 1));
    if (keep < 1 || keep > alpha.m_opinions())
        throw std::runtime_error("observed_opinions out of range");
    SimulationResult sim = simulate(net, alpha, init, T, r, seed);
    std::vector<MacroTrajectory> out;
    out.reserve(sim.macro.size());
    for (auto& tr : sim.macro) out.push_back(project(tr, keep));
    return out;
}

std::vector<std::string> list_realisations(const std::string& dir) {
    if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir);
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        const std::string name = e.path().filename().string();
        if (name.rfind("realisation_", 0) == 0 && name.size() > 4 &&
            name.substr(name.size() - 4) == ".csv")
            files.push_back(e.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw std::runtime_error("no realisation_*.csv files in " + dir);
    return files;
}

std::vector<MacroTrajectory> load_dataset(const std::vector<std::string>& files) {
    std::vector<MacroTrajectory> out;
    out.reserve(files.size());
    for (const auto& f : files) {
        if (!fs::exists(f)) throw std::runtime_error("trajectory file not found: " + f);
        out.push_back(csv::read_trajectory(f));
    }
    return out;
}

std::vector<MacroTrajectory> make_dataset(const Config& cfg) {
    if (cfg.has("data_dir")) return load_dataset(list_realisations(cfg.str("data_dir")));
    return simulate_dataset(cfg);
}

double relative_rollout_error(const MacroTrajectory& roll, const MacroTrajectory& truth) {
    double num = 0.0, den = 0.0;
    for (std::size_t t = 0; t < roll.size(); ++t) {
        num += (roll[t] - truth[t]).squaredNorm();
        den += truth[t].squaredNorm();
    }
    return std::sqrt(num) / std::sqrt(den);
}

}  // namespace

int cmd_simulate(const Config& cfg, const std::string& out_dir) {
    const std::uint64_t seed = cfg.seed_or(1);
    const AdaptionMatrix alpha = load_alpha(cfg);
    const Network net = build_network(cfg, seed);
    const InitSpec init = build_init(cfg);
    const auto T = static_cast<std::size_t>(cfg.integer_or("T", 300));
    const auto r = static_cast<std::size_t>(cfg.integer_or("r", 20));
    const bool keep_micro = cfg.integer_or("save_micro", 0) != 0;
    const int keep =
        static_cast<int>(cfg.integer_or("observed_opinions", alpha.m_opinions() - 1));
    if (keep < 1 || keep > alpha.m_opinions())
        throw std::runtime_error("observed_opinions out of range");

    const SimulationResult sim = simulate(net, alpha, init, T, r, seed, keep_micro);
    fs::create_directories(out_dir);
    for (std::size_t k = 0; k < sim.macro.size(); ++k) {
        const fs::path path = fs::path(out_dir) / realisation_name(k, "realisation");
        csv::write_trajectory(path.string(), project(sim.macro[k], keep));
    }
    if (keep_micro) {
        for (std::size_t k = 0; k < sim.micro.size(); ++k) {
            const fs::path path = fs::path(out_dir) / realisation_name(k, "micro");
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
            out << "t";
            for (std::size_t i = 0; i < net.n_agents(); ++i) out << ",agent" << (i + 1);
            out << "\n";
            for (std::size_t t = 0; t < sim.micro[k].size(); ++t) {
                out << t;
                for (int op : sim.micro[k][t]) out << ',' << op;
                out << "\n";
            }
            if (!out) throw std::runtime_error("write failed: " + path.string());
        }
    }
    cfg.write_manifest(out_dir, "simulate");
    std::cout << "simulate: wrote " << sim.macro.size() << " realisations of " << (T + 1)
              << " states to " << out_dir << "\n";
    return 0;
}

int cmd_fit(const Config& cfg, const std::vector<std::string>& data_files,
            const std::string& out_dir) {
    std::vector<std::string> files = data_files;
    if (files.empty() && cfg.has("data_dir")) files = list_realisations(cfg.str("data_dir"));
    if (files.empty()) throw std::runtime_error("no trajectory files given");
    const std::vector<MacroTrajectory> trajs = load_dataset(files);

    const int p = static_cast<int>(cfg.integer_or("p", 1));
    const std::vector<double> lambdas = cfg.numbers_or("lambda", {0.0});
    const int m = static_cast<int>(trajs.front().front().size());
    const DictionarySpec dict = dictionary_by_name(cfg.str_or("dictionary", "opinion"), m, p);
    const HankelData data = build_hankel(trajs, p);

    fs::create_directories(out_dir);
    for (double lambda : lambdas) {
        const NarModel model = fit(data, dict, lambda);
        const fs::path path = fs::path(out_dir) / ("model_lambda" + lambda_tag(lambda) + ".txt");
        save_model(model, path.string());
        std::cout << "# lambda = " << lambda_tag(lambda) << " -> " << path.string() << "\n"
                  << model.to_polynomial_string();
    }
    cfg.write_manifest(out_dir, "fit");
    return 0;
}

int cmd_predict(const Config& cfg, const std::string& model_file, const std::string& traj_file,
                const std::string& out_dir) {
    if (!fs::exists(model_file)) throw std::runtime_error("model file not found: " + model_file);
    if (!fs::exists(traj_file))
        throw std::runtime_error("trajectory file not found: " + traj_file);
    const NarModel model = load_model(model_file);
    const MacroTrajectory traj = csv::read_trajectory(traj_file);
    const auto p = static_cast<std::size_t>(model.p());
    if (traj.size() < p)
        throw std::runtime_error("trajectory shorter than the model's memory depth");

    if (traj.size() > p)
        std::cout << "one_step_error = " << csv::format_double(one_step_error(model, traj))
                  << "\n";
    const auto steps = static_cast<std::size_t>(cfg.integer_or("steps", 0));
    if (steps > 0) {
        std::vector<MacroState> hist(p);
        for (std::size_t k = 0; k < p; ++k) hist[k] = traj[traj.size() - 1 - k];
        const MacroTrajectory roll = rollout(model, hist, steps);
        fs::create_directories(out_dir);
        const fs::path path = fs::path(out_dir) / "prediction.csv";
        csv::write_trajectory(path.string(), roll);
        std::cout << "predict: wrote " << steps << " steps to " << path.string() << "\n";
    }
    cfg.write_manifest(out_dir, "predict");
    return 0;
}

int cmd_sweep(const Config& cfg, const std::string& out_dir) {
    const std::vector<MacroTrajectory> all = make_dataset(cfg);
    const auto n_train = static_cast<std::size_t>(cfg.integer_or("train", 12));
    if (n_train == 0 || n_train > all.size())
        throw std::runtime_error("train count must be in 1..r");
    const std::vector<MacroTrajectory> train(all.begin(), all.begin() + n_train);
    const std::vector<MacroTrajectory> validate(all.begin() + n_train, all.end());

    std::vector<int> default_p(10);
    for (int i = 0; i < 10; ++i) default_p[i] = i + 1;
    const std::vector<int> p_values = cfg.integers_or("p", default_p);
    const std::vector<double> lambdas = cfg.numbers_or("lambda", {0.0});
    const auto block_len = static_cast<std::size_t>(cfg.integer_or("l", 20));
    const int m = static_cast<int>(all.front().front().size());
    const std::string dict_name = cfg.str_or("dictionary", "opinion");

    const SweepResult sweep =
        memory_sweep(train, validate, [&](int p) { return dictionary_by_name(dict_name, m, p); },
                     p_values, lambdas, block_len);
    fs::create_directories(out_dir);
    const fs::path path = fs::path(out_dir) / "sweep.csv";
    write_sweep_csv(sweep, path.string());
    cfg.write_manifest(out_dir, "sweep");
    std::cout << "sweep: wrote " << sweep.cells.size() << " cells to " << path.string() << "\n";
    return 0;
}

int cmd_henon(const Config& cfg, const std::string& out_dir) {
    HenonParams params;
    params.a = cfg.num_or("a", 1.3);
    params.b = cfg.num_or("b", 0.3);
    params.c = cfg.num_or("c", 0.3);
    params.x0 = cfg.num_or("x0", 0.0);
    params.y0 = cfg.num_or("y0", 0.0);
    const auto T_train = static_cast<std::size_t>(cfg.integer_or("T_train", 919));
    const auto validation = static_cast<std::size_t>(cfg.integer_or("validation", 80));
    const double lambda = cfg.num_or("lambda", 0.0);
    const std::string mode = cfg.str_or("mode", "recovery");

    fs::create_directories(out_dir);
    if (mode == "recovery") {
        std::vector<int> default_p(30);
        for (int i = 0; i < 30; ++i) default_p[i] = i + 1;
        const std::vector<int> ps = cfg.integers_or("p", default_p);
        const auto cells = henon_recovery_experiment(params, T_train, validation, ps, lambda);
        const fs::path path = fs::path(out_dir) / "henon_recovery.csv";
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
        out << "p,max_coefficient_error,validation_error\n";
        for (const auto& c : cells)
            out << c.p << ',' << csv::format_double(c.max_coefficient_error) << ','
                << csv::format_double(c.validation_error) << "\n";
        if (!out) throw std::runtime_error("write failed: " + path.string());
        std::cout << "henon: wrote " << cells.size() << " rows to " << path.string() << "\n";
    } else if (mode == "attractor") {
        const std::vector<int> ps = cfg.integers_or("p", {1, 2, 5, 10, 20, 30});
        const auto cells =
            henon_recovery_experiment(params, T_train, validation, ps, lambda, true);
        const fs::path path = fs::path(out_dir) / "henon_attractor.csv";
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
        out << "p,validation_error,hausdorff,rollout_diverged\n";
        for (const auto& c : cells)
            out << c.p << ',' << csv::format_double(c.validation_error) << ','
                << csv::format_double(c.hausdorff) << ',' << (c.rollout_diverged ? 1 : 0)
                << "\n";
        if (!out) throw std::runtime_error("write failed: " + path.string());

        const auto cloud_csv = [&](const std::vector<Eigen::VectorXd>& pts, const fs::path& f) {
            Eigen::MatrixXd m(static_cast<Eigen::Index>(pts.size()), 2);
            for (std::size_t i = 0; i < pts.size(); ++i) m.row(static_cast<Eigen::Index>(i)) =
                pts[i].transpose();
            csv::write_matrix(f.string(), {"x_t", "x_tminus1"}, m);
        };
        {
            // truth attractor: the 3000 states following the training window
            const auto [xs, ys] = simulate_henon(params, 1000 + 1000 + 3000);
            const std::vector<double> tx(xs.begin() + 1000 + 1001, xs.end());
            cloud_csv(delay_embed(tx, 2), fs::path(out_dir) / "attractor_truth.csv");
        }
        for (const auto& c : cells)
            if (!c.rollout_embedding.empty())
                cloud_csv(c.rollout_embedding,
                          fs::path(out_dir) / ("attractor_p" + std::to_string(c.p) + ".csv"));
        std::cout << "henon: wrote " << cells.size() << " rows to " << path.string() << "\n";
    } else {
        throw std::runtime_error("unknown henon mode: " + mode);
    }
    cfg.write_manifest(out_dir, "henon");
    return 0;
}

int cmd_appendix_c(const Config& cfg, const std::string& out_dir) {
    const std::string variant = cfg.str_or("variant", "symmetric");
    fs::create_directories(out_dir);
    const fs::path path = fs::path(out_dir) / "appendix_c.csv";

    if (variant == "linear") {
        const double l1 = cfg.num_or("lambda1", 0.9);
        const double l2 = cfg.num_or("lambda2", 0.5);
        const auto T = static_cast<std::size_t>(cfg.integer_or("T", 100));
        if (T < 3) throw std::runtime_error("linear variant needs T >= 3");
        const auto [c1, c2] = linear_two_cluster_ar2(l1, l2);
        double x1 = cfg.num_or("x1_0", 1.0), x2 = cfg.num_or("x2_0", 0.5);
        MacroTrajectory mean;
        for (std::size_t t = 0; t <= T; ++t) {
            Eigen::VectorXd y(1);
            y[0] = 0.5 * (x1 + x2);
            mean.push_back(std::move(y));
            x1 *= l1;
            x2 *= l2;
        }
        double resid = 0.0;
        for (std::size_t t = 2; t <= T; ++t)
            resid = std::max(resid,
                             std::abs(mean[t][0] - c1 * mean[t - 1][0] - c2 * mean[t - 2][0]));
        const NarModel model = fit(build_hankel({mean}, 2), make_linear_dictionary(1, 2), 0.0);
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
        out << "c1_analytic,c2_analytic,c1_fit,c2_fit,max_recurrence_residual\n"
            << csv::format_double(c1) << ',' << csv::format_double(c2) << ','
            << csv::format_double(model.xi(0, 0)) << ',' << csv::format_double(model.xi(0, 1))
            << ',' << csv::format_double(resid) << "\n";
        if (!out) throw std::runtime_error("write failed: " + path.string());
        std::cout << "appendix-c linear: recurrence (" << csv::format_double(c1) << ", "
                  << csv::format_double(c2) << "), residual " << csv::format_double(resid)
                  << "\n";
        cfg.write_manifest(out_dir, "appendix-c");
        return 0;
    }

    if (variant != "symmetric" && variant != "nonsymmetric")
        throw std::runtime_error("unknown appendix-c variant: " + variant);
    const AdaptionMatrix alpha = load_alpha(cfg);
    std::vector<Eigen::VectorXd> inits;
    if (cfg.has("init_per_cluster")) {
        inits = cfg.rows("init_per_cluster");
    } else if (variant == "symmetric") {
        inits = {Eigen::Vector3d(0.8, 0.1, 0.1), Eigen::Vector3d(0.1, 0.8, 0.1)};
    } else {
        inits = {Eigen::Vector3d(0.7, 0.2, 0.1), Eigen::Vector3d(0.1, 0.8, 0.1)};
    }
    if (inits.size() != 2 || inits[0].size() < 2 || inits[1].size() < 2)
        throw std::runtime_error("appendix-c needs two cluster distributions");

    const auto T = static_cast<std::size_t>(cfg.integer_or("T", 900));
    const auto n_train = static_cast<std::size_t>(cfg.integer_or("train", 500));
    const auto n_roll = static_cast<std::size_t>(cfg.integer_or("rollout", 400));
    const std::vector<int> ps = cfg.integers_or("p", {2});
    const double lambda = cfg.num_or("lambda", 0.0);
    if (n_train + n_roll > T) throw std::runtime_error("train + rollout must not exceed T");

    Eigen::Vector2d c1 = inits[0].head<2>(), c2 = inits[1].head<2>();
    MacroTrajectory mean;
    mean.reserve(T + 1);
    {
        Eigen::VectorXd y(2);
        y = 0.5 * (c1 + c2);
        mean.push_back(y);
    }
    for (std::size_t t = 0; t < T; ++t) {
        const TwoClusterStep s = expected_step_two_cluster(c1, c2, alpha);
        c1 = s.cluster1;
        c2 = s.cluster2;
        Eigen::VectorXd y(2);
        y = s.mean;
        mean.push_back(y);
    }

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "variant,p,one_step_error,rollout_error\n";
    bool printed = false;
    for (int p : ps) {
        const MacroTrajectory train(mean.begin(), mean.begin() + n_train + 1);
        const NarModel model = fit(build_hankel({train}, p), make_opinion_dictionary(p), lambda);
        const double ose = one_step_error(model, mean);
        std::vector<MacroState> hist(static_cast<std::size_t>(p));
        for (int k = 0; k < p; ++k) hist[static_cast<std::size_t>(k)] = mean[n_train - k];
        double re = std::numeric_limits<double>::infinity();
        try {
            const MacroTrajectory roll = rollout(model, hist, n_roll);
            const MacroTrajectory truth(mean.begin() + n_train + 1,
                                        mean.begin() + n_train + 1 + n_roll);
            re = relative_rollout_error(roll, truth);
        } catch (const RolloutDivergence&) {
            // unstable fits blow up; score them +inf instead of aborting the table
        }
        out << variant << ',' << p << ',' << csv::format_double(ose) << ','
            << csv::format_double(re) << "\n";
        if (!printed) {
            std::cout << "# " << variant << " p = " << p << "\n" << model.to_polynomial_string();
            printed = true;
        }
        std::cout << "appendix-c " << variant << " p=" << p
                  << ": one_step_error=" << csv::format_double(ose)
                  << " rollout_error=" << csv::format_double(re) << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
    cfg.write_manifest(out_dir, "appendix-c");
    return 0;
}

int cmd_hausdorff(const Config& cfg, const std::string& file_a, const std::string& file_b,
                  const std::string& out_dir) {
    if (!fs::exists(file_a)) throw std::runtime_error("point-cloud file not found: " + file_a);
    if (!fs::exists(file_b)) throw std::runtime_error("point-cloud file not found: " + file_b);
    const Eigen::MatrixXd A = csv::read_matrix(file_a);
    const Eigen::MatrixXd B = csv::read_matrix(file_b);
    std::vector<Eigen::VectorXd> a(A.rows()), b(B.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i) a[i] = A.row(i).transpose();
    for (Eigen::Index i = 0; i < B.rows(); ++i) b[i] = B.row(i).transpose();
    const double d = hausdorff_distance_grid(a, b);
    std::cout << "hausdorff = " << csv::format_double(d) << "\n";
    if (!out_dir.empty() && out_dir != ".") {
        fs::create_directories(out_dir);
        std::ofstream out(fs::path(out_dir) / "hausdorff.txt");
        out << csv::format_double(d) << "\n";
        cfg.write_manifest(out_dir, "hausdorff");
    }
    return 0;
}

}  // namespace nar::cli
