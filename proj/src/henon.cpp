#include "nar/henon.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "nar/dictionary.hpp"
#include "nar/errors.hpp"
#include "nar/hankel.hpp"
#include "nar/hausdorff.hpp"
#include "nar/validation.hpp"

namespace nar {

std::pair<std::vector<double>, std::vector<double>> simulate_henon(const HenonParams& params,
                                                                   std::size_t T) {
    std::vector<double> x(T + 1), y(T + 1);
    x[0] = params.x0;
    y[0] = params.y0;
    for (std::size_t t = 0; t < T; ++t) {
        x[t + 1] = 1.0 - params.a * x[t] * x[t] + y[t];
        y[t + 1] = params.b * x[t] + params.c * y[t];
        if (!std::isfinite(x[t + 1]) || std::abs(x[t + 1]) > 1e6) throw OrbitEscape(t + 1);
    }
    return {std::move(x), std::move(y)};
}

Eigen::VectorXd exact_memory_coefficients(const HenonParams& params, int p) {
    if (p < 2) throw std::invalid_argument("memory expansion needs depth >= 2");
    // Unrolling y_t = sum_{j>=1} c^{j-1} b x_{t-j} and truncating after p-1 lags.
    Eigen::VectorXd xi = Eigen::VectorXd::Zero(p + 2);
    xi[0] = 1.0;
    xi[1] = -params.a;
    xi[2] = 0.0;
    double w = params.b;
    for (int j = 1; j < p; ++j) {
        xi[2 + j] = w;
        w *= params.c;
    }
    return xi;
}

std::vector<Eigen::VectorXd> delay_embed(const std::vector<double>& series, int p) {
    if (p < 1) throw std::invalid_argument("embedding dimension must be positive");
    if (series.size() < static_cast<std::size_t>(p))
        throw std::invalid_argument("series shorter than embedding dimension");
    std::vector<Eigen::VectorXd> points;
    points.reserve(series.size() - p + 1);
    for (std::size_t t = p - 1; t < series.size(); ++t) {
        Eigen::VectorXd v(p);
        for (int k = 0; k < p; ++k) v[k] = series[t - k];
        points.push_back(std::move(v));
    }
    return points;
}

namespace {

MacroTrajectory to_traj(const std::vector<double>& xs, std::size_t begin, std::size_t end) {
    MacroTrajectory out;
    out.reserve(end - begin);
    for (std::size_t t = begin; t < end; ++t) {
        Eigen::VectorXd s(1);
        s[0] = xs[t];
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::vector<HenonRecoveryCell> henon_recovery_experiment(const HenonParams& params,
                                                         std::size_t T_train,
                                                         std::size_t validation,
                                                         const std::vector<int>& p_values,
                                                         double lambda, bool with_hausdorff) {
    constexpr std::size_t kBurnIn = 1000;
    constexpr std::size_t kAttractorTrain = 1000;  // 1001 states
    constexpr std::size_t kAttractorSteps = 3000;
    if (p_values.empty()) throw std::invalid_argument("empty memory-depth list");

    std::size_t span = T_train + validation;
    if (with_hausdorff) span = std::max(span, kAttractorTrain + kAttractorSteps);
    const auto [xs, ys] = simulate_henon(params, kBurnIn + span);
    const std::vector<double> xb(xs.begin() + kBurnIn, xs.end());

    std::vector<HenonRecoveryCell> cells;
    cells.reserve(p_values.size());
    for (int p : p_values) {
        HenonRecoveryCell cell;
        cell.p = p;
        const DictionarySpec dict = make_quadratic_scalar_dictionary(p);
        const HankelData data = build_hankel({to_traj(xb, 0, T_train + 1)}, p);
        const NarModel model = fit(data, dict, lambda);

        if (p >= 2) {
            const Eigen::VectorXd exact = exact_memory_coefficients(params, p);
            cell.max_coefficient_error =
                (model.xi.row(0).transpose() - exact).cwiseAbs().maxCoeff();
        }
        if (validation > 0) {
            // Last p training states seed teacher-forced predictions of exactly
            // the `validation` held-out states.
            const MacroTrajectory seg =
                to_traj(xb, T_train + 1 - static_cast<std::size_t>(p),
                        T_train + validation + 1);
            cell.validation_error = one_step_error(model, seg);
        }
        if (with_hausdorff) {
            const HankelData adata = build_hankel({to_traj(xb, 0, kAttractorTrain + 1)}, p);
            const NarModel amodel = fit(adata, dict, lambda);
            std::vector<MacroState> hist(p);
            for (int k = 0; k < p; ++k) {
                hist[k] = Eigen::VectorXd(1);
                hist[k][0] = xb[kAttractorTrain - k];
            }
            try {
                const MacroTrajectory roll = rollout(amodel, hist, kAttractorSteps);
                std::vector<double> rx(roll.size());
                for (std::size_t i = 0; i < roll.size(); ++i) rx[i] = roll[i][0];
                const std::vector<double> tx(xb.begin() + kAttractorTrain + 1,
                                             xb.begin() + kAttractorTrain + 1 + kAttractorSteps);
                cell.rollout_embedding = delay_embed(rx, 2);
                cell.hausdorff = hausdorff_distance_grid(cell.rollout_embedding, delay_embed(tx, 2));
            } catch (const RolloutDivergence&) {
                cell.rollout_diverged = true;
                cell.hausdorff = std::numeric_limits<double>::infinity();
            }
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

}  // namespace nar
