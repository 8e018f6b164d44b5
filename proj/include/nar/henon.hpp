#pragma once

#include <Eigen/Dense>
#include <limits>
#include <utility>
#include <vector>

#include "nar/model.hpp"

namespace nar {

// x_{t+1} = 1 - a x_t^2 + y_t,  y_{t+1} = b x_t + c y_t.
struct HenonParams {
    double a = 1.3, b = 0.3, c = 0.3;
    double x0 = 0.0, y0 = 0.0;
};

// Length-(T+1) series; throws OrbitEscape if |x| exceeds 1e6.
std::pair<std::vector<double>, std::vector<double>> simulate_henon(const HenonParams& params,
                                                                   std::size_t T);

// Coefficients of the exact memory expansion of x_{t+1} in the
// quadratic-scalar dictionary order [1, x_t^2, x_t, x_{t-1}, ..., x_{t-p+1}]:
// (1, -a, 0, b, c·b, ..., c^{p-2}·b). Requires p >= 2.
Eigen::VectorXd exact_memory_coefficients(const HenonParams& params, int p);

// Points (x_t, ..., x_{t-p+1}), newest first, for t = p-1..end.
std::vector<Eigen::VectorXd> delay_embed(const std::vector<double>& series, int p);

struct HenonRecoveryCell {
    int p = 0;
    double max_coefficient_error = std::numeric_limits<double>::quiet_NaN();  // p >= 2 only
    double validation_error = 0.0;  // one-step relative error on the validation segment
    double hausdorff = 0.0;         // 2-D embeddings of 3000-step rollout vs truth
    bool rollout_diverged = false;
    std::vector<Eigen::VectorXd> rollout_embedding;  // (x_t, x_{t-1}) points, attractor runs only
};

// Burn-in of 1000 steps is discarded, then T_train+1 states train and the next
// `validation` states are scored with teacher-forced one-step predictions.
// The attractor comparison refits on 1001 post-burn-in states and rolls 3000 steps.
std::vector<HenonRecoveryCell> henon_recovery_experiment(const HenonParams& params,
                                                         std::size_t T_train,
                                                         std::size_t validation,
                                                         const std::vector<int>& p_values,
                                                         double lambda,
                                                         bool with_hausdorff = false);

}  // namespace nar
