#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "nar/dictionary.hpp"
#include "nar/hankel.hpp"

namespace nar {

// Fitted nonlinear autoregressive model x_{t+1} = Xi * Theta(x_t, ..., x_{t-p+1}).
struct NarModel {
    DictionarySpec dictionary;
    Eigen::MatrixXd xi;       // m x v
    double lambda = 0.0;
    std::string solver;       // "least-squares" or "thresholded-least-squares"
    bool rank_deficient = false;
    std::optional<Eigen::MatrixXd> noise_cov;  // m x m residual covariance

    int m() const { return dictionary.m_dims; }
    int p() const { return dictionary.max_delay; }

    std::string to_polynomial_string() const;  // human-readable fitted equations
};

// Row-wise sparse regression of next on Theta(stacked). lambda = 0 uses
// minimum-norm least squares (flagged if rank-deficient); lambda > 0 uses
// iterated thresholded least squares with threshold lambda, and coefficients
// below 1e-8 are snapped to exact 0. The residual covariance is stored.
NarModel fit(const HankelData& data, const DictionarySpec& dict, double lambda);

// One-step prediction from the p most recent states, newest first.
MacroState predict_one_step(const NarModel& model, const std::vector<MacroState>& history);

// Iterates predict_one_step, feeding predictions back; returns `steps` states.
// Throws RolloutDivergence (with step index and partial output) on non-finite values.
MacroTrajectory rollout(const NarModel& model, const std::vector<MacroState>& initial_history,
                        std::size_t steps);

// Unbiased sample covariance (divisor n-1) of the fit residuals, mean-subtracted.
Eigen::MatrixXd estimate_noise_covariance(const NarModel& model, const HankelData& data);

// Splits xi into per-delay blocks H_0..H_{p-1}; the constant column (if any)
// is returned separately. Concatenating blocks reproduces xi exactly.
struct CoefficientBlocks {
    std::vector<Eigen::MatrixXd> per_delay;        // each m x (terms per delay)
    std::optional<Eigen::VectorXd> constant_column;
};
CoefficientBlocks coefficients_as_blocks(const NarModel& model);

// Structured text round-trip; bit-exact on coefficients.
void save_model(const NarModel& model, const std::string& path);
NarModel load_model(const std::string& path);

}  // namespace nar
