#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "nar/model.hpp"

namespace nar {

// Relative Frobenius errors of per-block reconstructions: the trajectory is cut
// into consecutive length-l blocks, block j>=1 is rebuilt by a rollout seeded
// with the last p values of block j-1, the trailing partial block is dropped
// and the first block is seed material only. A divergent rollout scores +inf.
// A zero-norm block scores 0 when reproduced exactly, +inf otherwise.
std::vector<double> block_errors(const NarModel& model, const MacroTrajectory& trajectory,
                                 std::size_t block_len);

// Relative Frobenius error of teacher-forced one-step predictions over all
// admissible steps of the trajectory (true history, no feedback).
double one_step_error(const NarModel& model, const MacroTrajectory& trajectory);

struct SweepCell {
    int p = 0;
    double lambda = 0.0;
    double mean_block_error = 0.0;   // +inf if any block diverged
    double mean_one_step_error = 0.0;
    std::size_t n_blocks = 0;
    std::size_t n_diverged = 0;
    NarModel model;
};

struct SweepResult {
    std::vector<SweepCell> cells;  // p-major, then lambda, both in given order
};

using DictBuilder = std::function<DictionarySpec(int p)>;

// Fits on the concatenated training data per (p, lambda) and evaluates mean
// block and one-step errors pooled over all validation trajectories.
SweepResult memory_sweep(const std::vector<MacroTrajectory>& train,
                         const std::vector<MacroTrajectory>& validate,
                         const DictBuilder& dict_builder, const std::vector<int>& p_values,
                         const std::vector<double>& lambdas, std::size_t block_len);

// CSV with header p,lambda,mean_block_error,mean_one_step_error,n_blocks,n_diverged.
void write_sweep_csv(const SweepResult& sweep, const std::string& path);

}  // namespace nar
