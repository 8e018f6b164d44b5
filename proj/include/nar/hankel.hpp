#pragma once

#include <Eigen/Dense>
#include <vector>

#include "nar/abm.hpp"

namespace nar {

// Delay-stacked data matrices. Column c of next is the one-step successor
// of the newest block of column c of stacked; columns never straddle two
// source trajectories.
struct HankelData {
    Eigen::MatrixXd stacked;  // (m*p) x n, rows newest-first
    Eigen::MatrixXd next;     // m x n
    int m = 0;
    int p = 0;
};

// A trajectory of length T+1 contributes T-p+1 column pairs; trajectories are
// concatenated. Throws std::invalid_argument naming any trajectory shorter
// than p+1 states.
HankelData build_hankel(const std::vector<MacroTrajectory>& trajectories, int p);

}  // namespace nar
