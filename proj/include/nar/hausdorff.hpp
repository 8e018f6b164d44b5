#pragma once

#include <Eigen/Dense>
#include <vector>

namespace nar {

// max( sup_a inf_b ||a-b||, sup_b inf_a ||a-b|| ) over two nonempty point sets.
// Exact brute force, O(|A||B|).
double hausdorff_distance(const std::vector<Eigen::VectorXd>& A,
                          const std::vector<Eigen::VectorXd>& B);

// Grid-accelerated variant (uniform bucketing with ring search); agrees with
// the brute-force result to 1e-12 and is used for large clouds.
double hausdorff_distance_grid(const std::vector<Eigen::VectorXd>& A,
                               const std::vector<Eigen::VectorXd>& B);

}  // namespace nar
