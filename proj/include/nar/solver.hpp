#pragma once

#include <Eigen/Dense>

namespace nar {

// min_w ||y - A^T w||_2^2 + lambda*n*||w||_1 by cyclic coordinate descent with
// exact soft-thresholding updates on unstandardized features (A is v x n).
// The objective is checked to be non-increasing across sweeps. Converges when
// the largest coefficient change in a sweep is < 1e-12; throws
// SolverNonConvergence (carrying the last iterate) after 1e5 sweeps.
Eigen::VectorXd lasso_solve(const Eigen::Ref<const Eigen::MatrixXd>& A,
                            const Eigen::Ref<const Eigen::VectorXd>& y, double lambda);

// Minimum-norm least squares ||y - A^T w||_2 via SVD. rank_deficient reports
// whether the features were numerically rank-deficient.
Eigen::VectorXd least_squares(const Eigen::Ref<const Eigen::MatrixXd>& A,
                              const Eigen::Ref<const Eigen::VectorXd>& y,
                              bool* rank_deficient = nullptr);

// Iterated thresholded least squares: solve LS, zero every |w_j| < threshold,
// refit on the survivors, repeat to a fixpoint. This is the sparsifier the
// reference results require for lambda > 0 (see model metadata).
Eigen::VectorXd thresholded_least_squares(const Eigen::Ref<const Eigen::MatrixXd>& A,
                                          const Eigen::Ref<const Eigen::VectorXd>& y,
                                          double threshold, bool* rank_deficient = nullptr);

}  // namespace nar
