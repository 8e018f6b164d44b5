#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "nar/abm.hpp"

namespace nar {

// Analytic expected macrodynamics. On a complete network the percentage vector
// evolves Markovianly in expectation; for M=3 the first two coordinates close
// over the monomials {x1, x2, x1^2, x2^2, x1*x2}.
MacroState expected_step_complete(const MacroState& x, const AdaptionMatrix& alpha);

// Coefficients of the closed 2-coordinate map, aligned with the 5-term
// opinion dictionary so they can be compared to fitted models directly.
struct ReducedCoefficients {
    double a, b, c, d;          // a=α31−α13, b=α21−α12−α31+α13, c=α32−α23, d=α12−α21−α32+α23
    Eigen::Matrix<double, 2, 5> xi;  // rows: next (x1, x2) over (x1, x2, x1², x2², x1·x2)

    Eigen::Vector2d apply(const Eigen::Vector2d& x12) const;
};

ReducedCoefficients reduce_m3(const AdaptionMatrix& alpha);

// Two uncoupled complete clusters evolved by the reduced map; returns both next
// cluster states and the network-wide mean.
struct TwoClusterStep {
    Eigen::Vector2d cluster1, cluster2, mean;
};
TwoClusterStep expected_step_two_cluster(const Eigen::Vector2d& x1, const Eigen::Vector2d& x2,
                                         const AdaptionMatrix& alpha);

// AR(2) closed form for the mean of two scalar linear systems x^(i)_{t+1} = λ_i x^(i)_t:
// x_{t+1} = c1 x_t + c2 x_{t-1} with c1 = λ1+λ2, c2 = −λ1·λ2 (characteristic polynomial;
// verified against direct simulation).
std::pair<double, double> linear_two_cluster_ar2(double lambda1, double lambda2);

}  // namespace nar
