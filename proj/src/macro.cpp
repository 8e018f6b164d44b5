#include "nar/macro.hpp"

#include <cmath>
#include <stdexcept>

namespace nar {

MacroState expected_step_complete(const MacroState& x, const AdaptionMatrix& alpha) {
    const int m = alpha.m_opinions();
    if (x.size() != m) throw std::invalid_argument("state dimension does not match alpha");
    if ((x.array() < -1e-9).any() || std::abs(x.sum() - 1.0) > 1e-9)
        throw std::invalid_argument("state must lie on the probability simplex");
    MacroState next(m);
    for (int mp = 0; mp < m; ++mp) {
        double v = x[mp];
        for (int ms = 0; ms < m; ++ms) {
            if (ms == mp) continue;
            v += (alpha.alpha(ms, mp) - alpha.alpha(mp, ms)) * x[ms] * x[mp];
        }
        next[mp] = v;
    }
    return next;
}

ReducedCoefficients reduce_m3(const AdaptionMatrix& alpha) {
    if (alpha.m_opinions() != 3)
        throw std::invalid_argument("reduction is defined for exactly 3 opinions");
    const Eigen::MatrixXd& A = alpha.alpha;
    ReducedCoefficients r{};
    r.a = A(2, 0) - A(0, 2);
    r.b = A(1, 0) - A(0, 1) - A(2, 0) + A(0, 2);
    r.c = A(2, 1) - A(1, 2);
    r.d = A(0, 1) - A(1, 0) - A(2, 1) + A(1, 2);
    // Substituting x3 = 1 − x1 − x2 into the pairwise exchange terms:
    //   x1' = (1+a)·x1 − a·x1² + b·x1·x2
    //   x2' = (1+c)·x2 − c·x2² + d·x1·x2
    r.xi.setZero();
    r.xi(0, 0) = 1.0 + r.a;  // x1
    r.xi(0, 2) = -r.a;       // x1²
    r.xi(0, 4) = r.b;        // x1·x2
    r.xi(1, 1) = 1.0 + r.c;  // x2
    r.xi(1, 3) = -r.c;       // x2²
    r.xi(1, 4) = r.d;        // x1·x2
    return r;
}

Eigen::Vector2d ReducedCoefficients::apply(const Eigen::Vector2d& x12) const {
    Eigen::Matrix<double, 5, 1> th;
    th << x12[0], x12[1], x12[0] * x12[0], x12[1] * x12[1], x12[0] * x12[1];
    return xi * th;
}

TwoClusterStep expected_step_two_cluster(const Eigen::Vector2d& x1, const Eigen::Vector2d& x2,
                                         const AdaptionMatrix& alpha) {
    const ReducedCoefficients r = reduce_m3(alpha);
    auto check = [](const Eigen::Vector2d& x) {
        if (x[0] < -1e-9 || x[1] < -1e-9 || x[0] + x[1] > 1.0 + 1e-9)
            throw std::invalid_argument("cluster state must lie on the probability simplex");
    };
    check(x1);
    check(x2);
    TwoClusterStep out;
    out.cluster1 = r.apply(x1);
    out.cluster2 = r.apply(x2);
    out.mean = 0.5 * (out.cluster1 + out.cluster2);
    return out;
}

std::pair<double, double> linear_two_cluster_ar2(double lambda1, double lambda2) {
    return {lambda1 + lambda2, -lambda1 * lambda2};
}

}  // namespace nar
