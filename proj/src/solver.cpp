#include "nar/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nar/errors.hpp"

namespace nar {

namespace {
double soft_threshold(double z, double gamma) {
    if (z > gamma) return z - gamma;
    if (z < -gamma) return z + gamma;
    return 0.0;
}
}  // namespace

Eigen::VectorXd lasso_solve(const Eigen::Ref<const Eigen::MatrixXd>& A,
                            const Eigen::Ref<const Eigen::VectorXd>& y, double lambda) {
    if (A.cols() != y.size()) throw std::invalid_argument("feature/target size mismatch");
    if (A.cols() < 1) throw std::invalid_argument("need at least one sample");
    if (!A.allFinite() || !y.allFinite()) throw std::invalid_argument("non-finite input");
    if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");

    const Eigen::Index v = A.rows();
    const double lam_eff = lambda * static_cast<double>(A.cols());  // acts on the mean-squared error

    // Gram trick: objective = y'y - 2 w'b + w'Gw + lam_eff*||w||_1 with
    // G = A A', b = A y; each coordinate update is an exact minimisation.
    const Eigen::MatrixXd G = A * A.transpose();
    const Eigen::VectorXd b = A * y;
    const double yy = y.squaredNorm();

    Eigen::VectorXd w = Eigen::VectorXd::Zero(v);
    auto objective = [&](const Eigen::VectorXd& wv) {
        return yy - 2.0 * wv.dot(b) + wv.dot(G * wv) + lam_eff * wv.lpNorm<1>();
    };

    double prev_obj = objective(w);
    const int max_sweeps = 100000;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double max_change = 0.0;
        for (Eigen::Index j = 0; j < v; ++j) {
            const double gjj = G(j, j);
            if (gjj <= 0.0) { w[j] = 0.0; continue; }
            const double rj = b[j] - (G.row(j).dot(w) - gjj * w[j]);
            const double wj = soft_threshold(rj, lam_eff / 2.0) / gjj;
            max_change = std::max(max_change, std::abs(wj - w[j]));
            w[j] = wj;
        }
        const double obj = objective(w);
        if (obj > prev_obj + 1e-9 * std::max(1.0, std::abs(prev_obj)))
            throw std::logic_error("coordinate descent objective increased");
        prev_obj = obj;
        if (max_change < 1e-12) return w;
    }
    throw SolverNonConvergence("coordinate descent did not converge in 100000 sweeps",
                               std::vector<double>(w.data(), w.data() + w.size()));
}

Eigen::VectorXd least_squares(const Eigen::Ref<const Eigen::MatrixXd>& A,
                              const Eigen::Ref<const Eigen::VectorXd>& y, bool* rank_deficient) {
    if (A.cols() != y.size()) throw std::invalid_argument("feature/target size mismatch");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(A.transpose(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(Eigen::NumTraits<double>::epsilon() *
                     static_cast<double>(std::max(A.rows(), A.cols())));
    if (rank_deficient) *rank_deficient = svd.rank() < std::min(A.rows(), A.cols());
    return svd.solve(y);
}

Eigen::VectorXd thresholded_least_squares(const Eigen::Ref<const Eigen::MatrixXd>& A,
                                          const Eigen::Ref<const Eigen::VectorXd>& y,
                                          double threshold, bool* rank_deficient) {
    const Eigen::Index v = A.rows();
    std::vector<bool> active(static_cast<std::size_t>(v), true);
    Eigen::VectorXd w = Eigen::VectorXd::Zero(v);
    bool rd = false;
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index j = 0; j < v; ++j)
            if (active[static_cast<std::size_t>(j)]) idx.push_back(j);
        w.setZero();
        if (idx.empty()) break;
        Eigen::MatrixXd Asub(static_cast<Eigen::Index>(idx.size()), A.cols());
        for (std::size_t r = 0; r < idx.size(); ++r) Asub.row(static_cast<Eigen::Index>(r)) = A.row(idx[r]);
        bool sub_rd = false;
        const Eigen::VectorXd wsub = least_squares(Asub, y, &sub_rd);
        rd = rd || sub_rd;
        for (std::size_t r = 0; r < idx.size(); ++r) w[idx[r]] = wsub[static_cast<Eigen::Index>(r)];
        bool changed = false;
        for (Eigen::Index j = 0; j < v; ++j) {
            const bool keep = std::abs(w[j]) >= threshold;
            if (active[static_cast<std::size_t>(j)] && !keep) {
                active[static_cast<std::size_t>(j)] = false;
                changed = true;
            }
        }
        if (!changed) break;
    }
    for (Eigen::Index j = 0; j < v; ++j)
        if (!active[static_cast<std::size_t>(j)]) w[j] = 0.0;
    if (rank_deficient) *rank_deficient = rd;
    return w;
}

}  // namespace nar
