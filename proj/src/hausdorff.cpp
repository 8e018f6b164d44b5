#include "nar/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace nar {

namespace {

void check(const std::vector<Eigen::VectorXd>& A, const std::vector<Eigen::VectorXd>& B) {
    if (A.empty() || B.empty()) throw std::invalid_argument("point sets must be nonempty");
    const Eigen::Index d = A.front().size();
    for (const auto& p : A)
        if (p.size() != d || !p.allFinite()) throw std::invalid_argument("bad point in set A");
    for (const auto& p : B)
        if (p.size() != d || !p.allFinite()) throw std::invalid_argument("bad point in set B");
}

double directed(const std::vector<Eigen::VectorXd>& A, const std::vector<Eigen::VectorXd>& B) {
    double worst = 0.0;
    for (const auto& a : A) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : B) best = std::min(best, (a - b).squaredNorm());
        worst = std::max(worst, best);
    }
    return std::sqrt(worst);
}

// 2-D uniform grid over B with expanding ring search per query point.
class Grid2 {
public:
    Grid2(const std::vector<Eigen::VectorXd>& pts, double cell) : pts_(pts), cell_(cell) {
        for (std::size_t i = 0; i < pts.size(); ++i)
            cells_[key(pts[i][0], pts[i][1])].push_back(i);
    }

    double nearest_dist(const Eigen::VectorXd& q) const {
        const long qi = coord(q[0]), qj = coord(q[1]);
        // Seed with an arbitrary point so the ring bound is finite from the start.
        double best = (q - pts_.front()).squaredNorm();
        for (long ring = 0;; ++ring) {
            // Cells at Chebyshev cell-distance `ring` only hold points at
            // Euclidean distance >= (ring-1)*cell, so further rings can't win.
            if (static_cast<double>(ring - 1) * cell_ > std::sqrt(best)) break;
            for (long i = qi - ring; i <= qi + ring; ++i)
                for (long j = qj - ring; j <= qj + ring; ++j) {
                    if (std::max(std::labs(i - qi), std::labs(j - qj)) != ring) continue;
                    auto it = cells_.find(pack(i, j));
                    if (it == cells_.end()) continue;
                    for (std::size_t idx : it->second)
                        best = std::min(best, (q - pts_[idx]).squaredNorm());
                }
        }
        return std::sqrt(best);
    }

private:
    long coord(double v) const { return static_cast<long>(std::floor(v / cell_)); }
    std::uint64_t key(double x, double y) const { return pack(coord(x), coord(y)); }
    static std::uint64_t pack(long i, long j) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
               static_cast<std::uint64_t>(static_cast<std::uint32_t>(j));
    }

    const std::vector<Eigen::VectorXd>& pts_;
    double cell_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

double directed_grid(const std::vector<Eigen::VectorXd>& A, const std::vector<Eigen::VectorXd>& B) {
    // Cell size from the joint extent so both bucket and query coordinates stay
    // small; degenerate or tiny inputs go straight to the exact scan.
    Eigen::Vector2d lo(B[0][0], B[0][1]), hi = lo;
    for (const auto& b : B) {
        lo = lo.cwiseMin(Eigen::Vector2d(b[0], b[1]));
        hi = hi.cwiseMax(Eigen::Vector2d(b[0], b[1]));
    }
    for (const auto& a : A) {
        lo = lo.cwiseMin(Eigen::Vector2d(a[0], a[1]));
        hi = hi.cwiseMax(Eigen::Vector2d(a[0], a[1]));
    }
    const double extent = (hi - lo).maxCoeff();
    if (!(extent > 0.0) || B.size() < 32) return directed(A, B);
    const double cell = extent / std::sqrt(static_cast<double>(B.size()));
    Grid2 grid(B, cell);
    double worst = 0.0;
    for (const auto& a : A) worst = std::max(worst, grid.nearest_dist(a));
    return worst;
}

}  // namespace

double hausdorff_distance(const std::vector<Eigen::VectorXd>& A,
                          const std::vector<Eigen::VectorXd>& B) {
    check(A, B);
    return std::max(directed(A, B), directed(B, A));
}

double hausdorff_distance_grid(const std::vector<Eigen::VectorXd>& A,
                               const std::vector<Eigen::VectorXd>& B) {
    check(A, B);
    if (A.front().size() != 2) return hausdorff_distance(A, B);  // grid path is 2-D only
    return std::max(directed_grid(A, B), directed_grid(B, A));
}

}  // namespace nar
