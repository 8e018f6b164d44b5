#include "nar/hankel.hpp"

#include <stdexcept>
#include <string>

namespace nar {

HankelData build_hankel(const std::vector<MacroTrajectory>& trajectories, int p) {
    if (p < 1) throw std::invalid_argument("memory depth must be >= 1");
    if (trajectories.empty()) throw std::invalid_argument("no trajectories");
    const Eigen::Index m = trajectories.front().front().size();

    std::size_t n = 0;
    for (std::size_t i = 0; i < trajectories.size(); ++i) {
        const auto& tr = trajectories[i];
        if (tr.size() < static_cast<std::size_t>(p) + 1)
            throw std::invalid_argument("trajectory " + std::to_string(i) +
                                        " is shorter than p+1 states");
        n += tr.size() - static_cast<std::size_t>(p);
    }

    HankelData h;
    h.m = static_cast<int>(m);
    h.p = p;
    h.stacked.resize(m * p, static_cast<Eigen::Index>(n));
    h.next.resize(m, static_cast<Eigen::Index>(n));

    Eigen::Index col = 0;
    for (const auto& tr : trajectories) {
        for (std::size_t t = static_cast<std::size_t>(p) - 1; t + 1 < tr.size(); ++t) {
            for (int k = 0; k < p; ++k)
                h.stacked.block(static_cast<Eigen::Index>(k) * m, col, m, 1) =
                    tr[t - static_cast<std::size_t>(k)];
            h.next.col(col) = tr[t + 1];
            ++col;
        }
    }
    return h;
}

}  // namespace nar
