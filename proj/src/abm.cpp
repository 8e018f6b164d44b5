#include "nar/abm.hpp"

#include <cmath>
#include <stdexcept>

#include "nar/rng.hpp"

namespace nar {

AdaptionMatrix::AdaptionMatrix(Eigen::MatrixXd a) : alpha(std::move(a)) {
    if (alpha.rows() != alpha.cols() || alpha.rows() < 1)
        throw std::invalid_argument("adaption matrix must be square and nonempty");
    if ((alpha.array() < 0.0).any() || (alpha.array() > 1.0).any())
        throw std::invalid_argument("adaption probabilities must lie in [0,1]");
    alpha.diagonal().setZero();
}

AdaptionMatrix AdaptionMatrix::reference3() {
    Eigen::MatrixXd a(3, 3);
    a << 0.0, 0.165, 0.03,
         0.03, 0.0, 0.165,
         0.165, 0.03, 0.0;
    return AdaptionMatrix(a);
}

MacroState observe(const MicroState& state, int m_opinions) {
    MacroState x = MacroState::Zero(m_opinions);
    for (int op : state) {
        if (op < 1 || op > m_opinions) throw std::invalid_argument("opinion label out of range");
        x[op - 1] += 1.0;
    }
    return x / static_cast<double>(state.size());
}

MicroState step(const MicroState& state, const Network& net, const AdaptionMatrix& alpha,
                std::uint64_t seed, std::uint64_t realisation, std::uint64_t t) {
    const std::size_t n = state.size();
    if (n != net.n_agents()) throw std::invalid_argument("state size does not match network");
    MicroState next(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k =
            rng::bounded({seed, rng::kDynamics, realisation, t, i, 0}, net.degree(i));
        const std::size_t j = net.neighbor(i, k);
        const double u = rng::uniform({seed, rng::kDynamics, realisation, t, i, 1});
        const int self = state[i];
        const int other = state[j];
        next[i] = (u < alpha.alpha(self - 1, other - 1)) ? other : self;
    }
    return next;
}

double transition_probability(const MicroState& state, const Network& net,
                              const AdaptionMatrix& alpha, std::size_t agent, int target_opinion) {
    const int m = alpha.m_opinions();
    if (agent >= state.size()) throw std::invalid_argument("agent index out of range");
    if (target_opinion < 1 || target_opinion > m)
        throw std::invalid_argument("opinion label out of range");
    const int self = state[agent];
    const double deg = static_cast<double>(net.degree(agent));
    auto mass = [&](int op) {
        std::size_t count = 0;
        for (std::size_t k = 0; k < net.degree(agent); ++k)
            if (state[net.neighbor(agent, k)] == op) ++count;
        return alpha.alpha(self - 1, op - 1) * static_cast<double>(count) / deg;
    };
    if (target_opinion != self) return mass(target_opinion);
    double leave = 0.0;
    for (int op = 1; op <= m; ++op)
        if (op != self) leave += mass(op);
    return 1.0 - leave;
}

MicroState realize_initial_state(const InitSpec& init, const Network& net,
                                 const AdaptionMatrix& alpha, std::uint64_t seed) {
    const std::size_t n = net.n_agents();
    const int m = alpha.m_opinions();
    if (const auto* ex = std::get_if<InitExplicit>(&init)) {
        if (ex->state.size() != n) throw std::invalid_argument("explicit initial state has wrong size");
        for (int op : ex->state)
            if (op < 1 || op > m) throw std::invalid_argument("opinion label out of range");
        return ex->state;
    }
    if (const auto* gc = std::get_if<InitGlobalCounts>(&init)) {
        if (gc->percentages.size() != m)
            throw std::invalid_argument("initial percentages have wrong dimension");
        if (std::abs(gc->percentages.sum() - 1.0) > 1e-9)
            throw std::invalid_argument("initial percentages must sum to 1");
        // Exact counts: round each target, then settle the remainder on the
        // largest opinion; agents are assigned in contiguous blocks.
        std::vector<std::size_t> counts(static_cast<std::size_t>(m));
        std::size_t total = 0;
        Eigen::Index largest = 0;
        gc->percentages.maxCoeff(&largest);
        for (int op = 0; op < m; ++op) {
            counts[static_cast<std::size_t>(op)] =
                static_cast<std::size_t>(std::llround(gc->percentages[op] * static_cast<double>(n)));
            total += counts[static_cast<std::size_t>(op)];
        }
        counts[static_cast<std::size_t>(largest)] += n;
        counts[static_cast<std::size_t>(largest)] -= total;  // may adjust down as well
        MicroState state;
        state.reserve(n);
        for (int op = 0; op < m; ++op)
            state.insert(state.end(), counts[static_cast<std::size_t>(op)], op + 1);
        if (state.size() != n) throw std::invalid_argument("initial counts do not fit agent count");
        return state;
    }
    const auto& pc = std::get<InitPerCluster>(init);
    if (pc.distributions.size() != net.n_clusters())
        throw std::invalid_argument("one distribution per cluster required");
    MicroState state(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Eigen::VectorXd& d = pc.distributions[net.cluster_of(i)];
        if (d.size() != m) throw std::invalid_argument("cluster distribution has wrong dimension");
        if (std::abs(d.sum() - 1.0) > 1e-9)
            throw std::invalid_argument("cluster distribution must sum to 1");
        const double u = rng::uniform({seed, rng::kInitialState, 0, 0, i, 0});
        double acc = 0.0;
        int drawn = m;
        for (int op = 0; op < m; ++op) {
            acc += d[op];
            if (u < acc) { drawn = op + 1; break; }
        }
        state[i] = std::min(drawn, m);
    }
    return state;
}

SimulationResult simulate(const Network& net, const AdaptionMatrix& alpha, const InitSpec& init,
                          std::size_t T, std::size_t n_realisations, std::uint64_t seed,
                          bool keep_micro) {
    const MicroState x0 = realize_initial_state(init, net, alpha, seed);
    const int m = alpha.m_opinions();
    SimulationResult out;
    out.macro.resize(n_realisations);
    if (keep_micro) out.micro.resize(n_realisations);
    for (std::size_t r = 0; r < n_realisations; ++r) {
        MicroState state = x0;
        MacroTrajectory traj;
        traj.reserve(T + 1);
        traj.push_back(observe(state, m));
        MicroTrajectory mt;
        if (keep_micro) mt.push_back(state);
        for (std::size_t t = 0; t < T; ++t) {
            state = step(state, net, alpha, seed, r, t);
            traj.push_back(observe(state, m));
            if (keep_micro) mt.push_back(state);
        }
        out.macro[r] = std::move(traj);
        if (keep_micro) out.micro[r] = std::move(mt);
    }
    return out;
}

}  // namespace nar
