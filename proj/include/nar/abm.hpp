#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "nar/network.hpp"

namespace nar {

// Opinion-adoption probabilities alpha(m', m''): probability that an agent
// holding m' adopts a chosen neighbour's opinion m''. Diagonal is stored as 0
// and never read (adopting one's own opinion is a no-op).
struct AdaptionMatrix {
    Eigen::MatrixXd alpha;

    explicit AdaptionMatrix(Eigen::MatrixXd a);
    int m_opinions() const { return static_cast<int>(alpha.rows()); }

    // The 3-opinion matrix used by the bundled experiment configs.
    static AdaptionMatrix reference3();
};

using MicroState = std::vector<int>;                 // opinions in 1..M
using MicroTrajectory = std::vector<MicroState>;
using MacroState = Eigen::VectorXd;                  // opinion percentages
using MacroTrajectory = std::vector<MacroState>;

// Initial-state specification: an explicit micro state, global target
// percentages realised by exact counts, or per-cluster opinion distributions
// sampled i.i.d. within each cluster.
struct InitExplicit { MicroState state; };
struct InitGlobalCounts { Eigen::VectorXd percentages; };
struct InitPerCluster { std::vector<Eigen::VectorXd> distributions; };
using InitSpec = std::variant<InitExplicit, InitGlobalCounts, InitPerCluster>;

MacroState observe(const MicroState& state, int m_opinions);

// One synchronous step of the opinion-change dynamics: every agent i draws a
// neighbour j uniformly (self included) and u~U[0,1], and adopts X_j iff
// u < alpha(X_i, X_j). All draws are keyed by (seed, realisation, t, agent).
MicroState step(const MicroState& state, const Network& net, const AdaptionMatrix& alpha,
                std::uint64_t seed, std::uint64_t realisation, std::uint64_t t);

// p_i^t(m', m'') for the current state: alpha(m',m'') * (#neighbours with m'')/degree(i)
// for m'' != m', and the complementary mass for m'' = m'.
double transition_probability(const MicroState& state, const Network& net,
                              const AdaptionMatrix& alpha, std::size_t agent, int target_opinion);

MicroState realize_initial_state(const InitSpec& init, const Network& net,
                                 const AdaptionMatrix& alpha, std::uint64_t seed);

struct SimulationResult {
    std::vector<MacroTrajectory> macro;                       // one per realisation
    std::vector<MicroTrajectory> micro;                       // filled only if requested
};

// n_realisations trajectories of length T+1 from one shared initial state and
// one shared network; realisation k is reproducible in isolation from (seed, k).
SimulationResult simulate(const Network& net, const AdaptionMatrix& alpha, const InitSpec& init,
                          std::size_t T, std::size_t n_realisations, std::uint64_t seed,
                          bool keep_micro = false);

}  // namespace nar
