#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nar {

// Interaction topology for the agent model. Complete blocks (the whole network,
// or each cluster) are stored implicitly so N=5000 stays cheap; only the sparse
// inter-cluster links are materialised, as per-agent sorted lists. Every agent
// is its own neighbour. Immutable after construction.
class Network {
public:
    static Network complete(std::size_t n_agents);
    // Equal-size contiguous clusters, all intra-cluster pairs connected, each
    // inter-cluster pair connected independently with probability p_between.
    // Deterministic in seed (one uniform per ordered pair i<j across clusters).
    static Network clustered(std::size_t n_agents, std::size_t n_clusters, double p_between,
                             std::uint64_t seed);

    std::size_t n_agents() const { return n_; }
    std::size_t n_clusters() const { return cluster_starts_.empty() ? 1 : cluster_starts_.size() - 1; }
    bool has_clusters() const { return !cluster_starts_.empty(); }
    std::size_t cluster_of(std::size_t agent) const;

    std::size_t degree(std::size_t agent) const;
    // k-th neighbour of `agent`, k in [0, degree(agent)): the agent's complete
    // block in index order, then its sorted extra links.
    std::size_t neighbor(std::size_t agent, std::size_t k) const;
    bool is_neighbor(std::size_t i, std::size_t j) const;
    std::vector<std::size_t> neighbors(std::size_t agent) const;  // sorted

    std::size_t n_inter_cluster_edges() const { return extra_targets_.size() / 2; }

    // Dense boolean adjacency, for tests on small networks.
    std::vector<std::vector<bool>> dense_adjacency() const;

    // Edge list "i j" (1-based, i<j), self-loops omitted and re-added on load.
    void save_edge_list(const std::string& path) const;
    static Network load_edge_list(const std::string& path);

private:
    Network() = default;
    std::size_t block_start(std::size_t agent) const;
    std::size_t block_size(std::size_t agent) const;

    std::size_t n_ = 0;
    std::vector<std::size_t> cluster_starts_;   // size n_clusters+1; empty for complete networks
    std::vector<std::size_t> extra_offsets_;    // CSR over extra (inter-cluster) links
    std::vector<std::size_t> extra_targets_;    // sorted per agent
};

}  // namespace nar
