#include "nar/network.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "nar/rng.hpp"

namespace nar {

Network Network::complete(std::size_t n_agents) {
    if (n_agents == 0) throw std::invalid_argument("network needs at least one agent");
    Network net;
    net.n_ = n_agents;
    net.extra_offsets_.assign(n_agents + 1, 0);
    return net;
}

Network Network::clustered(std::size_t n_agents, std::size_t n_clusters, double p_between,
                           std::uint64_t seed) {
    if (n_agents == 0) throw std::invalid_argument("network needs at least one agent");
    if (n_clusters == 0 || n_agents % n_clusters != 0)
        throw std::invalid_argument("cluster count must divide agent count");
    if (p_between < 0.0 || p_between > 1.0)
        throw std::invalid_argument("p_between must lie in [0,1]");

    Network net;
    net.n_ = n_agents;
    const std::size_t size = n_agents / n_clusters;
    net.cluster_starts_.resize(n_clusters + 1);
    for (std::size_t c = 0; c <= n_clusters; ++c) net.cluster_starts_[c] = c * size;

    // One uniform per ordered pair (i<j) in different clusters; the pair indices
    // key the draw so the wiring is independent of iteration order.
    std::vector<std::vector<std::size_t>> extras(n_agents);
    for (std::size_t i = 0; i < n_agents; ++i) {
        const std::size_t ci = i / size;
        for (std::size_t j = (ci + 1) * size; j < n_agents; ++j) {
            if (rng::uniform({seed, rng::kNetwork, 0, 0, i, j}) < p_between) {
                extras[i].push_back(j);
                extras[j].push_back(i);
            }
        }
    }
    net.extra_offsets_.resize(n_agents + 1);
    net.extra_offsets_[0] = 0;
    for (std::size_t i = 0; i < n_agents; ++i) {
        std::sort(extras[i].begin(), extras[i].end());
        net.extra_offsets_[i + 1] = net.extra_offsets_[i] + extras[i].size();
        net.extra_targets_.insert(net.extra_targets_.end(), extras[i].begin(), extras[i].end());
    }
    return net;
}

std::size_t Network::cluster_of(std::size_t agent) const {
    if (agent >= n_) throw std::invalid_argument("agent index out of range");
    if (cluster_starts_.empty()) return 0;
    const std::size_t size = cluster_starts_[1];
    return agent / size;
}

std::size_t Network::block_start(std::size_t agent) const {
    if (cluster_starts_.empty()) return 0;
    return cluster_starts_[cluster_of(agent)];
}

std::size_t Network::block_size(std::size_t agent) const {
    if (cluster_starts_.empty()) return n_;
    (void)agent;
    return cluster_starts_[1];
}

std::size_t Network::degree(std::size_t agent) const {
    if (agent >= n_) throw std::invalid_argument("agent index out of range");
    return block_size(agent) + (extra_offsets_[agent + 1] - extra_offsets_[agent]);
}

std::size_t Network::neighbor(std::size_t agent, std::size_t k) const {
    const std::size_t bs = block_size(agent);
    if (k < bs) return block_start(agent) + k;
    const std::size_t e = extra_offsets_[agent] + (k - bs);
    if (e >= extra_offsets_[agent + 1]) throw std::invalid_argument("neighbor index out of range");
    return extra_targets_[e];
}

bool Network::is_neighbor(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::invalid_argument("agent index out of range");
    if (cluster_starts_.empty() || cluster_of(i) == cluster_of(j)) return true;
    const auto begin = extra_targets_.begin() + static_cast<std::ptrdiff_t>(extra_offsets_[i]);
    const auto end = extra_targets_.begin() + static_cast<std::ptrdiff_t>(extra_offsets_[i + 1]);
    return std::binary_search(begin, end, j);
}

std::vector<std::size_t> Network::neighbors(std::size_t agent) const {
    std::vector<std::size_t> out;
    const std::size_t d = degree(agent);
    out.reserve(d);
    for (std::size_t k = 0; k < d; ++k) out.push_back(neighbor(agent, k));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<bool>> Network::dense_adjacency() const {
    std::vector<std::vector<bool>> a(n_, std::vector<bool>(n_, false));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < degree(i); ++k) a[i][neighbor(i, k)] = true;
    return a;
}

void Network::save_edge_list(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < degree(i); ++k) {
            const std::size_t j = neighbor(i, k);
            if (j > i) out << (i + 1) << ' ' << (j + 1) << '\n';
        }
    if (!out) throw std::runtime_error("write failed: " + path);
}

Network Network::load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::size_t i, j, n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    while (in >> i >> j) {
        if (i == 0 || j == 0) throw std::runtime_error("edge list is 1-based: " + path);
        edges.emplace_back(i - 1, j - 1);
        n = std::max(n, std::max(i, j));
    }
    // Rebuilt as a single "cluster" covering nothing, with every edge explicit:
    // represent as n one-agent clusters plus all edges as extras, so generic
    // loaded graphs round-trip (self-loops implicit via the one-agent blocks).
    Network net;
    net.n_ = n;
    net.cluster_starts_.resize(n + 1);
    for (std::size_t c = 0; c <= n; ++c) net.cluster_starts_[c] = c;
    std::vector<std::set<std::size_t>> extras(n);
    for (const auto& [a, b] : edges) {
        if (a == b) continue;  // self-loops are implicit
        extras[a].insert(b);
        extras[b].insert(a);
    }
    net.extra_offsets_.resize(n + 1);
    net.extra_offsets_[0] = 0;
    for (std::size_t v = 0; v < n; ++v) {
        net.extra_offsets_[v + 1] = net.extra_offsets_[v] + extras[v].size();
        net.extra_targets_.insert(net.extra_targets_.end(), extras[v].begin(), extras[v].end());
    }
    return net;
}

}  // namespace nar
