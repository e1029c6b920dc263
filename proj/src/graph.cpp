#include "localspectral/graph.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace lsp {

Graph Graph::build(std::size_t node_count, std::vector<WeightedEdge> edges,
                   std::vector<std::string> labels) {
    if (node_count == 0) throw InputError("graph has no nodes");
    if (!labels.empty() && labels.size() != node_count)
        throw InputError("label list size does not match node count");

    std::map<std::pair<NodeId, NodeId>, double> merged;
    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 ||
            static_cast<std::size_t>(e.u) >= node_count ||
            static_cast<std::size_t>(e.v) >= node_count)
            throw InputError("edge endpoint out of range");
        if (e.u == e.v)
            throw InputError("self-loop at node " + std::to_string(e.u));
        if (!(e.w > 0.0))
            throw InputError("non-positive edge weight");
        auto key = std::minmax(e.u, e.v);
        merged[{key.first, key.second}] += e.w;
    }

    Graph g;
    g.degrees_ = Vector::Zero(static_cast<Eigen::Index>(node_count));
    g.edges_.reserve(merged.size());
    std::vector<std::size_t> counts(node_count, 0);
    for (const auto& [key, w] : merged) {
        g.edges_.push_back({key.first, key.second, w});
        g.degrees_[key.first] += w;
        g.degrees_[key.second] += w;
        ++counts[key.first];
        ++counts[key.second];
    }
    g.total_volume_ = g.degrees_.sum();

    g.offsets_.assign(node_count + 1, 0);
    for (std::size_t i = 0; i < node_count; ++i)
        g.offsets_[i + 1] = g.offsets_[i] + counts[i];
    g.adjacency_.resize(g.offsets_.back());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& e : g.edges_) {
        g.adjacency_[fill[e.u]++] = {e.v, e.w};
        g.adjacency_[fill[e.v]++] = {e.u, e.w};
    }

    // connectivity check (BFS); every theorem downstream assumes it
    std::vector<char> seen(node_count, 0);
    std::vector<NodeId> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        NodeId u = queue.back();
        queue.pop_back();
        for (const auto& nb : g.neighbors(u)) {
            if (!seen[nb.node]) {
                seen[nb.node] = 1;
                ++reached;
                queue.push_back(nb.node);
            }
        }
    }
    if (reached != node_count) {
        std::size_t other = node_count - reached;
        throw InputError("graph is disconnected (component sizes " +
                         std::to_string(reached) + " and " +
                         std::to_string(other) + " or smaller)");
    }

    if (labels.empty()) {
        labels.reserve(node_count);
        for (std::size_t i = 0; i < node_count; ++i)
            labels.push_back(std::to_string(i));
    }
    g.labels_ = std::move(labels);
    return g;
}

NodeId Graph::node_by_label(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<NodeId>(i);
    throw InputError("unknown node label '" + label + "'");
}

bool Cut::same_partition(const Cut& other, std::size_t node_count) const {
    if (members == other.members) return true;
    if (members.size() + other.members.size() != node_count) return false;
    std::vector<char> mask(node_count, 0);
    for (NodeId u : members) mask[u] = 1;
    for (NodeId u : other.members)
        if (mask[u]) return false;
    return true;
}

namespace {

std::vector<char> to_mask(const Graph& g, std::span<const NodeId> node_set) {
    std::vector<char> mask(g.node_count(), 0);
    for (NodeId u : node_set) {
        if (u < 0 || static_cast<std::size_t>(u) >= g.node_count())
            throw InputError("unknown node id " + std::to_string(u));
        mask[u] = 1;
    }
    return mask;
}

Cut cut_from_mask(const Graph& g, const std::vector<char>& mask) {
    Cut c;
    c.graph_volume = g.total_volume();
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) {
            c.members.push_back(static_cast<NodeId>(i));
            c.volume += g.degrees()[static_cast<Eigen::Index>(i)];
        }
    }
    if (c.members.empty() || c.members.size() == g.node_count())
        throw DomainError("degenerate cut: set must be nonempty and proper");
    for (const auto& e : g.edges())
        if (mask[e.u] != mask[e.v]) c.cut_weight += e.w;
    c.conductance = c.graph_volume * c.cut_weight /
                    (c.volume * (c.graph_volume - c.volume));
    return c;
}

}  // namespace

double volume(const Graph& g, std::span<const NodeId> node_set) {
    auto mask = to_mask(g, node_set);
    double vol = 0.0;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) vol += g.degrees()[static_cast<Eigen::Index>(i)];
    return vol;
}

Cut conductance(const Graph& g, std::span<const NodeId> node_set) {
    return cut_from_mask(g, to_mask(g, node_set));
}

Cut min_conductance_brute(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n > 20)
        throw InputError("min_conductance_brute refuses n > 20 (got " +
                         std::to_string(n) + ")");
    if (n < 2) throw DomainError("no proper cut exists");
    Cut best;
    best.conductance = std::numeric_limits<double>::infinity();
    // node n-1 pinned to the complement side: each partition visited once
    const std::uint32_t limit = 1u << (n - 1);
    std::vector<char> mask(n, 0);
    for (std::uint32_t bits = 1; bits < limit; ++bits) {
        for (std::size_t i = 0; i + 1 < n; ++i) mask[i] = (bits >> i) & 1u;
        Cut c = cut_from_mask(g, mask);
        if (c.conductance < best.conductance) best = std::move(c);
    }
    return best;
}

double laplacian_quadratic(const Graph& g, const Vector& x) {
    if (static_cast<std::size_t>(x.size()) != g.node_count())
        throw InputError("vector length does not match node count");
    double q = 0.0;
    for (const auto& e : g.edges()) {
        const double diff = x[e.u] - x[e.v];
        q += e.w * diff * diff;
    }
    return q;
}

Vector apply_laplacian(const Graph& g, const Vector& x) {
    if (static_cast<std::size_t>(x.size()) != g.node_count())
        throw InputError("vector length does not match node count");
    Vector y = g.degrees().cwiseProduct(x);
    for (NodeId u = 0; static_cast<std::size_t>(u) < g.node_count(); ++u)
        for (const auto& nb : g.neighbors(u)) y[u] -= nb.weight * x[nb.node];
    return y;
}

double d_inner(const Graph& g, const Vector& x, const Vector& y) {
    if (static_cast<std::size_t>(x.size()) != g.node_count() ||
        static_cast<std::size_t>(y.size()) != g.node_count())
        throw InputError("vector length does not match node count");
    return (x.array() * y.array() * g.degrees().array()).sum();
}

}  // namespace lsp
