#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "localspectral/errors.hpp"

namespace lsp {

using NodeId = int;
using Vector = Eigen::VectorXd;

struct WeightedEdge {
    NodeId u;
    NodeId v;
    double w = 1.0;
};

/// One endpoint of the adjacency list together with its edge weight.
struct Neighbor {
    NodeId node;
    double weight;
};

/// Immutable connected weighted undirected graph.
///
/// Node ids are dense integers 0..n-1. Construction merges parallel edges by
/// weight summation, rejects self-loops and non-positive weights, and fails
/// on disconnected input. Degrees and total volume are precomputed. Instances
/// are safe to share across threads.
class Graph {
  public:
    static Graph build(std::size_t node_count, std::vector<WeightedEdge> edges,
                       std::vector<std::string> labels = {});

    std::size_t node_count() const { return degrees_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Canonical edge list: each undirected edge once, u < v, merged weights.
    const std::vector<WeightedEdge>& edges() const { return edges_; }

    double degree(NodeId u) const { return degrees_[check(u)]; }
    const Vector& degrees() const { return degrees_; }

    /// vol(G) = sum of all weighted degrees (2m for unit weights).
    double total_volume() const { return total_volume_; }

    std::span<const Neighbor> neighbors(NodeId u) const {
        check(u);
        return {adjacency_.data() + offsets_[u],
                adjacency_.data() + offsets_[u + 1]};
    }

    const std::string& label(NodeId u) const { return labels_[check(u)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Resolve an original label back to its dense id; InputError if unknown.
    NodeId node_by_label(const std::string& label) const;

  private:
    Graph() = default;
    NodeId check(NodeId u) const {
        if (u < 0 || static_cast<std::size_t>(u) >= degrees_.size())
            throw InputError("unknown node id " + std::to_string(u));
        return u;
    }

    std::vector<WeightedEdge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adjacency_;
    Vector degrees_;
    double total_volume_ = 0.0;
    std::vector<std::string> labels_;
};

/// A two-sided partition (S, S-bar) with its conductance data.
struct Cut {
    std::vector<NodeId> members;  // sorted ascending
    double volume = 0.0;          // vol(S)
    double cut_weight = 0.0;      // w(E(S, S-bar))
    double conductance = 0.0;     // vol(G) * cut / (vol(S) * vol(S-bar))
    double graph_volume = 0.0;

    /// Min-volume conductance variant, cut / min(vol(S), vol(S-bar)).
    /// Exposed read-only for comparison with other tools.
    double min_volume_conductance() const {
        return cut_weight / std::min(volume, graph_volume - volume);
    }

    /// True when the two cuts describe the same partition {S, S-bar}.
    bool same_partition(const Cut& other, std::size_t node_count) const;
};

/// Weighted degree sum of a node set; volume(V) = vol(G).
double volume(const Graph& g, std::span<const NodeId> node_set);

/// Cut data of a nonempty proper subset, using the vol(G)-scaled conductance.
Cut conductance(const Graph& g, std::span<const NodeId> node_set);

/// Exact minimum-conductance cut by enumerating all 2^(n-1)-1 proper cuts.
/// Test oracle; refuses n > 20.
Cut min_conductance_brute(const Graph& g);

/// x^T L x = sum over edges of w_ij (x_i - x_j)^2.
double laplacian_quadratic(const Graph& g, const Vector& x);

/// Matrix-free L*x.
Vector apply_laplacian(const Graph& g, const Vector& x);

/// Degree-weighted inner product x^T D y.
double d_inner(const Graph& g, const Vector& x, const Vector& y);

}  // namespace lsp
