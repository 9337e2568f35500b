#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lapctl {

using NodeId = std::int32_t;

/// Undirected edge, stored with the smaller label first.
struct Edge {
    NodeId a;
    NodeId b;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(NodeId i, NodeId j);

/// Undirected simple graph on a fixed node set {0, ..., n-1}.
///
/// Value type: copies are independent. Adjacency lists are kept sorted so
/// iteration order is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int node_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    bool has_node(NodeId v) const;
    bool has_edge(NodeId i, NodeId j) const;

    // Throws std::invalid_argument on self-loops, duplicates, missing edges
    // or out-of-range labels.
    void add_edge(NodeId i, NodeId j);
    void remove_edge(NodeId i, NodeId j);
    void toggle_edge(NodeId i, NodeId j);

    int degree(NodeId v) const;
    const std::vector<NodeId>& neighbors(NodeId v) const;

    /// All edges as (a, b) with a < b, lexicographically sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_node(NodeId v) const;

    std::vector<std::vector<NodeId>> adj_;
    int edge_count_ = 0;
};

/// Induced subgraph of everything within `radius` hops of `center`
/// (the center itself included), with all edges between those nodes.
struct LocalView {
    NodeId center = 0;
    int radius = 0;
    std::vector<NodeId> nodes;  // sorted, original labels
    std::vector<Edge> edges;    // sorted

    bool contains(NodeId v) const;
    bool has_edge(NodeId i, NodeId j) const;
    /// Neighbors of v using only edges inside the view.
    std::vector<NodeId> neighbors_in_view(NodeId v) const;
};

/// Nodes within `radius` hops of v, including v itself.
std::vector<NodeId> neighborhood(const Graph& g, NodeId v, int radius);

LocalView local_subgraph(const Graph& g, NodeId v, int radius);

/// Number of distinct 3-cycles through v.
long long triangles_at(const Graph& g, NodeId v);

/// Number of distinct 4-cycles through v (no repeated intermediate nodes).
long long quadrangles_at(const Graph& g, NodeId v);

/// |N(i) ∩ N(j)|, endpoints excluded. i and j need not be adjacent.
long long common_neighbors(const Graph& g, NodeId i, NodeId j);

/// Sum of the degrees of v's neighbors (v itself not counted).
long long neighbor_degree_sum(const Graph& g, NodeId v);

bool is_connected(const Graph& g);

/// True iff removing (i, j) leaves the graph connected.
bool deletion_keeps_connected(const Graph& g, NodeId i, NodeId j);

}  // namespace lapctl
