#include "lapctl/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace lapctl {

Edge make_edge(NodeId i, NodeId j) {
    return i < j ? Edge{i, j} : Edge{j, i};
}

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph: negative node count");
    adj_.resize(static_cast<std::size_t>(n));
}

bool Graph::has_node(NodeId v) const {
    return v >= 0 && v < node_count();
}

void Graph::check_node(NodeId v) const {
    if (!has_node(v)) {
        throw std::invalid_argument("graph: unknown node " + std::to_string(v));
    }
}

bool Graph::has_edge(NodeId i, NodeId j) const {
    check_node(i);
    check_node(j);
    const auto& ni = adj_[static_cast<std::size_t>(i)];
    return std::binary_search(ni.begin(), ni.end(), j);
}

void Graph::add_edge(NodeId i, NodeId j) {
    check_node(i);
    check_node(j);
    if (i == j) throw std::invalid_argument("graph: self-loop rejected");
    if (has_edge(i, j)) throw std::invalid_argument("graph: duplicate edge rejected");
    auto& ni = adj_[static_cast<std::size_t>(i)];
    auto& nj = adj_[static_cast<std::size_t>(j)];
    ni.insert(std::lower_bound(ni.begin(), ni.end(), j), j);
    nj.insert(std::lower_bound(nj.begin(), nj.end(), i), i);
    ++edge_count_;
}

void Graph::remove_edge(NodeId i, NodeId j) {
    check_node(i);
    check_node(j);
    if (!has_edge(i, j)) throw std::invalid_argument("graph: edge absent");
    auto& ni = adj_[static_cast<std::size_t>(i)];
    auto& nj = adj_[static_cast<std::size_t>(j)];
    ni.erase(std::lower_bound(ni.begin(), ni.end(), j));
    nj.erase(std::lower_bound(nj.begin(), nj.end(), i));
    --edge_count_;
}

void Graph::toggle_edge(NodeId i, NodeId j) {
    if (has_edge(i, j)) {
        remove_edge(i, j);
    } else {
        add_edge(i, j);
    }
}

int Graph::degree(NodeId v) const {
    check_node(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

const std::vector<NodeId>& Graph::neighbors(NodeId v) const {
    check_node(v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (NodeId v = 0; v < node_count(); ++v) {
        for (NodeId w : adj_[static_cast<std::size_t>(v)]) {
            if (v < w) out.push_back(Edge{v, w});
        }
    }
    return out;
}

bool LocalView::contains(NodeId v) const {
    return std::binary_search(nodes.begin(), nodes.end(), v);
}

bool LocalView::has_edge(NodeId i, NodeId j) const {
    return std::binary_search(edges.begin(), edges.end(), make_edge(i, j));
}

std::vector<NodeId> LocalView::neighbors_in_view(NodeId v) const {
    std::vector<NodeId> out;
    for (const Edge& e : edges) {
        if (e.a == v) out.push_back(e.b);
        if (e.b == v) out.push_back(e.a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeId> neighborhood(const Graph& g, NodeId v, int radius) {
    if (!g.has_node(v)) throw std::invalid_argument("neighborhood: unknown node");
    if (radius < 0) throw std::invalid_argument("neighborhood: negative radius");
    std::vector<int> dist(static_cast<std::size_t>(g.node_count()), -1);
    std::queue<NodeId> q;
    dist[static_cast<std::size_t>(v)] = 0;
    q.push(v);
    std::vector<NodeId> out;
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        out.push_back(u);
        if (dist[static_cast<std::size_t>(u)] == radius) continue;
        for (NodeId w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LocalView local_subgraph(const Graph& g, NodeId v, int radius) {
    LocalView view;
    view.center = v;
    view.radius = radius;
    view.nodes = neighborhood(g, v, radius);
    for (NodeId a : view.nodes) {
        for (NodeId b : g.neighbors(a)) {
            if (a < b && std::binary_search(view.nodes.begin(), view.nodes.end(), b)) {
                view.edges.push_back(Edge{a, b});
            }
        }
    }
    std::sort(view.edges.begin(), view.edges.end());
    return view;
}

long long triangles_at(const Graph& g, NodeId v) {
    const auto& nb = g.neighbors(v);
    long long count = 0;
    for (std::size_t x = 0; x < nb.size(); ++x) {
        for (std::size_t y = x + 1; y < nb.size(); ++y) {
            if (g.has_edge(nb[x], nb[y])) ++count;
        }
    }
    return count;
}

long long quadrangles_at(const Graph& g, NodeId v) {
    // A 4-cycle through v is v-a-x-b-v with {a,b} distinct neighbors of v
    // and x a common neighbor of a and b other than v.
    const auto& nb = g.neighbors(v);
    long long count = 0;
    for (std::size_t x = 0; x < nb.size(); ++x) {
        for (std::size_t y = x + 1; y < nb.size(); ++y) {
            // v is always a common neighbor of the pair; the cycle needs a distinct one.
            count += common_neighbors(g, nb[x], nb[y]) - 1;
        }
    }
    return count;
}

long long common_neighbors(const Graph& g, NodeId i, NodeId j) {
    if (i == j) throw std::invalid_argument("common_neighbors: identical nodes");
    const auto& ni = g.neighbors(i);
    const auto& nj = g.neighbors(j);
    long long count = 0;
    std::size_t a = 0, b = 0;
    while (a < ni.size() && b < nj.size()) {
        if (ni[a] == nj[b]) {
            if (ni[a] != i && ni[a] != j) ++count;
            ++a;
            ++b;
        } else if (ni[a] < nj[b]) {
            ++a;
        } else {
            ++b;
        }
    }
    return count;
}

long long neighbor_degree_sum(const Graph& g, NodeId v) {
    long long sum = 0;
    for (NodeId w : g.neighbors(v)) sum += g.degree(w);
    return sum;
}

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("is_connected: empty graph");
    return static_cast<int>(neighborhood(g, 0, g.node_count()).size()) == g.node_count();
}

bool deletion_keeps_connected(const Graph& g, NodeId i, NodeId j) {
    Graph h = g;
    h.remove_edge(i, j);
    return is_connected(h);
}

}  // namespace lapctl
