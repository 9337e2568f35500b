#include "lapctl/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace lapctl {

namespace {

// uniform_int_distribution is implementation-defined; use rejection sampling
// so that identical seeds reproduce identical graphs on any toolchain.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::optional<GraphKind> parse_graph_kind(const std::string& name) {
    if (name == "star") return GraphKind::Star;
    if (name == "two_stars") return GraphKind::TwoStars;
    if (name == "chain") return GraphKind::Chain;
    if (name == "ring") return GraphKind::Ring;
    if (name == "small_world") return GraphKind::SmallWorld;
    if (name == "random_connected") return GraphKind::RandomConnected;
    return std::nullopt;
}

std::string graph_kind_name(GraphKind kind) {
    switch (kind) {
        case GraphKind::Star: return "star";
        case GraphKind::TwoStars: return "two_stars";
        case GraphKind::Chain: return "chain";
        case GraphKind::Ring: return "ring";
        case GraphKind::SmallWorld: return "small_world";
        case GraphKind::RandomConnected: return "random_connected";
    }
    return "?";
}

Graph make_star(int n) {
    if (n < 2) throw std::invalid_argument("star: need n >= 2");
    Graph g(n);
    for (NodeId v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph make_two_stars(int n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("two_stars: need even n >= 4");
    const int half = n / 2;
    Graph g(n);
    for (NodeId v = 1; v < half; ++v) g.add_edge(0, v);
    for (NodeId v = half + 1; v < n; ++v) g.add_edge(half, v);
    g.add_edge(0, half);
    return g;
}

Graph make_chain(int n) {
    if (n < 2) throw std::invalid_argument("chain: need n >= 2");
    Graph g(n);
    for (NodeId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_ring(int n) {
    if (n < 3) throw std::invalid_argument("ring: need n >= 3");
    Graph g(n);
    for (NodeId v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph make_small_world(int n, double p, std::uint64_t seed) {
    if (n < 8) throw std::invalid_argument("small_world: need n >= 8");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("small_world: p outside [0,1]");
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::seed_seq sq{seed, attempt};
        std::mt19937_64 rng(sq);
        Graph g(n);
        for (int offset = 1; offset <= 3; ++offset) {
            for (NodeId v = 0; v < n; ++v) g.add_edge(v, (v + offset) % n);
        }
        // Rewire lattice edges in a canonical order: for each offset, each node,
        // replace the far endpoint with probability p.
        for (int offset = 1; offset <= 3; ++offset) {
            for (NodeId v = 0; v < n; ++v) {
                NodeId far = (v + offset) % n;
                if (uniform_unit(rng) >= p) continue;
                if (!g.has_edge(v, far)) continue;  // already rewired away
                if (g.degree(v) == n - 1) continue;
                NodeId w;
                do {
                    w = static_cast<NodeId>(uniform_below(rng, static_cast<std::uint64_t>(n)));
                } while (w == v || g.has_edge(v, w));
                g.remove_edge(v, far);
                g.add_edge(v, w);
            }
        }
        if (is_connected(g)) return g;
    }
}

Graph make_random_connected(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_connected: need n >= 2");
    const double p = std::min(1.0, 2.0 * std::log(n) / n);
    std::seed_seq sq{seed, std::uint64_t{0x9e3779b97f4a7c15ULL}};
    std::mt19937_64 rng(sq);
    for (;;) {
        Graph g(n);
        for (NodeId i = 0; i < n; ++i) {
            for (NodeId j = i + 1; j < n; ++j) {
                if (uniform_unit(rng) < p) g.add_edge(i, j);
            }
        }
        if (is_connected(g)) return g;
    }
}

Graph generate(GraphKind kind, int n, const GenParams& params, std::uint64_t seed) {
    switch (kind) {
        case GraphKind::Star: return make_star(n);
        case GraphKind::TwoStars: return make_two_stars(n);
        case GraphKind::Chain: return make_chain(n);
        case GraphKind::Ring: return make_ring(n);
        case GraphKind::SmallWorld: return make_small_world(n, params.p, seed);
        case GraphKind::RandomConnected: return make_random_connected(n, seed);
    }
    throw std::invalid_argument("generate: unknown kind");
}

}  // namespace lapctl
