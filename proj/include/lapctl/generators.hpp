#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lapctl/graph.hpp"

namespace lapctl {

enum class GraphKind {
    Star,
    TwoStars,
    Chain,
    Ring,
    SmallWorld,
    RandomConnected,
};

std::optional<GraphKind> parse_graph_kind(const std::string& name);
std::string graph_kind_name(GraphKind kind);

/// Hub is node 0, leaves 1..n-1.
Graph make_star(int n);

/// Two stars on n/2 nodes each (hubs 0 and n/2), hubs joined by an edge.
/// n must be even and >= 4.
Graph make_two_stars(int n);

/// Path 0-1-...-(n-1).
Graph make_chain(int n);

/// Cycle 0-1-...-(n-1)-0. n >= 3.
Graph make_ring(int n);

/// Ring lattice where every node is joined to its 3-hop ring neighborhood
/// (degree 6), then each lattice edge's far endpoint is rewired with
/// probability p to a uniformly random non-neighbor. Draws are discarded and
/// re-seeded until the result is connected. Deterministic for a fixed seed.
Graph make_small_world(int n, double p, std::uint64_t seed);

/// Erdos-Renyi with edge probability 2*ln(n)/n, resampled until connected.
Graph make_random_connected(int n, std::uint64_t seed);

struct GenParams {
    double p = 0.0;  // small-world rewiring probability
};

/// Dispatch by kind. `seed` is ignored by the deterministic kinds.
Graph generate(GraphKind kind, int n, const GenParams& params, std::uint64_t seed);

}  // namespace lapctl
