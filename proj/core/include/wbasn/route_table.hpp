#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wbasn/model.hpp"

namespace wbasn {

/// One candidate path from a node to the sink.
struct Route {
    std::vector<NodeId> path; // simple; path.front() is the owner, path.back() the sink
    int hop_count = 0;        // path.size() - 1
    /// Network debit for one payload along the path: a transmit per hop plus
    /// a receive per intermediate node (the sink's receive costs nothing).
    double energy_cost_j = 0.0;
};

/// Neighbor sets, BFS hop counts from the sink, and per-node candidate
/// routes, as learned from the most recent hello flood. hops_to_sink is
/// empty for unreachable nodes; such nodes fall back to full-power direct
/// transmission when they must send.
struct RouteTable {
    std::vector<std::vector<NodeId>> neighbors;
    std::vector<std::optional<int>> hops_to_sink;
    std::vector<std::vector<Route>> candidates; // one per downhill neighbor

    bool reachable(NodeId id) const {
        return id < hops_to_sink.size() && hops_to_sink[id].has_value();
    }
};

/// The route-selection rule: fewest hops, then least energy to the sink,
/// then lexicographically smallest path as the deterministic tie-break.
/// Returns nullptr when `candidates` is empty (NoRoute).
const Route* select_route(std::span<const Route> candidates);

/// What dispatch decided to do with one packet.
struct TransmissionPlan {
    enum class Kind { DirectToSink, MultiHop };
    Kind kind = Kind::DirectToSink;
    Route route; // used when kind == MultiHop
};

} // namespace wbasn
