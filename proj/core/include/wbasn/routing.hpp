#pragma once

#include <optional>

#include "wbasn/sim_state.hpp"

namespace wbasn {

/// Link usable for data forwarding right now: both endpoints alive, within
/// both radios' normal range, and not hot-spot-marked in this direction.
bool link_usable(const SimState& s, NodeId from, NodeId to);

/// Hello flood: every alive node broadcasts once at its normal range and
/// hears each neighbor, paying the radio cost of a hello-sized message for
/// each event. Hop counts are BFS distances from the sink over the
/// geometric graph (edge iff distance <= both endpoints' normal range);
/// candidate routes are the per-downhill-neighbor shortest paths.
RouteTable hello_flood(SimState& s);

/// Recompute a single node's neighbors, hop count and candidates in the
/// existing table (used after a mobility re-join; no network-wide flood).
void refresh_node_routes(SimState& s, NodeId id);

/// The node's stored candidates filtered down to routes whose every link is
/// usable now, with energy costs recomputed from current positions.
std::vector<Route> usable_candidates(const SimState& s, NodeId id);

struct DispatchResult {
    std::optional<TransmissionPlan> plan;
    std::optional<LossReason> loss; // set when no plan could be formed
};

/// Traffic-class dispatch: Critical and OnDemand packets go direct to the
/// sink at full power; Normal packets take the selected multi-hop route,
/// falling back to full-power direct only when the protocol escalates on
/// NoRoute. Cluster heads send their own normal data direct for the round.
DispatchResult dispatch(SimState& s, const Packet& packet);

struct DeliveryOutcome {
    bool delivered = false;
    LossReason loss_reason = LossReason::NoRoute; // valid when !delivered
};

/// Walk the plan hop by hop, spending transmit/receive energy, accruing
/// heat, honoring hot-spot probes and re-routing or escalating as the
/// protocol allows. The packet's hop_trace is completed in place.
DeliveryOutcome execute_plan(SimState& s, Packet& packet, const TransmissionPlan& plan);

} // namespace wbasn
