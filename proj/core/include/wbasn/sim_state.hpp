#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "wbasn/config.hpp"
#include "wbasn/model.hpp"
#include "wbasn/route_table.hpp"
#include "wbasn/thermal.hpp"

namespace wbasn {

enum class LossReason : int {
    NoRoute = 0,        // no usable candidate and no escalation path
    NodeDeath = 1,      // a node on the route died and stranded the packet
    EnergyExhausted = 2, // the holder drained itself attempting the send
    OutOfRange = 3,     // sink beyond full-power range (custom configs only)
};
inline constexpr int kLossReasonCount = 4;

const char* to_string(LossReason r);

struct TrafficCounts {
    std::int64_t normal = 0;
    std::int64_t critical = 0;
    std::int64_t on_demand = 0;

    std::int64_t total() const { return normal + critical + on_demand; }
    void add(PacketKind kind) {
        switch (kind) {
        case PacketKind::Normal: ++normal; break;
        case PacketKind::Critical: ++critical; break;
        case PacketKind::OnDemand: ++on_demand; break;
        }
    }
};

/// Per-packet record, kept only when RunOptions::record_packets is set.
struct PacketRecord {
    std::uint64_t packet_id = 0;
    int round = 0;
    PacketKind kind = PacketKind::Normal;
    NodeId source = 0;
    bool delivered = false;
    LossReason loss_reason = LossReason::NoRoute; // valid when !delivered
    std::vector<NodeId> hop_trace;
};

/// Whole mutable state of one scenario run. Owned by the engine; routing
/// and mobility operate through it. Single-threaded by construction.
struct SimState {
    ScenarioConfig cfg;
    ProtocolTraits traits;

    std::vector<Node> nodes;
    RouteTable table;
    ThermalState thermal;

    std::set<NodeId> cluster_heads;       // elected for the current round
    std::vector<bool> ch_elected_in_epoch; // rotation bookkeeping

    // Energy ledger: every joule leaving a node is added here, clamped to
    // what the node actually had, so initial - residual == debited holds.
    double initial_energy_total_j = 0.0;
    double energy_debited_j = 0.0;

    // Cumulative counters over the run.
    TrafficCounts generated;
    TrafficCounts delivered;
    std::int64_t lost = 0;
    std::array<std::int64_t, kLossReasonCount> lost_by_reason{};
    std::uint64_t hotspot_events = 0; // mirror of thermal's counter
    std::uint64_t hello_floods = 0;
    std::uint64_t joins_accepted = 0;
    std::uint64_t joins_rejected = 0;
    std::uint64_t escalations = 0;

    // Audit trackers for the acceptance suite.
    double max_temperature_seen = 0.0;
    int max_children_seen = 0;
    std::uint64_t marked_link_crossings = 0; // must stay 0
    std::uint64_t next_packet_id = 1;

    bool record_packets = false;
    std::vector<PacketRecord> packet_log;

    Node& node(NodeId id) { return nodes[id]; }
    const Node& node(NodeId id) const { return nodes[id]; }
    const Node& sink() const { return nodes[kSinkId]; }

    int alive_non_sink() const;
    int dead_count() const;
    double residual_energy_j() const; // sum over alive non-sink nodes

    /// Debit `cost_j` from a node, clamping at zero. Returns true when the
    /// node could fully fund the event; on a shortfall the node is drained,
    /// dies, and the event is considered failed. Either way the amount
    /// actually drained lands in the ledger. Sink debits are free no-ops.
    bool debit(NodeId id, double cost_j);

    /// Mark a node dead and detach it from the parent/child tree.
    void kill(Node& node);

    void note_temperature(const Node& node) {
        if (!node.is_sink() && node.temperature > max_temperature_seen)
            max_temperature_seen = node.temperature;
    }
    void note_children(const Node& node) {
        if (!node.is_sink() && static_cast<int>(node.children.size()) > max_children_seen)
            max_children_seen = static_cast<int>(node.children.size());
    }
};

} // namespace wbasn
