#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wbasn/geometry.hpp"

namespace wbasn {

using NodeId = std::uint32_t;

/// Node 0 is always the sink.
inline constexpr NodeId kSinkId = 0;

enum class NodeClass { Sink, Parent, FirstChild, SecondChild };

enum class Protocol { MultiHop, Attempt, MAttempt };

enum class PacketKind { Normal, Critical, OnDemand };

/// First-order radio model coefficients. Transmit cost is
/// bits * (elec + amp * d^2), receive cost is bits * elec; the path-loss
/// exponent is fixed at 2.
struct RadioParams {
    double elec_j_per_bit = 50e-9;
    double amp_j_per_bit_m2 = 100e-12;
};

/// Per-class knobs. High-data-rate classes sit on less mobile body sites,
/// so mobility_amplitude_m is non-increasing from SecondChild down to Parent.
struct ClassParams {
    double initial_energy_j = 0.0;
    int payload_bits = 0;
    double mobility_amplitude_m = 0.0;
    double normal_range_m = 0.0;
};

struct Node {
    NodeId id = 0;
    NodeClass cls = NodeClass::Sink;
    Vec2 base_position;
    Vec2 position;
    double energy_j = 0.0; // ignored for the sink, which never dies
    double temperature = 0.0;
    bool alive = true;
    std::optional<NodeId> parent;
    std::set<NodeId> children;

    bool is_sink() const { return cls == NodeClass::Sink; }
};

struct Packet {
    std::uint64_t id = 0;
    PacketKind kind = PacketKind::Normal;
    int size_bits = 0;
    NodeId source = 0;
    int created_round = 0;
    std::vector<NodeId> hop_trace; // starts at source; ends at sink iff delivered
};

/// Behavioral deltas between the three compared protocols.
struct ProtocolTraits {
    bool emergency_single_hop = false; // critical/on-demand traffic, sent direct
    bool thermal_aware = false;        // heat accrual, hot-spot marking, backoff
    bool mobility_join = false;        // parent/child tree with re-join on breakage
    bool escalate_on_no_route = false; // full-power direct send instead of loss
    bool reflood_on_churn = false;     // full hello re-flood when the link set moves
};

constexpr ProtocolTraits traits_of(Protocol p) {
    switch (p) {
    case Protocol::MultiHop:
        return {.emergency_single_hop = false,
                .thermal_aware = false,
                .mobility_join = false,
                .escalate_on_no_route = false,
                .reflood_on_churn = true};
    case Protocol::Attempt:
        return {.emergency_single_hop = true,
                .thermal_aware = true,
                .mobility_join = false,
                .escalate_on_no_route = false,
                .reflood_on_churn = true};
    case Protocol::MAttempt:
    default:
        return {.emergency_single_hop = true,
                .thermal_aware = true,
                .mobility_join = true,
                .escalate_on_no_route = true,
                .reflood_on_churn = false};
    }
}

std::string to_string(Protocol p);
std::string to_string(NodeClass c);
std::string to_string(PacketKind k);

} // namespace wbasn
