#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>

#include "wbasn/config.hpp"
#include "wbasn/model.hpp"

namespace wbasn {

enum class HeatEvent { Transmit, Receive };

enum class ForwardDecision { Accepted, Returned };

/// Directed link, ordered so it can key a map.
struct LinkKey {
    NodeId from = 0;
    NodeId to = 0;
    friend auto operator<=>(const LinkKey&, const LinkKey&) = default;
};

/// Abstract per-node temperature bookkeeping plus hot-spot link marking.
/// Temperatures live on the nodes themselves; this class owns the marked
/// links and the thermal rules.
///
/// The threshold discipline keeps every temperature within
/// temp_threshold + temp_delta_per_packet: a node may start an event only
/// while below the threshold, and a relay is only handed a packet when it
/// can absorb both the receive and the onward transmit without crossing
/// into a second event above the threshold.
class ThermalState {
public:
    ThermalState() = default;
    explicit ThermalState(const ScenarioConfig& cfg)
        : threshold_(cfg.temp_threshold),
          delta_(cfg.temp_delta_per_packet),
          cooling_(cfg.cooling_per_round),
          cooldown_rounds_(cfg.hotspot_cooldown_rounds) {}

    /// One packet-sized event heats the node by the configured delta,
    /// independent of payload size. No-op for the sink and for dead nodes.
    void accrue(Node& node, HeatEvent event) const;

    /// True while the node may begin a transmission of its own.
    bool may_transmit(const Node& node) const {
        return node.is_sink() || node.temperature < threshold_;
    }

    /// Probe a hop sender -> receiver before any energy is spent.
    /// Returned marks the directed link as a hot-spot for the configured
    /// cooldown; the caller re-routes. The probe itself is free.
    ForwardDecision try_forward(NodeId sender, const Node& receiver);

    bool is_marked(NodeId from, NodeId to) const {
        return hotspot_links_.contains(LinkKey{from, to});
    }

    /// End-of-round cooling: every temperature drops by cooling_per_round
    /// (clamped at zero) and every hot-spot cooldown decrements, expired
    /// entries being removed.
    void cool_all(std::span<Node> nodes);

    std::size_t marked_link_count() const { return hotspot_links_.size(); }

    /// Returned decisions since construction (one per hot-spot marking).
    std::uint64_t hotspot_events() const { return hotspot_events_; }

    double threshold() const { return threshold_; }
    double delta_per_packet() const { return delta_; }

private:
    double threshold_ = 1.0;
    double delta_ = 0.1;
    double cooling_ = 0.05;
    int cooldown_rounds_ = 5;
    std::map<LinkKey, int> hotspot_links_; // value: cooldown rounds remaining
    std::uint64_t hotspot_events_ = 0;
};

} // namespace wbasn
