#include "wbasn/thermal.hpp"

namespace wbasn {

void ThermalState::accrue(Node& node, HeatEvent) const {
    if (node.is_sink() || !node.alive)
        return;
    node.temperature += delta_;
}

ForwardDecision ThermalState::try_forward(NodeId sender, const Node& receiver) {
    if (receiver.is_sink())
        return ForwardDecision::Accepted;
    // A non-sink receiver is always a relay: it must absorb the receive and
    // still be below the threshold for the onward transmit, or the packet
    // would strand on it. Refusal marks the directed link and is free.
    if (receiver.temperature + delta_ < threshold_)
        return ForwardDecision::Accepted;
    hotspot_links_[LinkKey{sender, receiver.id}] = cooldown_rounds_;
    ++hotspot_events_;
    return ForwardDecision::Returned;
}

void ThermalState::cool_all(std::span<Node> nodes) {
    for (Node& n : nodes) {
        if (n.is_sink())
            continue;
        n.temperature = std::max(0.0, n.temperature - cooling_);
    }
    for (auto it = hotspot_links_.begin(); it != hotspot_links_.end();) {
        if (--it->second <= 0)
            it = hotspot_links_.erase(it);
        else
            ++it;
    }
}

} // namespace wbasn
