#include "wbasn/placement.hpp"

#include <algorithm>

namespace wbasn {

std::vector<Node> place_nodes(const ScenarioConfig& cfg, RandomStream& rng) {
    if (cfg.node_count < 2)
        throw ConfigError("node_count: expected integer >= 2, got " + std::to_string(cfg.node_count));

    const Vec2 center{cfg.area_side_m / 2.0, cfg.area_side_m / 2.0};

    // Draw all sensor positions first so the stream consumption is a fixed
    // function of node_count, then order them by distance to the sink.
    std::vector<Vec2> positions(static_cast<std::size_t>(cfg.node_count - 1));
    for (auto& p : positions) {
        p.x = rng.uniform(0.0, cfg.area_side_m);
        p.y = rng.uniform(0.0, cfg.area_side_m);
    }
    std::stable_sort(positions.begin(), positions.end(), [&](const Vec2& a, const Vec2& b) {
        return distance(a, center) < distance(b, center);
    });

    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(cfg.node_count));

    Node sink;
    sink.id = kSinkId;
    sink.cls = NodeClass::Sink;
    sink.base_position = center;
    sink.position = center;
    sink.energy_j = 0.0; // unused: the sink never dies
    nodes.push_back(sink);

    // Classes in descending data-rate order of distance to the sink:
    // Parents nearest, SecondChildren farthest.
    for (int i = 0; i < cfg.node_count - 1; ++i) {
        Node n;
        n.id = static_cast<NodeId>(i + 1);
        if (i < cfg.parent_count)
            n.cls = NodeClass::Parent;
        else if (i < cfg.parent_count + cfg.first_child_count)
            n.cls = NodeClass::FirstChild;
        else
            n.cls = NodeClass::SecondChild;
        n.base_position = positions[static_cast<std::size_t>(i)];
        n.position = n.base_position;
        n.energy_j = initial_energy_j(cfg, n.cls);
        n.alive = n.energy_j > 0.0;
        nodes.push_back(std::move(n));
    }
    return nodes;
}

} // namespace wbasn
