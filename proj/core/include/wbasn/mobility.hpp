#pragma once

#include <optional>
#include <vector>

#include "wbasn/rng.hpp"
#include "wbasn/sim_state.hpp"

namespace wbasn {

/// Deterministic sinusoidal limb oscillation:
/// position(t) = base + axis * amplitude * sin(2*pi*t/period + phase),
/// clamped to the area square. Axes and phases are drawn once from the
/// mobility sub-stream; amplitudes come from the node class.
struct MobilityModel {
    struct PerNode {
        Vec2 axis;          // unit vector
        double amplitude_m = 0.0;
        double phase = 0.0; // radians
    };
    std::vector<PerNode> per_node;
    int period_rounds = 50;
};

MobilityModel init_mobility(const SimState& s, RandomStream& rng);

struct BrokenLink {
    NodeId child = 0;
    NodeId parent = 0;
};

/// Move every node to its round-t position. Returns the parent-child links
/// whose distance now exceeds the child's normal range; those links are
/// severed (child orphaned) so the caller can run re-joins.
std::vector<BrokenLink> step_positions(SimState& s, const MobilityModel& model, int round);

enum class JoinResult { Joined, Rejected };

/// Invitation protocol: an orphaned child scans in-range Parent-class nodes
/// ordered by (hops to sink, distance, id); the first with spare child
/// capacity adopts it. The exchange costs hello-sized control messages.
/// On success the child's route information is refreshed locally.
JoinResult attempt_join(SimState& s, NodeId child);

/// Deployment-time tree: FirstChildren attach to the nearest in-range
/// Parent with capacity, SecondChildren to the nearest FirstChild (falling
/// back to a Parent), Parents to the sink. Costs nothing; only the
/// mobility-triggered re-joins above exchange messages.
void build_initial_tree(SimState& s);

} // namespace wbasn
