#pragma once

#include <vector>

#include "wbasn/config.hpp"
#include "wbasn/model.hpp"
#include "wbasn/rng.hpp"

namespace wbasn {

/// Deploy the network: sink at the exact area center, the remaining nodes
/// uniform over the square. Classes are assigned in descending data-rate
/// order of distance to the sink (Parents nearest, SecondChildren farthest),
/// ids 1..n-1 follow that order. Deterministic for a fixed stream state.
std::vector<Node> place_nodes(const ScenarioConfig& cfg, RandomStream& rng);

} // namespace wbasn
