#pragma once

#include <optional>
#include <set>
#include <vector>

#include "wbasn/mobility.hpp"
#include "wbasn/sim_state.hpp"

namespace wbasn {

/// Slot order for normal data: alive eligible senders, ascending NodeId.
struct TdmaSchedule {
    int round = 0;
    std::vector<NodeId> slots;
};

TdmaSchedule build_tdma(int round, const std::set<NodeId>& eligible);

/// One row of the metric stream. delivered_*/lost carry both the per-round
/// figure and the running total; the CSV emits the totals (throughput-style
/// axes) alongside the per-round cluster-head and hot-spot counts.
struct RoundMetrics {
    int round = 0;
    int dead_count = 0;
    TrafficCounts delivered_round;
    TrafficCounts delivered_total;
    std::int64_t lost_round = 0;
    std::int64_t lost_total = 0;
    std::int64_t generated_round = 0;
    double residual_energy_j = 0.0;
    int ch_count = 0;
    std::int64_t hotspot_events_round = 0;

    friend bool operator==(const RoundMetrics&, const RoundMetrics&) = default;
};

struct RunSummary {
    std::optional<int> first_death_round;
    std::optional<int> last_death_round;
    TrafficCounts delivered;
    TrafficCounts generated;
    std::int64_t lost = 0;
    std::array<std::int64_t, kLossReasonCount> lost_by_reason{};
    double initial_energy_j = 0.0;
    double residual_energy_j = 0.0;
    double energy_debited_j = 0.0;
    double max_temperature = 0.0;
    int max_children = 0;
    std::uint64_t hotspot_events = 0;
    std::uint64_t marked_link_crossings = 0; // invariant: 0
    std::uint64_t hello_floods = 0;
    std::uint64_t joins_accepted = 0;
    std::uint64_t joins_rejected = 0;
    std::uint64_t escalations = 0;
};

struct RunResult {
    std::vector<RoundMetrics> metrics;
    RunSummary summary;
    std::vector<PacketRecord> packets; // populated when record_packets set
};

struct RunOptions {
    bool record_packets = false;
};

/// LEACH-style rotation: within each epoch of ceil(1/p) rounds a node that
/// has not yet served self-elects with threshold p / (1 - p * (pos in
/// epoch)); every node therefore serves exactly once per epoch and the
/// long-run mean head count is (alive nodes) * p. p = 0 disables rotation.
std::set<NodeId> elect_cluster_heads(SimState& s, int round);

/// One scenario run, driving the per-round phase sequence:
/// mobility -> route maintenance -> cluster-head election -> TDMA ->
/// traffic (critical, on-demand, then normal) -> cooling -> metrics.
class Simulation {
public:
    Simulation(const ScenarioConfig& cfg, RunOptions options = {});

    /// Execute one round (1-based). Returns that round's metrics row.
    RoundMetrics run_round(int round);

    RunResult finish() &&;

    const SimState& state() const { return state_; }
    SimState& state() { return state_; }

private:
    void run_traffic_phase(int round, const TdmaSchedule& schedule);
    void emit_and_send(int round, NodeId source, PacketKind kind);
    void maintain_routes(int round);
    std::vector<std::pair<NodeId, NodeId>> current_edge_set() const;

    SimState state_;
    MobilityModel mobility_;
    std::vector<std::pair<NodeId, NodeId>> edges_at_last_flood_;
    std::vector<NodeId> alive_at_last_flood_;
    std::optional<int> first_death_round_;
    std::optional<int> last_death_round_;
    std::vector<RoundMetrics> metrics_;
    // Previous-round cumulative snapshots, for the per-round deltas.
    TrafficCounts delivered_prev_;
    std::int64_t lost_prev_ = 0;
    std::int64_t generated_prev_ = 0;
    std::uint64_t hotspot_prev_ = 0;
};

/// Run rounds 1..cfg.rounds and collect the metric stream plus summary.
/// Bit-deterministic for a fixed config (seed included).
RunResult run_scenario(const ScenarioConfig& cfg, RunOptions options = {});

} // namespace wbasn
