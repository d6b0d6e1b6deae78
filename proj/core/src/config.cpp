#include "wbasn/config.hpp"

#include <sstream>

namespace wbasn {

std::string to_string(Protocol p) {
    switch (p) {
    case Protocol::MultiHop: return "multihop";
    case Protocol::Attempt: return "attempt";
    case Protocol::MAttempt: return "mattempt";
    }
    return "?";
}

std::string to_string(NodeClass c) {
    switch (c) {
    case NodeClass::Sink: return "sink";
    case NodeClass::Parent: return "parent";
    case NodeClass::FirstChild: return "first_child";
    case NodeClass::SecondChild: return "second_child";
    }
    return "?";
}

std::string to_string(PacketKind k) {
    switch (k) {
    case PacketKind::Normal: return "normal";
    case PacketKind::Critical: return "critical";
    case PacketKind::OnDemand: return "on_demand";
    }
    return "?";
}

ScenarioConfig make_scenario(const std::string& preset_name, std::uint64_t seed) {
    ScenarioConfig cfg; // defaults are the paper-simulation preset
    cfg.seed = seed;
    cfg.preset = preset_name;

    if (preset_name == "paper-simulation") {
        // 5 m x 5 m, 10 nodes, 5000 rounds, uniform 0.5 J, CH rotation at
        // 10%: the comparison scenario. Uniform 4000-bit payloads keep the
        // three classes' loads comparable under the shared energy budget.
    } else if (preset_name == "prototype") {
        // Heterogeneous body prototype: per-class energies and payloads,
        // no cluster-head rotation, body-sized 2 m plane.
        cfg.area_side_m = 2.0;
        cfg.energy_mode = EnergyMode::PerClass;
        cfg.ch_probability = 0.0;
        cfg.parent.payload_bits = 80000;      // 10 Kbytes
        cfg.first_child.payload_bits = 8000;  // 1 Kbyte
        cfg.second_child.payload_bits = 400;  // 50 bytes
    } else {
        std::ostringstream msg;
        msg << "unknown preset '" << preset_name
            << "'; valid presets: {\"paper-simulation\",\"prototype\"}";
        throw ConfigError(msg.str());
    }

    validate(cfg);
    return cfg;
}

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& range, const std::string& got) {
    throw ConfigError(key + ": expected " + range + ", got " + got);
}

void require(bool ok, const std::string& key, const std::string& range, double got) {
    if (!ok) {
        std::ostringstream v;
        v << got;
        fail(key, range, v.str());
    }
}

} // namespace

void validate(const ScenarioConfig& cfg) {
    require(cfg.area_side_m > 0, "area_side_m", "number > 0", cfg.area_side_m);
    require(cfg.node_count >= 2, "node_count", "integer >= 2", cfg.node_count);
    require(cfg.rounds >= 0, "rounds", "integer >= 0", cfg.rounds);
    require(cfg.radio.elec_j_per_bit > 0, "e_elec_j_per_bit", "number > 0", cfg.radio.elec_j_per_bit);
    require(cfg.radio.amp_j_per_bit_m2 > 0, "e_amp_j_per_bit_m2", "number > 0", cfg.radio.amp_j_per_bit_m2);
    require(cfg.parent_count >= 0, "parent_count", "integer >= 0", cfg.parent_count);
    require(cfg.first_child_count >= 0, "first_child_count", "integer >= 0", cfg.first_child_count);
    require(cfg.second_child_count >= 0, "second_child_count", "integer >= 0", cfg.second_child_count);
    if (cfg.parent_count + cfg.first_child_count + cfg.second_child_count != cfg.node_count - 1) {
        std::ostringstream msg;
        msg << "class mix: parent_count + first_child_count + second_child_count must equal "
            << "node_count - 1 (" << cfg.node_count - 1 << "), got "
            << cfg.parent_count + cfg.first_child_count + cfg.second_child_count;
        throw ConfigError(msg.str());
    }
    auto check_class = [](const char* prefix, const ClassParams& p) {
        require(p.initial_energy_j > 0, std::string(prefix) + "_initial_energy_j", "number > 0",
                p.initial_energy_j);
        require(p.payload_bits > 0, std::string(prefix) + "_payload_bits", "integer > 0",
                p.payload_bits);
        require(p.mobility_amplitude_m >= 0, std::string(prefix) + "_mobility_amplitude_m",
                "number >= 0", p.mobility_amplitude_m);
        require(p.normal_range_m > 0, std::string(prefix) + "_normal_range_m", "number > 0",
                p.normal_range_m);
    };
    check_class("parent", cfg.parent);
    check_class("first_child", cfg.first_child);
    check_class("second_child", cfg.second_child);
    // High-rate nodes sit on less mobile sites.
    if (!(cfg.parent.mobility_amplitude_m <= cfg.first_child.mobility_amplitude_m &&
          cfg.first_child.mobility_amplitude_m <= cfg.second_child.mobility_amplitude_m)) {
        throw ConfigError("mobility amplitudes must satisfy parent <= first_child <= second_child");
    }
    require(cfg.uniform_initial_energy_j > 0, "uniform_initial_energy_j", "number > 0",
            cfg.uniform_initial_energy_j);
    require(cfg.sink_normal_range_m > 0, "sink_normal_range_m", "number > 0", cfg.sink_normal_range_m);
    require(cfg.full_power_range_m > 0, "full_power_range_m", "number > 0", cfg.full_power_range_m);
    require(cfg.ch_probability >= 0 && cfg.ch_probability <= 1, "ch_probability",
            "number in [0, 1]", cfg.ch_probability);
    require(cfg.temp_threshold > 0, "temp_threshold", "number > 0", cfg.temp_threshold);
    require(cfg.temp_delta_per_packet > 0, "temp_delta_per_packet", "number > 0",
            cfg.temp_delta_per_packet);
    if (cfg.temp_delta_per_packet >= cfg.temp_threshold) {
        throw ConfigError("temp_delta_per_packet: must be < temp_threshold so a cool node can "
                          "handle at least one packet");
    }
    require(cfg.cooling_per_round >= 0, "cooling_per_round", "number >= 0", cfg.cooling_per_round);
    require(cfg.hotspot_cooldown_rounds >= 1, "hotspot_cooldown_rounds", "integer >= 1",
            cfg.hotspot_cooldown_rounds);
    require(cfg.child_cap >= 0, "child_cap", "integer >= 0", cfg.child_cap);
    require(cfg.p_critical >= 0 && cfg.p_critical <= 1, "p_critical", "number in [0, 1]",
            cfg.p_critical);
    require(cfg.p_on_demand >= 0 && cfg.p_on_demand <= 1, "p_on_demand", "number in [0, 1]",
            cfg.p_on_demand);
    require(cfg.mobility_period_rounds >= 1, "mobility_period_rounds", "integer >= 1",
            cfg.mobility_period_rounds);
    require(cfg.hello_bits >= 0, "hello_bits", "integer >= 0", cfg.hello_bits);
}

const ClassParams& class_params(const ScenarioConfig& cfg, NodeClass cls) {
    switch (cls) {
    case NodeClass::Parent: return cfg.parent;
    case NodeClass::FirstChild: return cfg.first_child;
    case NodeClass::SecondChild: return cfg.second_child;
    case NodeClass::Sink: break;
    }
    throw std::logic_error("class_params: sink has no class parameters");
}

double initial_energy_j(const ScenarioConfig& cfg, NodeClass cls) {
    if (cfg.energy_mode == EnergyMode::Uniform)
        return cfg.uniform_initial_energy_j;
    return class_params(cfg, cls).initial_energy_j;
}

int payload_bits(const ScenarioConfig& cfg, NodeClass cls) {
    return class_params(cfg, cls).payload_bits;
}

double normal_range_m(const ScenarioConfig& cfg, const Node& node) {
    if (node.is_sink())
        return cfg.sink_normal_range_m;
    return class_params(cfg, node.cls).normal_range_m;
}

} // namespace wbasn
