#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "wbasn/model.hpp"

namespace wbasn {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class EnergyMode { Uniform, PerClass };

/// Every knob of one scenario run. Defaults are the "paper-simulation"
/// preset; make_scenario() fills either preset by name.
struct ScenarioConfig {
    std::string preset = "paper-simulation";

    double area_side_m = 5.0;
    int node_count = 10;
    int rounds = 5000;
    std::uint64_t seed = 1;
    Protocol protocol = Protocol::MAttempt;

    RadioParams radio;

    // Class mix over the node_count - 1 non-sink nodes.
    int parent_count = 3;
    int first_child_count = 4;
    int second_child_count = 3;

    ClassParams parent{.initial_energy_j = 10.0,
                       .payload_bits = 4000,
                       .mobility_amplitude_m = 0.0,
                       .normal_range_m = 3.5};
    ClassParams first_child{.initial_energy_j = 5.0,
                            .payload_bits = 4000,
                            .mobility_amplitude_m = 0.5,
                            .normal_range_m = 2.5};
    ClassParams second_child{.initial_energy_j = 1.0,
                             .payload_bits = 4000,
                             .mobility_amplitude_m = 1.0,
                             .normal_range_m = 1.5};

    EnergyMode energy_mode = EnergyMode::Uniform;
    double uniform_initial_energy_j = 0.5;

    double sink_normal_range_m = 3.5;
    double full_power_range_m = 10.0;

    double ch_probability = 0.10; // 0 disables cluster-head rotation

    double temp_threshold = 1.0;
    double temp_delta_per_packet = 0.1;
    double cooling_per_round = 0.05;
    int hotspot_cooldown_rounds = 5;

    int child_cap = 3;

    double p_critical = 0.05;
    double p_on_demand = 0.01;

    int mobility_period_rounds = 50;
    int hello_bits = 200;
};

/// Build a fully populated config for a named preset.
/// Valid names: "paper-simulation", "prototype".
ScenarioConfig make_scenario(const std::string& preset_name, std::uint64_t seed);

/// Throws ConfigError naming the offending knob and its accepted range.
void validate(const ScenarioConfig& cfg);

const ClassParams& class_params(const ScenarioConfig& cfg, NodeClass cls);
double initial_energy_j(const ScenarioConfig& cfg, NodeClass cls);
int payload_bits(const ScenarioConfig& cfg, NodeClass cls);

/// Radio range used for link formation: per-class for sensors, the
/// configured sink range for the sink.
double normal_range_m(const ScenarioConfig& cfg, const Node& node);

} // namespace wbasn
