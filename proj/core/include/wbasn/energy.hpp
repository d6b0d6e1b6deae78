#pragma once

#include "wbasn/model.hpp"

namespace wbasn {

struct EnergyBreakdown {
    double transmit_j = 0.0;
    double receive_j = 0.0;
    double total_j = 0.0; // always transmit_j + receive_j
};

/// Energy to transmit `bits` over distance `d_m`:
/// bits * (elec + amp * d^2). Throws std::domain_error on negative input.
double transmit_energy(double bits, double d_m, const RadioParams& p);

/// Energy to receive `bits`: bits * elec.
double receive_energy(double bits, const RadioParams& p);

/// Single-hop cost: exactly the transmit cost (the sink's receive is free).
double single_hop_energy(double bits, double d_m, const RadioParams& p);

/// Closed-form cost of relaying `bits` over an equidistant chain of
/// `hops` links of length `d_m` each:
/// 2*n*b*elec + n*b*amp*d^2 - b*elec.
/// Throws std::domain_error if hops < 1.
double multi_hop_energy(int hops, double bits, double d_m, const RadioParams& p);

/// Independent oracle for multi_hop_energy: explicitly sums `hops`
/// transmit events plus `hops - 1` intermediate receive events. Kept as a
/// literal summation so the closed form above can be checked against it.
double multi_hop_energy_by_summation(int hops, double bits, double d_m, const RadioParams& p);

EnergyBreakdown multi_hop_breakdown(int hops, double bits, double d_m, const RadioParams& p);

} // namespace wbasn
