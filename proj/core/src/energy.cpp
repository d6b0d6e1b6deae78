#include "wbasn/energy.hpp"

#include <stdexcept>

namespace wbasn {

double transmit_energy(double bits, double d_m, const RadioParams& p) {
    if (bits < 0.0)
        throw std::domain_error("transmit_energy: bits must be >= 0");
    if (d_m < 0.0)
        throw std::domain_error("transmit_energy: distance must be >= 0");
    return bits * (p.elec_j_per_bit + p.amp_j_per_bit_m2 * d_m * d_m);
}

double receive_energy(double bits, const RadioParams& p) {
    if (bits < 0.0)
        throw std::domain_error("receive_energy: bits must be >= 0");
    return bits * p.elec_j_per_bit;
}

double single_hop_energy(double bits, double d_m, const RadioParams& p) {
    return transmit_energy(bits, d_m, p);
}

double multi_hop_energy(int hops, double bits, double d_m, const RadioParams& p) {
    if (hops < 1)
        throw std::domain_error("multi_hop_energy: hops must be >= 1");
    if (bits < 0.0)
        throw std::domain_error("multi_hop_energy: bits must be >= 0");
    if (d_m < 0.0)
        throw std::domain_error("multi_hop_energy: distance must be >= 0");
    const double n = static_cast<double>(hops);
    return 2.0 * n * bits * p.elec_j_per_bit + n * bits * p.amp_j_per_bit_m2 * d_m * d_m -
           bits * p.elec_j_per_bit;
}

double multi_hop_energy_by_summation(int hops, double bits, double d_m, const RadioParams& p) {
    if (hops < 1)
        throw std::domain_error("multi_hop_energy_by_summation: hops must be >= 1");
    // n transmit events, one per hop, plus a receive at each of the n - 1
    // intermediate nodes. Deliberately a literal summation: this is the
    // oracle the closed form is checked against.
    double total = 0.0;
    for (int i = 0; i < hops; ++i)
        total += transmit_energy(bits, d_m, p);
    for (int i = 0; i < hops - 1; ++i)
        total += receive_energy(bits, p);
    return total;
}

EnergyBreakdown multi_hop_breakdown(int hops, double bits, double d_m, const RadioParams& p) {
    EnergyBreakdown out;
    for (int i = 0; i < hops; ++i)
        out.transmit_j += transmit_energy(bits, d_m, p);
    for (int i = 0; i < hops - 1; ++i)
        out.receive_j += receive_energy(bits, p);
    out.total_j = out.transmit_j + out.receive_j;
    return out;
}

} // namespace wbasn
