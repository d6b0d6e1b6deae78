#pragma once

#include <span>
#include <string>

#include "wbasn/engine.hpp"

namespace wbasn {
namespace io {

/// Fixed CSV schema, one row per round:
/// round,dead,delivered_normal,delivered_critical,delivered_on_demand,lost,
/// residual_energy_j,ch_count,hotspot_events
/// Delivered/lost columns are running totals; ch_count and hotspot_events
/// are per-round. Energies print as fixed-point with 9 fractional digits
/// ("0.000240000" for 2.4e-4 J), newline is '\n', no locale formatting.
extern const char* const kMetricsCsvHeader;

std::string metrics_csv_row(const RoundMetrics& m);

std::string metrics_to_csv(std::span<const RoundMetrics> metrics);

/// Write the stream to `path` atomically (temp file + rename).
/// I/O failures throw std::runtime_error with the path in the message.
void write_metrics_csv(std::span<const RoundMetrics> metrics, const std::string& path);

/// Locale-independent fixed-point with 9 fractional digits.
std::string format_energy(double joules);

} // namespace io
} // namespace wbasn
