#pragma once

#include <string>
#include <vector>

namespace wbasn {
namespace io {

/// The wbasn-sim command line:
///   --protocol {multihop|attempt|mattempt|all}
///   --preset NAME        (paper-simulation | prototype)
///   --config PATH        (key = value file)
///   --set key=value      (repeatable inline override)
///   --seed N | --seeds A..B
///   --rounds N
///   --out DIR            (default: $WBASN_SIM_OUT or ./out)
/// Writes one CSV per (protocol, seed), a cross-seed summary CSV and the
/// run manifest. Returns the process exit status.
int run_cli(const std::vector<std::string>& args);

} // namespace io
} // namespace wbasn
