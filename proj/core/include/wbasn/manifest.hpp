#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wbasn/config.hpp"

namespace wbasn {
namespace io {

/// Written alongside every sweep so any CSV is reproducible from the
/// manifest alone: replaying the echoed config with the recorded seeds
/// regenerates the outputs byte for byte.
struct RunManifest {
    std::string artifact = "wbasn-sim";
    std::string version;
    std::string preset;
    std::vector<std::string> protocols;
    std::vector<std::uint64_t> seeds;
    std::string out_dir;
    std::vector<std::string> outputs; // file names relative to out_dir
    ScenarioConfig config;            // fully resolved (protocol/seed set per run)
};

std::string manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const std::string& json_text);

void write_manifest(const RunManifest& m, const std::string& path);
RunManifest read_manifest(const std::string& path);

} // namespace io
} // namespace wbasn
