#pragma once

#include <map>
#include <string>
#include <vector>

#include "wbasn/config.hpp"

namespace wbasn {
namespace io {

/// The accepted `key = value` knobs, with a human-readable range for error
/// messages. One registry drives file parsing, --set overrides and the
/// manifest echo, so they can never drift apart.
struct ConfigKeyInfo {
    std::string name;
    std::string range; // e.g. "number in [0, 1]"
};

const std::vector<ConfigKeyInfo>& config_keys();

/// Apply one `key = value` assignment. Unknown keys, unparsable values and
/// out-of-range values throw ConfigError naming the key and accepted range.
void apply_config_entry(ScenarioConfig& cfg, const std::string& key, const std::string& value);

/// Parse a line-oriented `key = value` file ('#' starts a comment, blank
/// lines ignored) on top of `cfg`.
void apply_config_file(ScenarioConfig& cfg, const std::string& path);

/// Parse inline overrides of the form "key=value".
void apply_overrides(ScenarioConfig& cfg, const std::vector<std::string>& overrides);

/// Full resolution order: preset defaults, then file, then overrides.
/// Validates the result.
ScenarioConfig parse_config(const std::string& preset_name, std::uint64_t seed,
                            const std::string& file_path, // empty: no file
                            const std::vector<std::string>& overrides);

/// Every knob as key -> value text, in registry order (the manifest echo).
std::map<std::string, std::string> config_entries(const ScenarioConfig& cfg);

} // namespace io
} // namespace wbasn
