#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "uavgame/types.hpp"

namespace uavgame {

/// One validation finding. `code` is machine-readable (MissingField,
/// OutOfRange, InconsistentTiming, BadType, BadValue); `field` is the
/// dotted path of the offending entry.
struct Diagnostic {
    std::string code;
    std::string field;
    std::string message;
};

/// Result of validating a raw config document: either a usable GameConfig or
/// the full list of violations (never both, never neither).
struct ValidationResult {
    std::optional<GameConfig> config;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return config.has_value(); }
};

/// Parse and validate a JSON config document. Collects every violation it
/// can find instead of stopping at the first. Never throws on malformed
/// input; lexing errors become diagnostics.
ValidationResult validate_config(const std::string& json_text);

/// Load a config file from disk and validate it.
ValidationResult load_config(const std::string& path);

/// Canonical JSON serialization of a validated config. Round trips exactly:
/// validate(serialize(c)) yields a structurally equal config.
std::string serialize_config(const GameConfig& config);

/// FNV-1a hash of the canonical serialization, hex-encoded; embedded in
/// every output file for provenance.
std::string config_hash(const GameConfig& config);

bool config_equal(const GameConfig& a, const GameConfig& b);

}  // namespace uavgame
