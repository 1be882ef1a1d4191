#pragma once

#include <map>
#include <string>

namespace ptsqw {

// Reproducibility record attached to every output file: either embedded as
// '#' comment lines (CSV, polyline data) or as a "manifest" object (JSON).
// Re-running with identical flags must reproduce the file byte for byte
// except for the timestamp.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::string code_version;
    std::string timestamp;  // UTC, ISO 8601
    std::map<std::string, std::string> tolerances;

    static RunManifest make(const std::string& command);

    std::string to_json() const;
    // "# key: value" comment block for whitespace/CSV outputs
    std::string to_comment_block() const;
};

std::string current_utc_timestamp();

}  // namespace ptsqw
