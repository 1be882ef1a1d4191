#include "ptsqw/manifest.hpp"

#include <ctime>

#include <nlohmann/json.hpp>

#include "ptsqw/version.hpp"

namespace ptsqw {

std::string current_utc_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

RunManifest RunManifest::make(const std::string& command) {
    RunManifest m;
    m.command = command;
    m.code_version = PTSQW_VERSION;
    m.timestamp = current_utc_timestamp();
    return m;
}

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["code_version"] = code_version;
    j["timestamp"] = timestamp;
    j["tolerances"] = tolerances;
    return j.dump(2);
}

std::string RunManifest::to_comment_block() const {
    std::string out;
    out += "# command: " + command + "\n";
    for (const auto& [k, v] : parameters) out += "# param " + k + ": " + v + "\n";
    for (const auto& [k, v] : tolerances) out += "# tol " + k + ": " + v + "\n";
    out += "# code_version: " + code_version + "\n";
    out += "# timestamp: " + timestamp + "\n";
    return out;
}

}  // namespace ptsqw
