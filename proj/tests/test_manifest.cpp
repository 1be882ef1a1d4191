#include <doctest.h>

#include <nlohmann/json.hpp>

#include "ptsqw/manifest.hpp"
#include "ptsqw/version.hpp"

using namespace ptsqw;

TEST_CASE("manifest json carries all fields") {
    RunManifest m = RunManifest::make("spectrum");
    m.parameters = {{"L", "1"}, {"g", "2"}};
    m.tolerances = {{"root_tol_k", "1e-13"}};
    const auto j = nlohmann::json::parse(m.to_json());
    CHECK(j["command"] == "spectrum");
    CHECK(j["code_version"] == PTSQW_VERSION);
    CHECK(j["parameters"]["g"] == "2");
    CHECK(j["tolerances"]["root_tol_k"] == "1e-13");
    CHECK(!j["timestamp"].get<std::string>().empty());
}

TEST_CASE("comment block lists parameters and tolerances") {
    RunManifest m = RunManifest::make("ovals");
    m.parameters = {{"l", "0.04"}};
    m.tolerances = {{"grid", "600"}};
    const std::string block = m.to_comment_block();
    CHECK(block.find("# command: ovals") != std::string::npos);
    CHECK(block.find("# param l: 0.04") != std::string::npos);
    CHECK(block.find("# tol grid: 600") != std::string::npos);
    // every line is a comment
    size_t pos = 0;
    while (pos < block.size()) {
        CHECK(block[pos] == '#');
        pos = block.find('\n', pos);
        if (pos == std::string::npos) break;
        ++pos;
    }
}

TEST_CASE("identical manifests differ only in the timestamp") {
    RunManifest a = RunManifest::make("critical");
    RunManifest b = RunManifest::make("critical");
    a.parameters = b.parameters = {{"l", "0.5"}};
    b.timestamp = a.timestamp;
    CHECK(a.to_json() == b.to_json());
}
