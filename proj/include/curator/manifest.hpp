#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace curator {

inline constexpr const char* kPipelineVersion = "0.1.0";

struct StageEntry {
    std::string stage;
    std::uint64_t input_count = 0;
    std::uint64_t output_count = 0;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
};

/// Per-run log of what each stage consumed, produced, and was configured
/// with. Two runs with identical (seed, parameters, inputs) serialize
/// identically except for created_at.
struct DatasetManifest {
    std::string pipeline_version = kPipelineVersion;
    std::int64_t seed = 0;
    std::vector<StageEntry> stage_log;
    std::string created_at;  // ISO-8601 UTC

    void append_stage(StageEntry entry);

    /// Checks the funnel arithmetic: within the main curation chain each
    /// stage's input count must equal the previous stage's output count.
    bool consistent() const;

    nlohmann::ordered_json to_json() const;
    static DatasetManifest from_json(const nlohmann::json& j);

    void save(const std::string& path) const;
    static DatasetManifest load(const std::string& path);
};

/// Current UTC time as ISO-8601, or the value of CURATOR_CREATED_AT when that
/// environment variable is set (reproducible-build hook).
std::string manifest_timestamp();

/// True for stages that participate in the main-chain count arithmetic.
bool is_chain_stage(std::string_view stage);

}  // namespace curator
