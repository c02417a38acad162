#include "curator/manifest.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>

#include "curator/errors.hpp"

namespace curator {

void DatasetManifest::append_stage(StageEntry entry) {
    stage_log.push_back(std::move(entry));
}

bool is_chain_stage(std::string_view stage) {
    static constexpr std::string_view kChain[] = {
        "ingest", "filter", "classify", "embed", "cluster", "sample",
        "dedup", "verify", "decontaminate", "mix", "curriculum"};
    for (const auto s : kChain) {
        if (s == stage) return true;
    }
    return false;
}

bool DatasetManifest::consistent() const {
    const StageEntry* prev = nullptr;
    for (const auto& e : stage_log) {
        if (!is_chain_stage(e.stage)) continue;
        if (prev && e.input_count != prev->output_count) return false;
        prev = &e;
    }
    return true;
}

nlohmann::ordered_json DatasetManifest::to_json() const {
    nlohmann::ordered_json j;
    j["pipeline_version"] = pipeline_version;
    j["seed"] = seed;
    auto log = nlohmann::ordered_json::array();
    for (const auto& e : stage_log) {
        nlohmann::ordered_json entry;
        entry["stage"] = e.stage;
        entry["input_count"] = e.input_count;
        entry["output_count"] = e.output_count;
        entry["params"] = e.params;
        log.push_back(std::move(entry));
    }
    j["stage_log"] = std::move(log);
    j["created_at"] = created_at;
    return j;
}

DatasetManifest DatasetManifest::from_json(const nlohmann::json& j) {
    DatasetManifest m;
    m.pipeline_version = j.value("pipeline_version", std::string(kPipelineVersion));
    m.seed = j.value("seed", std::int64_t{0});
    m.created_at = j.value("created_at", std::string{});
    if (j.contains("stage_log")) {
        for (const auto& e : j.at("stage_log")) {
            StageEntry entry;
            entry.stage = e.value("stage", std::string{});
            entry.input_count = e.value("input_count", std::uint64_t{0});
            entry.output_count = e.value("output_count", std::uint64_t{0});
            if (e.contains("params")) entry.params = e.at("params");
            m.stage_log.push_back(std::move(entry));
        }
    }
    return m;
}

void DatasetManifest::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write manifest: " + path);
    out << to_json().dump(2) << '\n';
    if (!out) throw IoError("manifest write failed: " + path);
}

DatasetManifest DatasetManifest::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read manifest: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed manifest " + path + ": " + e.what());
    }
    return from_json(j);
}

std::string manifest_timestamp() {
    if (const char* fixed = std::getenv("CURATOR_CREATED_AT")) {
        return fixed;
    }
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace curator
