#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace curator {

enum class Domain { math, code, science, general };

/// Fixed tie-break order for quota allocation and apportionment.
inline constexpr Domain kDomainOrder[] = {Domain::math, Domain::code,
                                          Domain::science, Domain::general};

std::string to_string(Domain d);
std::optional<Domain> domain_from_string(std::string_view s);

/// Record lifecycle. Transitions are monotone:
/// raw -> filtered_out, or raw -> sampled -> verified | discarded.
enum class Status { raw, filtered_out, sampled, verified, discarded };

std::string to_string(Status s);
std::optional<Status> status_from_string(std::string_view s);
bool can_transition(Status from, Status to);

struct CodeTest {
    std::string input;
    std::string expected;

    bool operator==(const CodeTest&) const = default;
};

/// One instruction/response pair flowing through the pipeline.
struct QaRecord {
    std::string id;
    std::string instruction;
    std::optional<std::string> response;
    std::string source;
    std::optional<Domain> domain;
    std::optional<std::string> category;
    std::uint64_t response_words = 0;
    std::optional<int> difficulty_tier;           // 1..4, set by tiering
    std::optional<std::uint32_t> cluster_id;      // set by clustering
    Status status = Status::raw;
    std::uint32_t attempts = 0;

    // Verifier inputs carried from source corpora when present.
    std::optional<std::string> ground_truth;
    std::vector<CodeTest> tests;

    bool operator==(const QaRecord&) const = default;
};

/// Derives a stable id from (source, instruction) for inputs lacking one.
std::string derive_record_id(std::string_view source, std::string_view instruction);

nlohmann::ordered_json record_to_json(const QaRecord& r);

/// Parses one corpus line. Throws ParseError when "instruction" is missing or
/// the object is malformed. Recomputes response_words; derives id if absent.
QaRecord record_from_json(const nlohmann::json& j, std::string_view default_source);

}  // namespace curator
