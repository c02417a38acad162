#include "curator/record.hpp"

#include <array>
#include <cstdio>

#include "curator/errors.hpp"
#include "curator/text.hpp"

namespace curator {

std::string to_string(Domain d) {
    switch (d) {
        case Domain::math: return "math";
        case Domain::code: return "code";
        case Domain::science: return "science";
        case Domain::general: return "general";
    }
    return "general";
}

std::optional<Domain> domain_from_string(std::string_view s) {
    if (s == "math") return Domain::math;
    if (s == "code") return Domain::code;
    if (s == "science") return Domain::science;
    if (s == "general") return Domain::general;
    return std::nullopt;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::raw: return "raw";
        case Status::filtered_out: return "filtered_out";
        case Status::sampled: return "sampled";
        case Status::verified: return "verified";
        case Status::discarded: return "discarded";
    }
    return "raw";
}

std::optional<Status> status_from_string(std::string_view s) {
    if (s == "raw") return Status::raw;
    if (s == "filtered_out") return Status::filtered_out;
    if (s == "sampled") return Status::sampled;
    if (s == "verified") return Status::verified;
    if (s == "discarded") return Status::discarded;
    return std::nullopt;
}

bool can_transition(Status from, Status to) {
    if (from == to) return true;
    switch (from) {
        case Status::raw:
            return to == Status::filtered_out || to == Status::sampled;
        case Status::sampled:
            return to == Status::verified || to == Status::discarded;
        case Status::filtered_out:
        case Status::verified:
        case Status::discarded:
            return false;
    }
    return false;
}

std::string derive_record_id(std::string_view source, std::string_view instruction) {
    std::string key;
    key.reserve(source.size() + instruction.size() + 1);
    key.append(source);
    key.push_back('\x1f');
    key.append(instruction);
    char buf[20];
    std::snprintf(buf, sizeof(buf), "h%016llx",
                  static_cast<unsigned long long>(text::fnv1a(key)));
    return buf;
}

nlohmann::ordered_json record_to_json(const QaRecord& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["instruction"] = r.instruction;
    if (r.response) j["response"] = *r.response;
    j["source"] = r.source;
    if (r.domain) j["domain"] = to_string(*r.domain);
    if (r.category) j["category"] = *r.category;
    j["response_words"] = r.response_words;
    if (r.difficulty_tier) j["difficulty_tier"] = *r.difficulty_tier;
    if (r.cluster_id) j["cluster_id"] = *r.cluster_id;
    j["status"] = to_string(r.status);
    j["attempts"] = r.attempts;
    if (r.ground_truth) j["ground_truth"] = *r.ground_truth;
    if (!r.tests.empty()) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& t : r.tests) {
            arr.push_back({{"input", t.input}, {"expected", t.expected}});
        }
        j["tests"] = arr;
    }
    return j;
}

QaRecord record_from_json(const nlohmann::json& j, std::string_view default_source) {
    if (!j.is_object()) throw ParseError("record is not an object");
    if (!j.contains("instruction") || !j.at("instruction").is_string()) {
        throw ParseError("record missing required key \"instruction\"");
    }
    QaRecord r;
    r.instruction = j.at("instruction").get<std::string>();
    if (j.contains("response") && j.at("response").is_string()) {
        r.response = j.at("response").get<std::string>();
    }
    r.source = j.value("source", std::string(default_source));
    if (j.contains("id") && j.at("id").is_string()) {
        r.id = j.at("id").get<std::string>();
    } else {
        r.id = derive_record_id(r.source, r.instruction);
    }
    if (j.contains("domain") && j.at("domain").is_string()) {
        r.domain = domain_from_string(j.at("domain").get<std::string>());
    }
    if (j.contains("category") && j.at("category").is_string()) {
        r.category = j.at("category").get<std::string>();
    }
    r.response_words = r.response ? text::count_words(*r.response) : 0;
    if (j.contains("difficulty_tier") && j.at("difficulty_tier").is_number_integer()) {
        r.difficulty_tier = j.at("difficulty_tier").get<int>();
    }
    if (j.contains("cluster_id") && j.at("cluster_id").is_number_unsigned()) {
        r.cluster_id = j.at("cluster_id").get<std::uint32_t>();
    }
    if (j.contains("status") && j.at("status").is_string()) {
        if (auto st = status_from_string(j.at("status").get<std::string>())) r.status = *st;
    }
    if (j.contains("attempts") && j.at("attempts").is_number_unsigned()) {
        r.attempts = j.at("attempts").get<std::uint32_t>();
    }
    if (j.contains("ground_truth") && j.at("ground_truth").is_string()) {
        r.ground_truth = j.at("ground_truth").get<std::string>();
    }
    if (j.contains("tests") && j.at("tests").is_array()) {
        for (const auto& t : j.at("tests")) {
            if (t.is_object() && t.contains("input") && t.contains("expected")) {
                r.tests.push_back({t.at("input").get<std::string>(),
                                   t.at("expected").get<std::string>()});
            }
        }
    }
    return r;
}

}  // namespace curator
