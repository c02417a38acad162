#include "curator/rule_filter.hpp"

#include "curator/text.hpp"

namespace curator {

bool is_english(std::string_view text, double threshold) {
    if (text.empty()) return false;
    const double ratio = text::ascii_token_ratio(text);
    if (ratio == 0.0 && text::count_words(text) == 0) return false;
    return ratio >= threshold;
}

bool is_complete(const QaRecord& record) {
    if (text::trim(record.instruction).empty()) return false;
    if (!record.response) return true;
    const std::string& resp = *record.response;
    const std::string trimmed = text::trim(resp);
    if (trimmed.empty()) return false;
    if (text::find_last_boxed(resp).has_value()) return true;
    const char last = trimmed.back();
    switch (last) {
        case '.': case '!': case '?': case '}': case ')': case ']':
            return true;
        default:
            return last >= '0' && last <= '9';
    }
}

std::vector<QaRecord> apply_rules(std::vector<QaRecord> records,
                                  const FilterConfig& config,
                                  FilterReport& report) {
    std::vector<QaRecord> kept;
    kept.reserve(records.size());
    for (auto& r : records) {
        std::string combined = r.instruction;
        if (r.response) {
            combined.push_back(' ');
            combined.append(*r.response);
        }
        const std::uint64_t total_words = text::count_words(combined);

        if (!is_english(combined, config.english_ratio)) {
            ++report.dropped_non_english;
            r.status = Status::filtered_out;
        } else if (!is_complete(r)) {
            ++report.dropped_incomplete;
            r.status = Status::filtered_out;
        } else if (total_words < config.min_words || total_words > config.max_words) {
            ++report.dropped_length_bounds;
            r.status = Status::filtered_out;
        } else {
            ++report.kept;
            kept.push_back(std::move(r));
        }
    }
    return kept;
}

}  // namespace curator
