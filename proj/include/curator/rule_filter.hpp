#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "curator/record.hpp"

namespace curator {

struct FilterConfig {
    double english_ratio = 0.8;
    std::uint64_t min_words = 3;       // instruction + response, total
    std::uint64_t max_words = 65536;
};

struct FilterReport {
    std::uint64_t kept = 0;
    std::uint64_t dropped_non_english = 0;
    std::uint64_t dropped_incomplete = 0;
    std::uint64_t dropped_length_bounds = 0;

    std::uint64_t input_count() const {
        return kept + dropped_non_english + dropped_incomplete + dropped_length_bounds;
    }

    FilterReport& operator+=(const FilterReport& o) {
        kept += o.kept;
        dropped_non_english += o.dropped_non_english;
        dropped_incomplete += o.dropped_incomplete;
        dropped_length_bounds += o.dropped_length_bounds;
        return *this;
    }
};

/// True iff the fraction of tokens made of printable ASCII is >= threshold.
/// Empty text is false.
bool is_english(std::string_view text, double threshold = 0.8);

/// Instruction non-empty; a present response must be non-empty and either end
/// in a sentence terminator {. ! ? } ) ] digit} or contain a \boxed answer.
bool is_complete(const QaRecord& record);

/// Applies english -> complete -> length-bound rules in order; the first
/// failing rule is the one attributed in the report. Failing records get
/// status=filtered_out and are excluded from the returned stream.
std::vector<QaRecord> apply_rules(std::vector<QaRecord> records,
                                  const FilterConfig& config,
                                  FilterReport& report);

}  // namespace curator
