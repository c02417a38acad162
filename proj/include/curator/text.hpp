#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace curator::text {

/// Splits on Unicode whitespace (ASCII whitespace plus NBSP, the U+2000 block,
/// line/paragraph separators, ideographic space, ...). Empty tokens dropped.
std::vector<std::string_view> split_words(std::string_view s);

/// Whitespace-token count of `s`; 0 for empty/blank text.
std::size_t count_words(std::string_view s);

/// Fraction of whitespace-separated tokens made only of printable ASCII
/// (letters, digits, common punctuation). 0 for empty text.
double ascii_token_ratio(std::string_view s);

/// Content of the last `\boxed{...}` span, brace-balanced, trimmed.
/// std::nullopt when there is no span or its braces never balance.
std::optional<std::string> find_last_boxed(std::string_view s);

/// Lowercase, punctuation stripped to spaces, whitespace collapsed, split.
std::vector<std::string> normalize_tokens(std::string_view s);

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view s);

}  // namespace curator::text
