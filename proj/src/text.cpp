#include "curator/text.hpp"

#include <cctype>

namespace curator::text {

namespace {

bool is_unicode_space(char32_t cp) {
    switch (cp) {
        case U'\t': case U'\n': case U'\v': case U'\f': case U'\r': case U' ':
        case 0x0085: case 0x00A0: case 0x1680:
        case 0x2000: case 0x2001: case 0x2002: case 0x2003: case 0x2004:
        case 0x2005: case 0x2006: case 0x2007: case 0x2008: case 0x2009:
        case 0x200A: case 0x2028: case 0x2029: case 0x202F: case 0x205F:
        case 0x3000:
            return true;
        default:
            return false;
    }
}

// Decodes one UTF-8 code point at s[i]; advances i past it. Invalid bytes are
// consumed one at a time and returned as-is so malformed input never loops.
char32_t next_codepoint(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    char32_t cp = b0;
    if (b0 >= 0xF0) { len = 4; cp = b0 & 0x07u; }
    else if (b0 >= 0xE0) { len = 3; cp = b0 & 0x0Fu; }
    else if (b0 >= 0xC0) { len = 2; cp = b0 & 0x1Fu; }
    if (i + len > s.size()) len = 1;
    for (std::size_t k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0u) != 0x80u) { len = 1; cp = b0; break; }
        cp = (cp << 6) | (b & 0x3Fu);
    }
    i += len;
    return cp;
}

}  // namespace

std::vector<std::string_view> split_words(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    std::size_t start = 0;
    bool in_word = false;
    while (i < s.size()) {
        const std::size_t at = i;
        const char32_t cp = next_codepoint(s, i);
        if (is_unicode_space(cp)) {
            if (in_word) {
                out.push_back(s.substr(start, at - start));
                in_word = false;
            }
        } else if (!in_word) {
            start = at;
            in_word = true;
        }
    }
    if (in_word) out.push_back(s.substr(start));
    return out;
}

std::size_t count_words(std::string_view s) { return split_words(s).size(); }

double ascii_token_ratio(std::string_view s) {
    const auto tokens = split_words(s);
    if (tokens.empty()) return 0.0;
    std::size_t good = 0;
    for (const auto tok : tokens) {
        bool ok = true;
        for (const char c : tok) {
            const auto u = static_cast<unsigned char>(c);
            if (u < 0x21 || u > 0x7E) { ok = false; break; }
        }
        if (ok) ++good;
    }
    return static_cast<double>(good) / static_cast<double>(tokens.size());
}

std::optional<std::string> find_last_boxed(std::string_view s) {
    static constexpr std::string_view kMarker = "\\boxed{";
    const auto pos = s.rfind(kMarker);
    if (pos == std::string_view::npos) return std::nullopt;
    std::size_t i = pos + kMarker.size();
    int depth = 1;
    const std::size_t content_start = i;
    while (i < s.size()) {
        const char c = s[i];
        if (c == '\\' && i + 1 < s.size()) {
            i += 2;  // escaped char, braces included
            continue;
        }
        if (c == '{') ++depth;
        else if (c == '}') {
            --depth;
            if (depth == 0) return trim(s.substr(content_start, i - content_start));
        }
        ++i;
    }
    return std::nullopt;  // ran out before braces balanced
}

std::vector<std::string> normalize_tokens(std::string_view s) {
    std::string scratch;
    scratch.reserve(s.size());
    for (const char c : s) {
        const auto u = static_cast<unsigned char>(c);
        if (std::isalnum(u)) scratch.push_back(static_cast<char>(std::tolower(u)));
        else if (u < 0x80) scratch.push_back(' ');  // ASCII punctuation/space
        else scratch.push_back(c);                  // non-ASCII bytes kept
    }
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < scratch.size()) {
        while (i < scratch.size() && scratch[i] == ' ') ++i;
        std::size_t j = i;
        while (j < scratch.size() && scratch[j] != ' ') ++j;
        if (j > i) out.emplace_back(scratch.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace curator::text
