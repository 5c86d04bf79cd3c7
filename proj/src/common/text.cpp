#include "priorlens/common/text.hpp"

#include <cctype>
#include <sstream>

namespace priorlens::text {

namespace {
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
} // namespace

std::string to_lower(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string collapse_whitespace(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = false;
    for (char c : s) {
        if (is_space(c)) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out.push_back(' ');
        in_space = false;
        out.push_back(c);
    }
    return out;
}

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

std::string normalize_title(const std::string& title) {
    std::string kept;
    kept.reserve(title.size());
    for (char c : title) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalnum(u) || u >= 0x80) {
            kept.push_back(static_cast<char>(std::tolower(u)));
        } else if (is_space(c) || std::ispunct(u)) {
            // Punctuation separates tokens rather than vanishing, so
            // "end-to-end" and "end to end" normalize identically.
            kept.push_back(' ');
        }
    }
    return collapse_whitespace(kept);
}

size_t word_count(const std::string& s) {
    std::istringstream in(s);
    std::string w;
    size_t n = 0;
    while (in >> w) ++n;
    return n;
}

std::string truncate_words(const std::string& s, size_t max_words) {
    std::istringstream in(s);
    std::string w, out;
    size_t n = 0;
    while (in >> w && n < max_words) {
        if (n) out.push_back(' ');
        out += w;
        ++n;
    }
    return n < max_words ? s : out;
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : s) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    lines.push_back(cur);
    return lines;
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

} // namespace priorlens::text
