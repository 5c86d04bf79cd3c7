#include "priorlens/ingest/sentences.hpp"

#include <cctype>
#include <unordered_set>

#include "priorlens/common/text.hpp"

namespace priorlens {

namespace {

const std::unordered_set<std::string>& abbreviations() {
    static const std::unordered_set<std::string> set = {
        "al",  "e.g", "i.e", "fig", "figs", "eq",  "eqs",  "sec", "secs",
        "tab", "ref", "refs", "vs",  "cf",  "etc", "dr",   "mr",  "ms",
        "prof", "no", "resp", "approx", "dept", "st", "jr", "vol",
    };
    return set;
}

// Token of letters/digits/dots immediately preceding position `end`.
std::string token_before(const std::string& s, size_t end) {
    size_t b = end;
    while (b > 0) {
        char c = s[b - 1];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '.')
            --b;
        else
            break;
    }
    return s.substr(b, end - b);
}

bool is_abbreviation_end(const std::string& s, size_t dot_pos) {
    if (s[dot_pos] != '.') return false;
    std::string token = text::to_lower(token_before(s, dot_pos));
    if (token.empty()) return false;
    // Single initials ("J. Smith") never terminate a sentence.
    if (token.size() == 1 && std::isalpha(static_cast<unsigned char>(token[0]))) return true;
    return abbreviations().count(token) > 0;
}

} // namespace

std::vector<std::string> split_sentences(const std::string& input) {
    std::vector<std::string> sentences;
    std::string text = input;
    size_t start = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '.' && c != '!' && c != '?') continue;
        if (c == '.' && is_abbreviation_end(text, i)) continue;

        // Absorb closing quotes/brackets after the terminator.
        size_t j = i + 1;
        while (j < text.size() && (text[j] == ')' || text[j] == ']' || text[j] == '"' || text[j] == '\'')) ++j;

        size_t k = j;
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
        bool boundary = k > j && k < text.size() && std::isupper(static_cast<unsigned char>(text[k]));
        if (boundary) {
            std::string sentence = text::trim(text.substr(start, j - start));
            if (!sentence.empty()) sentences.push_back(sentence);
            start = k;
            i = k - 1;
        }
    }
    std::string tail = text::trim(text.substr(start));
    if (!tail.empty()) sentences.push_back(tail);
    return sentences;
}

size_t count_sentences(const std::string& text) { return split_sentences(text).size(); }

} // namespace priorlens
