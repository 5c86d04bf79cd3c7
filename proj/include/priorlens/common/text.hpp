#pragma once

#include <string>
#include <vector>

namespace priorlens::text {

// Lowercase + collapse runs of whitespace to single spaces + strip
// punctuation. Idempotent; used for "exact title match" filtering and
// title-based deduplication.
std::string normalize_title(const std::string& title);

std::string collapse_whitespace(const std::string& s);
std::string trim(const std::string& s);
std::string to_lower(const std::string& s);

size_t word_count(const std::string& s);

// Truncates to at most max_words whitespace-separated words.
std::string truncate_words(const std::string& s, size_t max_words);

std::vector<std::string> split_lines(const std::string& s);

bool starts_with(const std::string& s, const std::string& prefix);

} // namespace priorlens::text
