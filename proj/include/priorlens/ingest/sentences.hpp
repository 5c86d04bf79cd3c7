#pragma once

#include <string>
#include <vector>

namespace priorlens {

// Deterministic sentence segmentation: splits on `.`, `!`, or `?` followed
// by whitespace and an uppercase letter, guarded by an abbreviation
// stop-list ("et al.", "e.g.", "Fig.", single initials, ...).
std::vector<std::string> split_sentences(const std::string& text);

size_t count_sentences(const std::string& text);

} // namespace priorlens
