#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "priorlens/common/date.hpp"

namespace priorlens {

struct BibEntry {
    std::string key; // unique within the submission (TEI xml:id)
    std::string raw_text;
    std::optional<std::string> title;
    std::optional<int> year;
    std::vector<std::string> authors;
};

struct CitationContext {
    std::string bib_key;
    std::string sentence;
    std::string section;
};

struct ParsedSubmission {
    std::string title;
    std::string abstract_text;
    std::vector<BibEntry> bibliography;
    std::vector<CitationContext> citation_contexts;
    Date submission_date;
    std::map<std::string, std::string> section_texts;
};

} // namespace priorlens
