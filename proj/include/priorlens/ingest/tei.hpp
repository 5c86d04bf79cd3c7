#pragma once

#include <string>
#include <vector>

#include "priorlens/ingest/types.hpp"

namespace priorlens {

struct ContextExtraction {
    std::vector<CitationContext> contexts;
    int skipped_refs = 0; // in-text references that resolve to no bib entry
};

struct TeiParseResult {
    ParsedSubmission submission;
    std::vector<std::string> warnings;
    int skipped_refs = 0;
};

// Parses a TEI document produced by the structure-extraction service into
// the submission representation. Pure: identical bytes yield an identical
// result. Throws ParseFailed on malformed XML and MissingTitle when the
// header carries no title.
TeiParseResult parse_tei(const std::string& tei_xml, const Date& submission_date);

// Citation contexts only: one entry per (sentence, resolved reference) pair,
// deduplicated per bib key; unresolvable references are skipped and counted.
ContextExtraction extract_citation_contexts(const std::string& tei_xml);

} // namespace priorlens
