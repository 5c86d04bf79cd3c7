#pragma once

#include <string>
#include <vector>

#include "priorlens/discovery/scholar_client.hpp"
#include "priorlens/discovery/types.hpp"
#include "priorlens/gateway/gateway.hpp"
#include "priorlens/ingest/types.hpp"

namespace priorlens {

struct UnmatchedEntry {
    std::string bib_key;
    std::string reason;
};

struct MatchOutcome {
    std::vector<PaperRecord> matched; // origin=cited, deduplicated by record_id
    std::vector<UnmatchedEntry> unmatched;
};

/// Resolves bibliography entries to canonical metadata records.
MatchOutcome match_cited_works(const std::vector<BibEntry>& bibliography, ScholarClient& client);

/// Exactly cfg.query_count distinct keyword queries, parsed from a
/// one-per-line completion; one reprompt before MalformedCompletion.
std::vector<std::string> generate_queries(const ParsedSubmission& submission,
                                          const DiscoveryConfig& cfg, ProviderGateway& gateway,
                                          std::vector<std::string>* call_digests = nullptr);

/// Union of per-query search results with the title and date filters applied.
std::vector<PaperRecord> discover_uncited(const std::vector<std::string>& queries,
                                          const std::string& submission_title,
                                          const Date& submission_date, const DiscoveryConfig& cfg,
                                          ScholarClient& client);

/// Deduplicates by record_id, then by normalized title. First argument wins
/// on id collisions; title collisions among the second argument keep the
/// lexicographically smaller record_id.
std::vector<PaperRecord> merge_candidates(const std::vector<PaperRecord>& cited,
                                          const std::vector<PaperRecord>& discovered);

} // namespace priorlens
