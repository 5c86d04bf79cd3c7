#include "priorlens/discovery/discovery.hpp"

#include <cctype>
#include <map>
#include <set>

#include "priorlens/common/errors.hpp"
#include "priorlens/common/text.hpp"
#include "priorlens/gateway/digest.hpp"
#include "priorlens/prompts/templates.hpp"

namespace priorlens {

namespace {

std::string strip_list_prefix(const std::string& line) {
    std::string s = text::trim(line);
    size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > 0 && i < s.size() && (s[i] == '.' || s[i] == ')')) {
        return text::trim(s.substr(i + 1));
    }
    if (!s.empty() && (s[0] == '-' || s[0] == '*')) return text::trim(s.substr(1));
    return s;
}

std::vector<std::string> parse_query_lines(const std::string& completion, int limit) {
    std::vector<std::string> queries;
    std::set<std::string> seen;
    for (const std::string& raw : text::split_lines(completion)) {
        std::string q = strip_list_prefix(raw);
        if (q.empty()) continue;
        if (!seen.insert(text::to_lower(q)).second) continue;
        queries.push_back(q);
        if (static_cast<int>(queries.size()) == limit) break;
    }
    return queries;
}

} // namespace

MatchOutcome match_cited_works(const std::vector<BibEntry>& bibliography, ScholarClient& client) {
    MatchOutcome outcome;
    std::set<std::string> seen_ids;
    for (const auto& entry : bibliography) {
        std::string query = entry.title ? *entry.title : entry.raw_text;
        if (text::trim(query).empty()) {
            outcome.unmatched.push_back({entry.key, "no usable title or raw text"});
            continue;
        }
        auto record = client.match_title(query);
        if (!record) {
            outcome.unmatched.push_back({entry.key, "no metadata match"});
            continue;
        }
        record->origin = PaperRecord::Origin::cited;
        record->source_query.reset();
        if (seen_ids.insert(record->record_id).second)
            outcome.matched.push_back(std::move(*record));
    }
    return outcome;
}

std::vector<std::string> generate_queries(const ParsedSubmission& submission,
                                          const DiscoveryConfig& cfg, ProviderGateway& gateway,
                                          std::vector<std::string>* call_digests) {
    if (text::trim(submission.title).empty() || text::trim(submission.abstract_text).empty())
        raise(ErrorKind::EmptyInput, "query generation requires title and abstract");
    if (cfg.query_count < 1) raise(ErrorKind::ConfigError, "query_count must be >= 1");

    const auto& tmpl = prompts::get_template("query-gen");
    PromptRequest req;
    req.template_id = tmpl.id;
    req.role_context = tmpl.role_context;
    req.max_output_tokens = 512;
    req.rendered_text = prompts::render_template(
        "query-gen", {{"query_count", std::to_string(cfg.query_count)},
                      {"title", submission.title},
                      {"abstract", submission.abstract_text}});

    auto attempt = [&](const PromptRequest& r) {
        if (call_digests) call_digests->push_back(request_digest(r));
        return parse_query_lines(gateway.chat_complete(r).text, cfg.query_count);
    };

    std::vector<std::string> queries = attempt(req);
    if (static_cast<int>(queries.size()) < cfg.query_count) {
        PromptRequest retry = req;
        retry.rendered_text +=
            "\n\nThe previous response did not contain " + std::to_string(cfg.query_count) +
            " usable queries. Output exactly " + std::to_string(cfg.query_count) +
            " distinct queries, one per line.";
        queries = attempt(retry);
        if (static_cast<int>(queries.size()) < cfg.query_count)
            raise(ErrorKind::MalformedCompletion,
                  "query generation produced " + std::to_string(queries.size()) + " of " +
                      std::to_string(cfg.query_count) + " queries after reprompt");
    }
    return queries;
}

std::vector<PaperRecord> discover_uncited(const std::vector<std::string>& queries,
                                          const std::string& submission_title,
                                          const Date& submission_date, const DiscoveryConfig& cfg,
                                          ScholarClient& client) {
    if (queries.empty()) raise(ErrorKind::EmptyInput, "no discovery queries");
    const std::string normalized_submission = text::normalize_title(submission_title);

    std::vector<PaperRecord> out;
    std::set<std::string> seen_ids;
    for (const auto& query : queries) {
        for (PaperRecord record : client.search(query, cfg.results_per_query)) {
            record.origin = PaperRecord::Origin::discovered;
            record.source_query = query;
            if (!seen_ids.insert(record.record_id).second) continue;
            if (text::normalize_title(record.title) == normalized_submission) continue;
            if (cfg.date_filter_enabled) {
                if (record.publication_date) {
                    if (*record.publication_date > submission_date) continue;
                } else {
                    record.missing_date_flagged = true;
                }
            }
            out.push_back(std::move(record));
        }
    }
    return out;
}

std::vector<PaperRecord> merge_candidates(const std::vector<PaperRecord>& cited,
                                          const std::vector<PaperRecord>& discovered) {
    std::vector<PaperRecord> out;
    std::vector<bool> from_first;
    std::map<std::string, size_t> by_id;
    std::map<std::string, size_t> by_title;

    auto add = [&](const PaperRecord& record, bool first_arg) {
        if (by_id.count(record.record_id)) return;
        std::string key = text::normalize_title(record.title);
        if (!key.empty()) {
            auto it = by_title.find(key);
            if (it != by_title.end()) {
                size_t pos = it->second;
                if (!from_first[pos] && !first_arg &&
                    record.record_id < out[pos].record_id) {
                    // Both discovered: lexicographically smaller id wins.
                    by_id.erase(out[pos].record_id);
                    out[pos] = record;
                    by_id[record.record_id] = pos;
                }
                return;
            }
            by_title[key] = out.size();
        }
        by_id[record.record_id] = out.size();
        out.push_back(record);
        from_first.push_back(first_arg);
    };

    for (const auto& r : cited) add(r, true);
    for (const auto& r : discovered) add(r, false);
    return out;
}

} // namespace priorlens
