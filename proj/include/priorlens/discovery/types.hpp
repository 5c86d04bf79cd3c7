#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "priorlens/common/date.hpp"

namespace priorlens {

struct PaperRecord {
    std::string record_id; // canonical metadata-API identifier
    std::string title;
    std::string abstract_text; // may be empty; ranking falls back to title-only
    std::vector<std::string> authors;
    std::optional<Date> publication_date;
    std::optional<std::string> venue;

    enum class Origin { cited, discovered };
    Origin origin = Origin::cited;
    std::optional<std::string> source_query; // present iff origin == discovered

    std::map<std::string, std::string> external_ids; // e.g. "ArXiv", "ACL", "DOI"
    std::optional<std::string> open_access_pdf_url;

    // Passed the date filter without a publication date.
    bool missing_date_flagged = false;
};

struct DiscoveryConfig {
    int query_count = 5;
    int results_per_query = 20;
    bool date_filter_enabled = true;
};

} // namespace priorlens
