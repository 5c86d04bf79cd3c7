#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "priorlens/discovery/types.hpp"
#include "priorlens/gateway/transport.hpp"

namespace priorlens {

std::string url_encode(const std::string& value);

// Scholarly-metadata API client (Semantic Scholar Graph API compatible):
// title match and relevance search over HTTPS + JSON.
class ScholarClient {
public:
    ScholarClient(std::shared_ptr<Transport> transport, std::string base_url,
                  std::string api_key = "");

    // Closest paper for a title, or nullopt when the API reports no match.
    std::optional<PaperRecord> match_title(const std::string& title);

    // Relevance search; returns up to `limit` records.
    std::vector<PaperRecord> search(const std::string& query, int limit);

private:
    HttpResponse get(const std::string& path_and_query);

    std::shared_ptr<Transport> transport_;
    std::string base_url_;
    std::string api_key_;
};

} // namespace priorlens
