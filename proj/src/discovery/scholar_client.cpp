#include "priorlens/discovery/scholar_client.hpp"

#include <nlohmann/json.hpp>

#include "priorlens/common/errors.hpp"

namespace priorlens {

using nlohmann::json;

namespace {

constexpr const char* kFields =
    "title,abstract,authors,year,publicationDate,venue,externalIds,openAccessPdf";

PaperRecord parse_record(const json& j) {
    PaperRecord r;
    r.record_id = j.value("paperId", "");
    r.title = j.value("title", "");
    if (j.contains("abstract") && j["abstract"].is_string())
        r.abstract_text = j["abstract"].get<std::string>();
    if (j.contains("authors") && j["authors"].is_array())
        for (const auto& a : j["authors"])
            if (a.contains("name")) r.authors.push_back(a["name"].get<std::string>());
    if (j.contains("publicationDate") && j["publicationDate"].is_string())
        r.publication_date = Date::parse(j["publicationDate"].get<std::string>());
    if (!r.publication_date && j.contains("year") && j["year"].is_number_integer())
        r.publication_date = Date{j["year"].get<int>(), 1, 1};
    if (j.contains("venue") && j["venue"].is_string() && !j["venue"].get<std::string>().empty())
        r.venue = j["venue"].get<std::string>();
    if (j.contains("externalIds") && j["externalIds"].is_object())
        for (const auto& [key, value] : j["externalIds"].items())
            if (value.is_string()) r.external_ids[key] = value.get<std::string>();
    if (j.contains("openAccessPdf") && j["openAccessPdf"].is_object() &&
        j["openAccessPdf"].contains("url") && j["openAccessPdf"]["url"].is_string())
        r.open_access_pdf_url = j["openAccessPdf"]["url"].get<std::string>();
    return r;
}

} // namespace

std::string url_encode(const std::string& value) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(value.size());
    for (unsigned char c : value) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
            out.push_back(static_cast<char>(c));
        } else if (c == ' ') {
            out.push_back('+');
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xf]);
        }
    }
    return out;
}

ScholarClient::ScholarClient(std::shared_ptr<Transport> transport, std::string base_url,
                             std::string api_key)
    : transport_(std::move(transport)), base_url_(std::move(base_url)),
      api_key_(std::move(api_key)) {
    while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
}

HttpResponse ScholarClient::get(const std::string& path_and_query) {
    HttpRequest req;
    req.method = "GET";
    req.url = base_url_ + path_and_query;
    if (!api_key_.empty()) req.headers.emplace_back("x-api-key", api_key_);
    return transport_->send(req);
}

std::optional<PaperRecord> ScholarClient::match_title(const std::string& title) {
    HttpResponse resp =
        get("/paper/search/match?query=" + url_encode(title) + "&fields=" + kFields);
    if (resp.status == 404) return std::nullopt; // API contract: no match found
    if (resp.status < 200 || resp.status >= 300)
        raise(ErrorKind::ProviderError,
              "metadata API title match returned status " + std::to_string(resp.status));
    try {
        json parsed = json::parse(resp.body);
        if (!parsed.contains("data") || !parsed["data"].is_array() || parsed["data"].empty())
            return std::nullopt;
        PaperRecord r = parse_record(parsed["data"][0]);
        if (r.record_id.empty() || r.title.empty()) return std::nullopt;
        return r;
    } catch (const json::exception& e) {
        raise(ErrorKind::ProviderError, std::string("unparseable match response: ") + e.what());
    }
}

std::vector<PaperRecord> ScholarClient::search(const std::string& query, int limit) {
    HttpResponse resp = get("/paper/search?query=" + url_encode(query) +
                            "&limit=" + std::to_string(limit) + "&fields=" + kFields);
    if (resp.status < 200 || resp.status >= 300)
        raise(ErrorKind::ProviderError,
              "metadata API search returned status " + std::to_string(resp.status));
    std::vector<PaperRecord> out;
    try {
        json parsed = json::parse(resp.body);
        if (!parsed.contains("data") || !parsed["data"].is_array()) return out;
        for (const auto& item : parsed["data"]) {
            PaperRecord r = parse_record(item);
            if (!r.record_id.empty() && !r.title.empty()) out.push_back(std::move(r));
            if (static_cast<int>(out.size()) >= limit) break;
        }
    } catch (const json::exception& e) {
        raise(ErrorKind::ProviderError, std::string("unparseable search response: ") + e.what());
    }
    return out;
}

} // namespace priorlens
