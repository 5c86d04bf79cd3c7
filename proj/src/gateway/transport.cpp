#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "priorlens/gateway/transport.hpp"

#include <httplib.h>

#include "priorlens/common/errors.hpp"
#include "priorlens/gateway/digest.hpp"

namespace priorlens {

std::string exchange_digest(const HttpRequest& req) {
    std::string canon;
    canon.reserve(req.method.size() + req.url.size() + req.body.size() + 2);
    canon += req.method;
    canon.push_back('\n');
    canon += req.url;
    canon.push_back('\n');
    canon += req.body;
    return sha256_hex(canon);
}

namespace {

struct UrlParts {
    std::string origin; // scheme://host[:port]
    std::string path;   // /path?query
};

UrlParts split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        raise(ErrorKind::ProviderError, "bad url: " + url);
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

} // namespace

HttplibTransport::HttplibTransport(int timeout_seconds) : timeout_seconds_(timeout_seconds) {}

HttpResponse HttplibTransport::send(const HttpRequest& req) {
    UrlParts parts = split_url(req.url);
    httplib::Client client(parts.origin);
    client.set_connection_timeout(timeout_seconds_, 0);
    client.set_read_timeout(timeout_seconds_, 0);
    client.set_follow_location(true);

    httplib::Headers headers;
    for (const auto& [k, v] : req.headers) headers.emplace(k, v);

    httplib::Result result;
    if (req.method == "GET") {
        result = client.Get(parts.path, headers);
    } else if (req.method == "POST") {
        result = client.Post(parts.path, headers, req.body,
                             req.content_type.empty() ? "application/json" : req.content_type);
    } else {
        raise(ErrorKind::ProviderError, "unsupported method: " + req.method);
    }

    if (!result)
        raise(ErrorKind::ProviderError,
              "transport failure for " + req.url + ": " + httplib::to_string(result.error()));

    return HttpResponse{result->status, result->body, HttpResponse::Source::live};
}

HttpResponse FailTransport::send(const HttpRequest& req) {
    ++attempts_;
    raise(ErrorKind::ProviderError, "network use forbidden; attempted " + req.method + " " + req.url);
}

HttpResponse CallLoggingTransport::send(const HttpRequest& req) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        Entry e{req.method, req.url, ""};
        for (const auto& [k, v] : req.headers)
            if (k == "x-template-id") e.template_id = v;
        entries_.push_back(std::move(e));
    }
    return inner_->send(req);
}

std::vector<CallLoggingTransport::Entry> CallLoggingTransport::entries() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_;
}

size_t CallLoggingTransport::count() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

void CallLoggingTransport::clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.clear();
}

} // namespace priorlens
