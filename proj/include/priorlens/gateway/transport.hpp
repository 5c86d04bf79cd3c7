#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace priorlens {

struct HttpRequest {
    std::string method = "GET";
    std::string url;
    std::string body;
    std::string content_type;
    // Headers carry credentials and routing hints; they are never part of
    // fixture digests and never written to disk.
    std::vector<std::pair<std::string, std::string>> headers;
    // Distinguishes repeated judge runs in the response cache without
    // changing the wire request or its fixture key.
    std::string cache_variant;
};

struct HttpResponse {
    int status = 0;
    std::string body;
    enum class Source { live, fixture, cache } source = Source::live;
};

class Transport {
public:
    virtual ~Transport() = default;
    virtual HttpResponse send(const HttpRequest& req) = 0;
};

// Content digest of the wire-visible request parts (method, url, body).
std::string exchange_digest(const HttpRequest& req);

// Live HTTP(S) transport backed by cpp-httplib.
class HttplibTransport final : public Transport {
public:
    explicit HttplibTransport(int timeout_seconds = 60);
    HttpResponse send(const HttpRequest& req) override;

private:
    int timeout_seconds_;
};

// Throws on any use. Replay-closure tests inject this beneath the fixture
// layer to prove a replay run performs zero network operations.
class FailTransport final : public Transport {
public:
    HttpResponse send(const HttpRequest& req) override;
    int attempted_sends() const { return attempts_; }

private:
    int attempts_ = 0;
};

// Decorator recording every request that reaches the wrapped transport.
class CallLoggingTransport final : public Transport {
public:
    struct Entry {
        std::string method;
        std::string url;
        std::string template_id; // from the x-template-id header, if any
    };

    explicit CallLoggingTransport(std::shared_ptr<Transport> inner) : inner_(std::move(inner)) {}

    HttpResponse send(const HttpRequest& req) override;

    std::vector<Entry> entries() const;
    size_t count() const;
    void clear();

private:
    std::shared_ptr<Transport> inner_;
    mutable std::mutex mutex_;
    std::vector<Entry> entries_;
};

} // namespace priorlens
