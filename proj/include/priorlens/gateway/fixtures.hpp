#pragma once

#include <chrono>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "priorlens/common/clock.hpp"
#include "priorlens/gateway/rate_limiter.hpp"
#include "priorlens/gateway/transport.hpp"

namespace priorlens {

enum class FixtureMode { record, replay, live };

FixtureMode parse_fixture_mode(const std::string& name);
std::string fixture_mode_name(FixtureMode mode);

// One recorded HTTP exchange per file under <root>/<first-2-hex>/<digest>.json.
// The same store backs both fixtures (record/replay bundles) and the shared
// response cache.
class ExchangeStore {
public:
    explicit ExchangeStore(std::filesystem::path root);

    std::optional<HttpResponse> lookup(const std::string& digest) const;
    void save(const std::string& digest, const HttpRequest& req, const HttpResponse& resp) const;

    std::filesystem::path entry_path(const std::string& digest) const;
    const std::filesystem::path& root() const { return root_; }

private:
    std::filesystem::path root_;
};

struct RetryPolicy {
    int attempts = 3;
    std::chrono::milliseconds initial_backoff{1000};
};

struct ManagedTransportOptions {
    FixtureMode mode = FixtureMode::live;
    std::filesystem::path fixture_root; // used in record/replay modes
    std::filesystem::path cache_root;   // empty disables the response cache
    RetryPolicy retry;
    std::shared_ptr<RateLimiter> limiter;
    std::shared_ptr<Clock> clock;
};

// The gateway's transport core: content-addressed fixtures, the shared
// response cache, rate limiting, and retry around a live transport.
//
//   replay : every request must resolve from cache or fixture; the inner
//            transport is never touched.
//   record : live dispatch, successful exchanges saved as fixtures.
//   live   : live dispatch, cache only.
class ManagedTransport final : public Transport {
public:
    ManagedTransport(std::shared_ptr<Transport> inner, ManagedTransportOptions options);

    HttpResponse send(const HttpRequest& req) override;

    FixtureMode mode() const { return options_.mode; }

private:
    HttpResponse dispatch_with_retry(const HttpRequest& req);
    std::string cache_key(const HttpRequest& req, const std::string& digest) const;

    std::shared_ptr<Transport> inner_;
    ManagedTransportOptions options_;
    std::optional<ExchangeStore> fixtures_;
    std::optional<ExchangeStore> cache_;
};

std::string base64_encode(const std::string& bytes);
std::string base64_decode(const std::string& text);

} // namespace priorlens
