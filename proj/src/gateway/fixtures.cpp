#include "priorlens/gateway/fixtures.hpp"

#include <openssl/evp.h>

#include <nlohmann/json.hpp>

#include "priorlens/common/errors.hpp"
#include "priorlens/common/fs.hpp"
#include "priorlens/gateway/digest.hpp"

namespace priorlens {

using nlohmann::json;

FixtureMode parse_fixture_mode(const std::string& name) {
    if (name == "record") return FixtureMode::record;
    if (name == "replay") return FixtureMode::replay;
    if (name == "live") return FixtureMode::live;
    raise(ErrorKind::ConfigError, "unknown fixture mode: " + name);
}

std::string fixture_mode_name(FixtureMode mode) {
    switch (mode) {
        case FixtureMode::record: return "record";
        case FixtureMode::replay: return "replay";
        case FixtureMode::live: return "live";
    }
    return "live";
}

std::string base64_encode(const std::string& bytes) {
    std::string out;
    out.resize(4 * ((bytes.size() + 2) / 3) + 1);
    int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                            reinterpret_cast<const unsigned char*>(bytes.data()),
                            static_cast<int>(bytes.size()));
    out.resize(static_cast<size_t>(n));
    return out;
}

std::string base64_decode(const std::string& text) {
    if (text.empty()) return {};
    if (text.size() % 4 != 0) raise(ErrorKind::SchemaError, "bad base64 length");
    std::string out;
    out.resize(3 * (text.size() / 4));
    int n = EVP_DecodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                            reinterpret_cast<const unsigned char*>(text.data()),
                            static_cast<int>(text.size()));
    if (n < 0) raise(ErrorKind::SchemaError, "bad base64 payload");
    size_t pad = 0;
    if (text.size() >= 1 && text[text.size() - 1] == '=') ++pad;
    if (text.size() >= 2 && text[text.size() - 2] == '=') ++pad;
    out.resize(static_cast<size_t>(n) - pad);
    return out;
}

ExchangeStore::ExchangeStore(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path ExchangeStore::entry_path(const std::string& digest) const {
    return root_ / digest.substr(0, 2) / (digest + ".json");
}

std::optional<HttpResponse> ExchangeStore::lookup(const std::string& digest) const {
    auto raw = fs::read_file_if_exists(entry_path(digest));
    if (!raw) return std::nullopt;
    json entry = json::parse(*raw);
    HttpResponse resp;
    resp.status = entry.at("response").at("status").get<int>();
    resp.body = base64_decode(entry.at("response").at("body_b64").get<std::string>());
    return resp;
}

void ExchangeStore::save(const std::string& digest, const HttpRequest& req,
                         const HttpResponse& resp) const {
    json entry{
        {"digest", digest},
        {"request", {{"method", req.method}, {"url", req.url}, {"body_b64", base64_encode(req.body)}}},
        {"response", {{"status", resp.status}, {"body_b64", base64_encode(resp.body)}}},
    };
    fs::atomic_write(entry_path(digest), entry.dump(2) + "\n");
}

ManagedTransport::ManagedTransport(std::shared_ptr<Transport> inner, ManagedTransportOptions options)
    : inner_(std::move(inner)), options_(std::move(options)) {
    if (options_.mode != FixtureMode::live) {
        if (options_.fixture_root.empty())
            raise(ErrorKind::ConfigError, "fixture root required in record/replay mode");
        fixtures_.emplace(options_.fixture_root);
    }
    if (!options_.cache_root.empty()) cache_.emplace(options_.cache_root);
    if (!options_.clock) options_.clock = std::make_shared<SystemClock>();
}

std::string ManagedTransport::cache_key(const HttpRequest& req, const std::string& digest) const {
    if (req.cache_variant.empty()) return digest;
    return sha256_hex(digest + ":" + req.cache_variant);
}

HttpResponse ManagedTransport::send(const HttpRequest& req) {
    const std::string digest = exchange_digest(req);
    const std::string key = cache_key(req, digest);

    if (cache_) {
        if (auto hit = cache_->lookup(key)) {
            hit->source = HttpResponse::Source::cache;
            return *hit;
        }
    }

    if (options_.mode == FixtureMode::replay) {
        auto hit = fixtures_->lookup(digest);
        if (!hit)
            raise(ErrorKind::FixtureMiss,
                  "no fixture for digest " + digest + " (" + req.method + " " + req.url + ")");
        hit->source = HttpResponse::Source::fixture;
        if (cache_) cache_->save(key, req, *hit);
        return *hit;
    }

    HttpResponse resp = dispatch_with_retry(req);
    if (resp.status >= 200 && resp.status < 300) {
        if (options_.mode == FixtureMode::record) fixtures_->save(digest, req, resp);
        if (cache_) cache_->save(key, req, resp);
    }
    return resp;
}

HttpResponse ManagedTransport::dispatch_with_retry(const HttpRequest& req) {
    auto backoff = options_.retry.initial_backoff;
    for (int attempt = 1;; ++attempt) {
        bool transient = false;
        std::string cause;
        try {
            if (options_.limiter) options_.limiter->acquire();
            HttpResponse resp = inner_->send(req);
            if (resp.status == 429 || resp.status >= 500) {
                transient = true;
                cause = "status " + std::to_string(resp.status);
            } else {
                return resp;
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ProviderError) throw;
            transient = true;
            cause = e.what();
        }
        if (transient && attempt >= options_.retry.attempts) {
            Error err(ErrorKind::ProviderError, "retries exhausted for " + req.url + ": " + cause);
            err.attempts = attempt;
            throw err;
        }
        options_.clock->sleep_for(backoff);
        backoff *= 2;
    }
}

} // namespace priorlens
