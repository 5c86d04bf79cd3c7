#include "priorlens/gateway/gateway.hpp"

#include <cmath>
#include <map>
#include <nlohmann/json.hpp>

#include "priorlens/common/errors.hpp"
#include "priorlens/common/parallel.hpp"
#include "priorlens/common/text.hpp"
#include "priorlens/prompts/templates.hpp"

namespace priorlens {

using nlohmann::json;

ProviderGateway::ProviderGateway(std::shared_ptr<Transport> transport, GatewayConfig config)
    : transport_(std::move(transport)), config_(std::move(config)) {}

int ProviderGateway::estimate_tokens(const std::string& text) {
    return static_cast<int>((text.size() + 3) / 4);
}

CompletionResult ProviderGateway::chat_complete(const PromptRequest& req,
                                                const std::string& cache_variant) {
    if (text::trim(req.rendered_text).empty())
        raise(ErrorKind::EmptyInput, "rendered_text is empty");
    if (!prompts::is_registered_template(req.template_id))
        raise(ErrorKind::ConfigError, "unregistered template_id: " + req.template_id);
    if (req.temperature < 0.0 || req.temperature > 1.0)
        raise(ErrorKind::ConfigError, "temperature outside [0,1]");
    if (req.max_output_tokens <= 0)
        raise(ErrorKind::ConfigError, "max_output_tokens must be positive");

    const int budget =
        static_cast<int>(config_.context_budget_tokens * config_.budget_safety_factor);
    const int estimate = estimate_tokens(req.rendered_text) + estimate_tokens(req.role_context);
    if (estimate > budget)
        raise(ErrorKind::BudgetExceeded, "estimated " + std::to_string(estimate) +
                                             " tokens exceeds budget " + std::to_string(budget));

    json messages = json::array();
    if (!req.role_context.empty())
        messages.push_back({{"role", "system"}, {"content", req.role_context}});
    messages.push_back({{"role", "user"}, {"content", req.rendered_text}});
    json body{
        {"model", config_.chat_model},
        {"messages", messages},
        {"temperature", req.temperature},
        {"max_tokens", req.max_output_tokens},
    };

    HttpRequest http;
    http.method = "POST";
    http.url = config_.chat_endpoint;
    http.body = body.dump();
    http.content_type = "application/json";
    http.cache_variant = cache_variant;
    http.headers.emplace_back("x-template-id", req.template_id);
    if (!config_.chat_api_key.empty())
        http.headers.emplace_back("Authorization", "Bearer " + config_.chat_api_key);

    HttpResponse resp = transport_->send(http);
    if (resp.status < 200 || resp.status >= 300)
        raise(ErrorKind::ProviderError,
              "chat endpoint returned status " + std::to_string(resp.status));

    CompletionResult result;
    try {
        json parsed = json::parse(resp.body);
        result.text = parsed.at("choices").at(0).at("message").at("content").get<std::string>();
        if (parsed.contains("model")) result.provider_id = parsed["model"].get<std::string>();
        if (parsed.contains("usage")) {
            result.usage.prompt_tokens = parsed["usage"].value("prompt_tokens", 0);
            result.usage.completion_tokens = parsed["usage"].value("completion_tokens", 0);
        }
    } catch (const json::exception& e) {
        raise(ErrorKind::ProviderError, std::string("unparseable chat response: ") + e.what());
    }
    if (result.provider_id.empty()) result.provider_id = config_.chat_model;
    result.from_replay = resp.source != HttpResponse::Source::live;
    if (text::trim(result.text).empty())
        raise(ErrorKind::EmptyCompletion, "provider returned empty completion");
    return result;
}

std::vector<EmbeddingVector> ProviderGateway::embed(const std::vector<std::string>& texts) {
    if (texts.empty()) return {};
    for (const auto& t : texts)
        if (text::collapse_whitespace(t).empty())
            raise(ErrorKind::EmptyInput, "embedding input is empty after normalization");

    // Dedupe so identical texts map to one upstream request and one cached
    // vector within the run.
    std::vector<std::string> unique;
    std::map<std::string, size_t> position;
    for (const auto& t : texts)
        if (position.emplace(t, unique.size()).second) unique.push_back(t);

    std::vector<EmbeddingVector> fetched(unique.size());
    parallel_for(unique.size(), config_.embed_parallelism,
                 [&](size_t i) { fetched[i] = embed_one(unique[i]); });

    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(fetched[position.at(t)]);
    return out;
}

EmbeddingVector ProviderGateway::embed_one(const std::string& input) {
    json body{{"model", config_.embed_model}, {"input", json::array({input})}};

    HttpRequest http;
    http.method = "POST";
    http.url = config_.embed_endpoint;
    http.body = body.dump();
    http.content_type = "application/json";
    if (!config_.embed_api_key.empty())
        http.headers.emplace_back("Authorization", "Bearer " + config_.embed_api_key);

    HttpResponse resp = transport_->send(http);
    if (resp.status < 200 || resp.status >= 300)
        raise(ErrorKind::ProviderError,
              "embedding endpoint returned status " + std::to_string(resp.status));

    EmbeddingVector vec;
    vec.model_id = config_.embed_model;
    try {
        json parsed = json::parse(resp.body);
        const json& data = parsed.at("data").at(0).at("embedding");
        vec.values.reserve(data.size());
        for (const auto& v : data) vec.values.push_back(v.get<double>());
    } catch (const json::exception& e) {
        raise(ErrorKind::ProviderError, std::string("unparseable embedding response: ") + e.what());
    }
    if (config_.embed_dim > 0 && static_cast<int>(vec.values.size()) != config_.embed_dim)
        raise(ErrorKind::ProviderError,
              "embedding dimension " + std::to_string(vec.values.size()) + " != configured " +
                  std::to_string(config_.embed_dim));
    for (double v : vec.values)
        if (!std::isfinite(v)) raise(ErrorKind::ProviderError, "non-finite embedding component");
    return vec;
}

} // namespace priorlens
