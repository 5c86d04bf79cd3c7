#pragma once

#include <memory>
#include <string>
#include <vector>

#include "priorlens/gateway/prompt.hpp"
#include "priorlens/gateway/transport.hpp"

namespace priorlens {

struct GatewayConfig {
    std::string chat_endpoint = "https://api.openai.com/v1/chat/completions";
    std::string chat_model = "gpt-4.1";
    std::string chat_api_key; // environment only, never persisted

    std::string embed_endpoint = "https://model-apis.example.org/v1/embeddings";
    std::string embed_model = "specter2";
    std::string embed_api_key;
    int embed_dim = 768;

    int context_budget_tokens = 128000;
    double budget_safety_factor = 0.9;
    int embed_parallelism = 4;
};

/// Uniform access to the chat-completion and embedding providers. All
/// traffic flows through the injected transport, which supplies caching,
/// fixtures, rate limiting, and retry; this class owns request shaping,
/// budget enforcement, and response parsing.
class ProviderGateway {
public:
    ProviderGateway(std::shared_ptr<Transport> transport, GatewayConfig config);

    /// Sends one rendered prompt. `cache_variant` distinguishes otherwise
    /// identical requests in the response cache (repeated judge runs) without
    /// changing the wire request.
    CompletionResult chat_complete(const PromptRequest& req,
                                   const std::string& cache_variant = "");

    /// One vector per input text, order preserved. Each distinct text is a
    /// separate upstream request, so the response cache is keyed exactly by
    /// (model, text).
    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts);

    /// chars/4 heuristic used for the context budget check.
    static int estimate_tokens(const std::string& text);

    const GatewayConfig& config() const { return config_; }
    Transport& transport() { return *transport_; }

private:
    EmbeddingVector embed_one(const std::string& text);

    std::shared_ptr<Transport> transport_;
    GatewayConfig config_;
};

} // namespace priorlens
