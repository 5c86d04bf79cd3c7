#pragma once

#include <string>
#include <vector>

namespace priorlens {

// One fully rendered chat request. template_id must name a registered
// template; rendered_text is the exact user-message payload sent upstream.
struct PromptRequest {
    std::string template_id;
    std::string rendered_text;
    double temperature = 0.0;
    int max_output_tokens = 4096;
    std::string role_context; // optional system message
};

struct TokenUsage {
    int prompt_tokens = 0;
    int completion_tokens = 0;
};

struct CompletionResult {
    std::string text;
    std::string provider_id;
    bool from_replay = false;
    TokenUsage usage;
};

struct EmbeddingVector {
    std::vector<double> values;
    std::string model_id;
};

} // namespace priorlens
