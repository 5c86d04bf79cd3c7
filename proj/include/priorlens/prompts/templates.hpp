#pragma once

#include <map>
#include <string>
#include <vector>

namespace priorlens::prompts {

// A versioned prompt template. `text` is the user-message payload with
// {placeholder} slots; `role_context` is the default system message attached
// when the pipeline issues the request.
struct PromptTemplate {
    std::string id;
    std::string text;
    std::vector<std::string> placeholders;
    std::string role_context;
};

// Registered ids: extraction, landscape, delta, summary, normalization,
// core-judgments, judge, query-gen, rerank.
const std::vector<PromptTemplate>& all_templates();
const PromptTemplate& get_template(const std::string& id);
bool is_registered_template(const std::string& id);

// Single-pass substitution. Every placeholder of the template must be
// present in `values`; empty strings are allowed.
std::string render_template(const std::string& id,
                            const std::map<std::string, std::string>& values);

// True when none of the template's own placeholders survive in `rendered`.
bool fully_rendered(const std::string& id, const std::string& rendered);

} // namespace priorlens::prompts
