#pragma once

#include <string>

namespace priorlens {

struct PromptRequest;

// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);

// Stable content digest of a prompt request. Any field change (template,
// text, temperature, token limit, system context) changes the digest.
std::string request_digest(const PromptRequest& req);

} // namespace priorlens
