#include "priorlens/gateway/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <nlohmann/json.hpp>

#include "priorlens/common/errors.hpp"
#include "priorlens/gateway/prompt.hpp"

namespace priorlens {

std::string sha256_hex(const std::string& bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int md_len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &md_len, EVP_sha256(), nullptr) != 1)
        raise(ErrorKind::ProviderError, "sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(md_len * 2);
    for (unsigned int i = 0; i < md_len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

std::string request_digest(const PromptRequest& req) {
    // nlohmann::json keeps object keys sorted, so dump() is a canonical,
    // platform-stable serialization.
    nlohmann::json j{
        {"template_id", req.template_id},
        {"rendered_text", req.rendered_text},
        {"temperature", req.temperature},
        {"max_output_tokens", req.max_output_tokens},
        {"role_context", req.role_context},
    };
    return sha256_hex(j.dump());
}

} // namespace priorlens
