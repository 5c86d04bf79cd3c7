#pragma once

#include <stdexcept>
#include <string>

namespace priorlens {

// Error taxonomy shared across the pipeline. Each failure carries a kind so
// callers can branch without string matching.
enum class ErrorKind {
    BudgetExceeded,
    FixtureMiss,
    ProviderError,
    ParseFailed,
    MissingTitle,
    MalformedCompletion,
    EmptyCompletion,
    FetchFailed,
    OcrFailed,
    NoIntroFound,
    ZeroVector,
    LengthMismatch,
    EmptyInput,
    SchemaError,
    ConfigError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message);

    ErrorKind kind() const { return kind_; }

    // Attempt count for ProviderError after retry exhaustion; 0 otherwise.
    int attempts = 0;
    // Stage tag attached by the orchestrator when an error crosses a stage
    // boundary; empty inside the modules themselves.
    std::string stage;

private:
    ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

} // namespace priorlens
