#include "priorlens/common/errors.hpp"

namespace priorlens {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::FixtureMiss: return "FixtureMiss";
        case ErrorKind::ProviderError: return "ProviderError";
        case ErrorKind::ParseFailed: return "ParseFailed";
        case ErrorKind::MissingTitle: return "MissingTitle";
        case ErrorKind::MalformedCompletion: return "MalformedCompletion";
        case ErrorKind::EmptyCompletion: return "EmptyCompletion";
        case ErrorKind::FetchFailed: return "FetchFailed";
        case ErrorKind::OcrFailed: return "OcrFailed";
        case ErrorKind::NoIntroFound: return "NoIntroFound";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, std::string message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + std::move(message)),
      kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace priorlens
