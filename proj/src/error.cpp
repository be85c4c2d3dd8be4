#include "bibliodex/error.hpp"

#include <utility>

namespace bibliodex {

std::string Diagnostic::format() const {
    std::string s;
    if (!source.empty()) {
        s += source;
        if (line > 0) {
            s += ':';
            s += std::to_string(line);
        }
        s += ": ";
    }
    s += message;
    return s;
}

DataError::DataError(std::string message)
    : std::runtime_error(message), diagnostics_{Diagnostic{"", 0, std::move(message)}} {}

DataError::DataError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::string DataError::summarize(const std::vector<Diagnostic>& diagnostics) {
    if (diagnostics.empty()) return "data error";
    std::string s = diagnostics.front().format();
    if (diagnostics.size() > 1)
        s += " (+" + std::to_string(diagnostics.size() - 1) + " more)";
    return s;
}

}  // namespace bibliodex
