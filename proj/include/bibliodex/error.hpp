#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bibliodex {

/// One structured problem found in input data. `line` is 1-based and 0 when
/// the problem is not tied to a particular line.
struct Diagnostic {
    std::string source;
    int line = 0;
    std::string message;

    std::string format() const;
};

/// Thrown for invalid data: malformed input files, broken referential
/// integrity, unknown ids, out-of-range years. Carries every diagnostic
/// collected during the failing pass, not just the first.
class DataError : public std::runtime_error {
public:
    explicit DataError(std::string message);
    explicit DataError(std::vector<Diagnostic> diagnostics);

    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    static std::string summarize(const std::vector<Diagnostic>& diagnostics);
    std::vector<Diagnostic> diagnostics_;
};

}  // namespace bibliodex
