#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qphase {

// Base class for all numeric and domain failures. kind() is the stable
// name the CLI prints when mapping a failure to exit code 3.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error("DomainError", msg) {}
};

struct QuadratureError : Error {
    explicit QuadratureError(const std::string& msg) : Error("QuadratureError", msg) {}
};

struct NotNormalizedError : Error {
    explicit NotNormalizedError(const std::string& msg) : Error("NotNormalized", msg) {}
};

struct TruncationTooCoarseError : Error {
    explicit TruncationTooCoarseError(const std::string& msg)
        : Error("TruncationTooCoarse", msg) {}
};

// Raised when a limit has no valid quantum state; carries the limiting
// diagonal so callers can show why the limit fails.
class NotQuantizableError : public Error {
public:
    NotQuantizableError(const std::string& msg, std::vector<double> entries)
        : Error("NotQuantizable", msg), limiting_entries_(std::move(entries)) {}

    const std::vector<double>& limiting_entries() const noexcept { return limiting_entries_; }

private:
    std::vector<double> limiting_entries_;
};

// CSV ingestion failure; carries the offending line number (1-based).
class CsvError : public Error {
public:
    CsvError(int line, const std::string& msg)
        : Error("CsvError", "line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace qphase
