#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace burstcore {

// Caller handed us something invalid (bad parameter, node outside the
// restriction set, unparsable rational, ...). CLI maps this to exit code 2.
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Input data is malformed (bad edge-list line, empty input, ...). Carries the
// 1-based line number when one is known. CLI maps this to exit code 2.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what)
        : std::runtime_error(what), line_(0) {}
    FormatError(const std::string& what, std::uint64_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    // 0 when the error is not tied to a specific line.
    std::uint64_t line() const noexcept { return line_; }

private:
    std::uint64_t line_;
};

// An internal invariant was violated (cache/sequence mismatch and the like).
// Reaching this is a bug, not a usage error. CLI maps this to exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace burstcore
