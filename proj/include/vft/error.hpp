#pragma once

#include <stdexcept>
#include <string>

namespace vft {

// Every contract violation with a name gets one of these codes, so tests and
// the CLI can dispatch on the reason instead of parsing messages.
enum class ErrorCode {
    // polynomial / Weierstrass-form validation
    NotMonic,
    NotDistinguished,
    // preparation
    OrderUndefined,
    NotFiniteOrder,
    // criterion hypotheses
    MultiplicityTooLow,
    ContainsXAxis,
    NotReduced,
    // oracle
    WrongArity,
    // corpus
    MalformedCorpus,
    LabelConflict,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Parse failures always carry the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace vft
