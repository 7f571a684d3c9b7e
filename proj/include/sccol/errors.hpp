#pragma once

#include <stdexcept>
#include <string>

namespace sccol {

/// Error categories surfaced by the library. Each maps to one class of
/// precondition or input failure; the CLI turns any of these into exit 2.
enum class Errc {
    EmptyInput,
    EmptyFace,
    BadLabel,
    MissingVertex,
    NameClash,
    BadDimension,
    NotAPartition,
    TooLarge,
    EmptyBcp,
    DomainMismatch,
    HypothesisViolated,
    BadK,
    PaletteMismatch,
    OutOfRange,
    InvalidInput,
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace sccol
