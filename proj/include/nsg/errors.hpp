#pragma once

#include <stdexcept>
#include <string>

namespace nsg {

// Error conditions raised by the library. The names are part of the CLI
// contract: they are printed verbatim on the diagnostic stream.
enum class Errc {
    EmptyGenerators,
    GcdNotOne,
    NotOdd,
    DegreeTooSmall,
    OddBranchCount,
    ParityError,
    NotACoverCase,
    InvalidParameters,
    ClassMismatch,
    NotEffective,
    LimitExceeded,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }
    const char* name() const { return errc_name(code_); }

private:
    Errc code_;
};

} // namespace nsg
