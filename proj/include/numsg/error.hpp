#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace numsg {

enum class ErrorKind {
    EmptyInput,
    ParseError,
    NonPositiveGenerator,
    GcdNotOne,
    LengthMismatch,
    SubUnderflow,
    Overflow,
    ResourceLimit,
    PreconditionViolation,
    InternalInconsistency,
};

const char* to_string(ErrorKind kind) noexcept;

// Every library failure is reported through this type. `value()` carries the
// offending quantity where one exists (the gcd for GcdNotOne, the generator
// for NonPositiveGenerator), zero otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::int64_t value = 0)
        : std::runtime_error(message), kind_(kind), value_(value) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::int64_t value() const noexcept { return value_; }

private:
    ErrorKind kind_;
    std::int64_t value_;
};

} // namespace numsg
