#include "numsg/error.hpp"

namespace numsg {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonPositiveGenerator: return "NonPositiveGenerator";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SubUnderflow: return "SubUnderflow";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

} // namespace numsg
