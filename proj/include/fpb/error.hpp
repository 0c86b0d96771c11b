#ifndef FPB_ERROR_HPP
#define FPB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fpb {

enum class ErrorKind {
    // code_core
    EmptyInput,
    MalformedCode,
    NonContiguousLabels,
    InvalidPermutation,
    InvalidMatching,
    // invariants
    MethodDisagreement,
    NotAKnot,
    UnexpectedResidue,
    NonIntegralInterpolation,
    // bounds
    TrivialKnotInput,
    GenusContradiction,
    // passclass
    OrbitTooLarge,
    // pushdown
    DuplicateHeight,
    DuplicateColumn,
    EndpointCrossing,
    FootOrderViolation,
    MalformedBand,
    SiteNotEligible,
    // search
    CapExceeded,
    StoreMismatch,
    // tables
    ParseError,
    MissingReference,
    IoError,
};

std::string_view to_string(ErrorKind kind);

/// Domain failure raised by every module of the library. The kind is stable
/// and machine-readable; the message carries context for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fpb

#endif  // FPB_ERROR_HPP
