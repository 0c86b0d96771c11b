#include "fpb/error.hpp"

namespace fpb {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::MalformedCode: return "MalformedCode";
        case ErrorKind::NonContiguousLabels: return "NonContiguousLabels";
        case ErrorKind::InvalidPermutation: return "InvalidPermutation";
        case ErrorKind::InvalidMatching: return "InvalidMatching";
        case ErrorKind::MethodDisagreement: return "MethodDisagreement";
        case ErrorKind::NotAKnot: return "NotAKnot";
        case ErrorKind::UnexpectedResidue: return "UnexpectedResidue";
        case ErrorKind::NonIntegralInterpolation: return "NonIntegralInterpolation";
        case ErrorKind::TrivialKnotInput: return "TrivialKnotInput";
        case ErrorKind::GenusContradiction: return "GenusContradiction";
        case ErrorKind::OrbitTooLarge: return "OrbitTooLarge";
        case ErrorKind::DuplicateHeight: return "DuplicateHeight";
        case ErrorKind::DuplicateColumn: return "DuplicateColumn";
        case ErrorKind::EndpointCrossing: return "EndpointCrossing";
        case ErrorKind::FootOrderViolation: return "FootOrderViolation";
        case ErrorKind::MalformedBand: return "MalformedBand";
        case ErrorKind::SiteNotEligible: return "SiteNotEligible";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::StoreMismatch: return "StoreMismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::MissingReference: return "MissingReference";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace fpb
