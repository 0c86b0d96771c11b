#ifndef FPB_BOUNDS_HPP
#define FPB_BOUNDS_HPP

#include <optional>
#include <string_view>

#include "fpb/invariants.hpp"

namespace fpb {

enum class LeadingCase { Monic, NonMonic };

std::string_view to_string(LeadingCase c);

/// Lower bound on the minimal band count of a flat plumbing basket for a
/// non-trivial knot with the given Alexander polynomial (and genus, if known).
struct FpbkBound {
    std::optional<int> genus_bound;  // 2g + 2
    int degree_bound;                // span + 2 (monic) or span + 4
    int overall;
    LeadingCase case_tag;
};

/// Throws Error(TrivialKnotInput) for Δ = ±1 without a positive genus and
/// Error(GenusContradiction) when 2·genus < span. Without a genus the bound
/// genus >= span/2 is implied, which never exceeds the degree bound.
FpbkBound fpbk_lower_bound(const AlexanderPolynomial& delta, std::optional<int> genus = std::nullopt);

}  // namespace fpb

#endif  // FPB_BOUNDS_HPP
