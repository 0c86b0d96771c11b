#include "fpb/bounds.hpp"

#include <algorithm>

#include "fpb/error.hpp"

namespace fpb {

std::string_view to_string(LeadingCase c) { return c == LeadingCase::Monic ? "monic" : "non_monic"; }

FpbkBound fpbk_lower_bound(const AlexanderPolynomial& delta, std::optional<int> genus) {
    if (delta.is_zero())
        throw Error(ErrorKind::TrivialKnotInput, "zero Alexander polynomial is not that of a knot");
    if (genus && *genus < 0) throw Error(ErrorKind::GenusContradiction, "negative genus");
    if (delta.is_trivial() && !(genus && *genus >= 1))
        throw Error(ErrorKind::TrivialKnotInput, "Δ = 1 and no positive genus given");
    const int span = *delta.span;
    if (genus && 2 * *genus < span)
        throw Error(ErrorKind::GenusContradiction,
                    "2g = " + std::to_string(2 * *genus) + " < deg Δ = " + std::to_string(span));
    FpbkBound b;
    const BigInt& a = *delta.leading;
    b.case_tag = (a == 1 || a == -1) ? LeadingCase::Monic : LeadingCase::NonMonic;
    b.degree_bound = span + (b.case_tag == LeadingCase::Monic ? 2 : 4);
    b.overall = b.degree_bound;
    if (genus) {
        b.genus_bound = 2 * *genus + 2;
        b.overall = std::max(b.overall, *b.genus_bound);
    }
    return b;
}

}  // namespace fpb
