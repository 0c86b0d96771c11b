#ifndef FPB_PASSCLASS_HPP
#define FPB_PASSCLASS_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpb/code.hpp"

namespace fpb {

enum class PassFamily { I, II, III, Undetermined };
enum class Certainty { Exact, Partial };

/// Pass-equivalence class. Knots are classified exactly by Arf (trivial knot
/// or trefoil); for links only the component count is reported.
struct PassClass {
    PassFamily family;
    int components;
    std::optional<int> d;  // parameter of III_{d,n}; never determined here
    Certainty certainty;

    /// "I_1", "II_1", or "?_n" for a partial link classification.
    std::string label() const;
};

PassClass pass_class(const FlatBasketCode& code);

inline constexpr int kDefaultOrbitCap = 8;

/// Visits every distinct canonical code whose underlying diagram is a rotation
/// of `diagram`, i.e. all n! labellings canonicalized and deduplicated, in
/// increasing lexicographic order. Throws Error(OrbitTooLarge) for n > cap.
void for_each_labeling(const UnderlyingDiagram& diagram, const std::function<void(const FlatBasketCode&)>& visit,
                       int cap = kDefaultOrbitCap);

std::vector<FlatBasketCode> labeling_orbit(const UnderlyingDiagram& diagram, int cap = kDefaultOrbitCap);

struct OrbitReport {
    std::set<int> arf_values;
    std::size_t orbit_size = 0;
    bool pass = false;
};

/// Arf over the whole labelling orbit; passes iff a single value occurs.
/// Throws Error(NotAKnot) if the diagram has more than one boundary component.
OrbitReport orbit_invariant_check(const UnderlyingDiagram& diagram, int cap = kDefaultOrbitCap);

}  // namespace fpb

#endif  // FPB_PASSCLASS_HPP
