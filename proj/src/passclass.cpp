#include "fpb/passclass.hpp"

#include <algorithm>
#include <numeric>

#include "fpb/error.hpp"
#include "fpb/invariants.hpp"

namespace fpb {

std::string PassClass::label() const {
    switch (family) {
        case PassFamily::I: return "I_" + std::to_string(components);
        case PassFamily::II: return "II_" + std::to_string(components);
        case PassFamily::III: return "III_{" + (d ? std::to_string(*d) : std::string("?")) + "," +
                                     std::to_string(components) + "}";
        case PassFamily::Undetermined: break;
    }
    return "?_" + std::to_string(components);
}

PassClass pass_class(const FlatBasketCode& code) {
    const int b = boundary_components(code);
    if (b != 1) return {PassFamily::Undetermined, b, std::nullopt, Certainty::Partial};
    return {arf(code) == 0 ? PassFamily::I : PassFamily::II, 1, std::nullopt, Certainty::Exact};
}

void for_each_labeling(const UnderlyingDiagram& diagram, const std::function<void(const FlatBasketCode&)>& visit,
                       int cap) {
    const int n = diagram.bands();
    if (n > cap)
        throw Error(ErrorKind::OrbitTooLarge,
                    std::to_string(n) + " bands exceeds the orbit cap of " + std::to_string(cap));
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    std::set<std::vector<int>> seen;
    do {
        seen.insert(canonical_rotation(label_matching(diagram, labels).word()));
    } while (std::next_permutation(labels.begin(), labels.end()));
    for (const auto& w : seen) visit(FlatBasketCode(w));
}

std::vector<FlatBasketCode> labeling_orbit(const UnderlyingDiagram& diagram, int cap) {
    std::vector<FlatBasketCode> out;
    for_each_labeling(diagram, [&](const FlatBasketCode& c) { out.push_back(c); }, cap);
    return out;
}

OrbitReport orbit_invariant_check(const UnderlyingDiagram& diagram, int cap) {
    const int b = boundary_components(diagram);
    if (b != 1) throw Error(ErrorKind::NotAKnot, "matching has " + std::to_string(b) + " boundary components");
    OrbitReport r;
    for_each_labeling(
        diagram,
        [&](const FlatBasketCode& c) {
            r.arf_values.insert(arf(c));
            ++r.orbit_size;
        },
        cap);
    r.pass = r.arf_values.size() == 1;
    return r;
}

}  // namespace fpb
