#include "fpb/invariants.hpp"

#include "fpb/error.hpp"

namespace fpb {

AlexanderPolynomial normalize_alexander(const IntPolynomial& p) {
    AlexanderPolynomial a;
    a.raw = p;
    if (p.is_zero()) return a;
    IntPolynomial q = p.shifted(-p.min_degree());
    if (q.leading() < 0) q = -q;
    a.span = q.degree();
    a.leading = q.leading();
    a.normalized = std::move(q);
    return a;
}

bool equal_up_to_unit(const IntPolynomial& a, const IntPolynomial& b) {
    return normalize_alexander(a).normalized == normalize_alexander(b).normalized;
}

AlexanderPolynomial alexander(const SeifertMatrix& v, CheckMode mode) {
    IntPolynomial raw = pencil_determinant(v, DeterminantMethod::FractionFree);
    if (mode == CheckMode::Checked) {
        const IntPolynomial other = pencil_determinant(v, DeterminantMethod::EvalInterp);
        if (other != raw)
            throw Error(ErrorKind::MethodDisagreement,
                        "fraction-free gave " + raw.to_string() + ", evaluation gave " + other.to_string());
    }
    return normalize_alexander(raw);
}

AlexanderPolynomial alexander(const FlatBasketCode& code, CheckMode mode) {
    return alexander(seifert_matrix(code), mode);
}

namespace {

void require_knot(const FlatBasketCode& code) {
    const int b = boundary_components(code);
    if (b != 1)
        throw Error(ErrorKind::NotAKnot,
                    code.to_string() + " bounds a link with " + std::to_string(b) + " components");
}

}  // namespace

BigInt knot_determinant(const FlatBasketCode& code) {
    require_knot(code);
    BigInt d = alexander(code, CheckMode::Fast).normalized.evaluate(BigInt(-1));
    return d < 0 ? BigInt(-d) : d;
}

int arf_from_determinant(const BigInt& det) {
    const int r = static_cast<int>(BigInt(((det % 8) + 8) % 8));
    if (r == 1 || r == 7) return 0;
    if (r == 3 || r == 5) return 1;
    throw Error(ErrorKind::UnexpectedResidue, "determinant " + det.str() + " has even residue mod 8");
}

int arf(const FlatBasketCode& code) { return arf_from_determinant(knot_determinant(code)); }

int sign_variations(const IntPolynomial& p) {
    int changes = 0;
    int last = 0;
    for (const auto& c : p.coefficients()) {
        if (c == 0) continue;
        const int s = c > 0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int signature(const IntMatrix& symmetric) {
    const IntPolynomial chi = characteristic_polynomial(symmetric);
    // chi(-t): flip odd coefficients
    std::vector<BigInt> flipped = chi.coefficients();
    for (std::size_t d = 1; d < flipped.size(); d += 2) flipped[d] = -flipped[d];
    const int positive = sign_variations(chi);
    const int negative = sign_variations(IntPolynomial(std::move(flipped)));
    return positive - negative;
}

int signature(const FlatBasketCode& code) { return signature(symmetrized(seifert_matrix(code))); }

}  // namespace fpb
