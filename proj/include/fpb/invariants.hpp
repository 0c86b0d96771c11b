#ifndef FPB_INVARIANTS_HPP
#define FPB_INVARIANTS_HPP

#include <optional>

#include "fpb/bigint.hpp"
#include "fpb/code.hpp"
#include "fpb/determinant.hpp"
#include "fpb/polynomial.hpp"
#include "fpb/seifert.hpp"

namespace fpb {

/// Alexander polynomial in raw and normalized form. The normalized form has
/// minimum degree 0 and a positive leading coefficient; it is the
/// representative of the class of raw up to multiplication by ±t^k.
struct AlexanderPolynomial {
    IntPolynomial raw;
    IntPolynomial normalized;
    std::optional<int> span;     // absent for the zero polynomial
    std::optional<BigInt> leading;

    bool is_zero() const { return normalized.is_zero(); }
    bool is_trivial() const { return normalized == IntPolynomial(1); }

    friend bool operator==(const AlexanderPolynomial& a, const AlexanderPolynomial& b) {
        return a.normalized == b.normalized;
    }
};

AlexanderPolynomial normalize_alexander(const IntPolynomial& p);

/// True when a and b agree up to a unit ±t^k.
bool equal_up_to_unit(const IntPolynomial& a, const IntPolynomial& b);

enum class CheckMode { Fast, Checked };

/// normalize(det(V - tV^T)) for the Seifert matrix of the code. Checked mode
/// runs both determinant algorithms and throws Error(MethodDisagreement) if
/// they differ.
AlexanderPolynomial alexander(const FlatBasketCode& code, CheckMode mode = CheckMode::Checked);
AlexanderPolynomial alexander(const SeifertMatrix& v, CheckMode mode = CheckMode::Checked);

/// |Δ(-1)|. Throws Error(NotAKnot) unless the code has one boundary component.
BigInt knot_determinant(const FlatBasketCode& code);

/// 0 if det ≡ ±1 (mod 8), 1 if det ≡ ±3 (mod 8).
int arf_from_determinant(const BigInt& det);
int arf(const FlatBasketCode& code);

/// Signature of a symmetric integer matrix, computed exactly by sign
/// variations of its characteristic polynomial (all roots are real).
int signature(const IntMatrix& symmetric);
int signature(const FlatBasketCode& code);

/// Number of sign changes in the coefficient sequence, zeros skipped.
int sign_variations(const IntPolynomial& p);

}  // namespace fpb

#endif  // FPB_INVARIANTS_HPP
