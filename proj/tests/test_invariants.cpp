#include <doctest.h>

#include <random>

#include "fpb/determinant.hpp"
#include "fpb/error.hpp"
#include "fpb/invariants.hpp"
#include "oracles.hpp"

using namespace fpb;

TEST_SUITE("invariants") {

TEST_CASE("hand-computed anchors") {
    const auto a = alexander(parse_code("1,2,3,4,1,2,3,4"));
    CHECK(a.raw == IntPolynomial{0, 1, -1, 1});
    CHECK(a.normalized == IntPolynomial{1, -1, 1});
    CHECK(a.span == 2);
    CHECK(a.leading == 1);
    CHECK(alexander(parse_code("1,2,4,3,1,2,4,3")).normalized == IntPolynomial{1, -3, 1});
    CHECK(alexander(parse_code("1,2,3,5,6,4,5,6,1,2,3,4")).normalized == IntPolynomial{2, -3, 2});
}

TEST_CASE("links give degenerate polynomials") {
    CHECK(alexander(parse_code("1,1")).is_zero());
    CHECK(alexander(parse_code("1,2,1,2")).normalized == IntPolynomial{1});
    CHECK(alexander(parse_code("1,2,1,2")).is_trivial());
    CHECK_FALSE(alexander(parse_code("1,1")).span.has_value());
}

TEST_CASE("Bareiss agrees with the Leibniz expansion") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const auto w = oracle::random_word(rng, n);
        const auto v = seifert_matrix(FlatBasketCode(w));
        const auto expected = oracle::pencil_leibniz(v);
        CHECK(pencil_determinant(v, DeterminantMethod::FractionFree) == expected);
        CHECK(pencil_determinant(v, DeterminantMethod::EvalInterp) == expected);
        CHECK(alexander(v).normalized == oracle::normalized(expected));
    }
}

TEST_CASE("integer Bareiss agrees with Leibniz") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 6;
        BigMatrix m(n, n);
        std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int x = trial % 5 == 0 && j == 0 ? 0 : entry(rng);
                m(i, j) = x;
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
            }
        CHECK(bareiss_determinant(m) == oracle::leibniz(rows));
    }
}

TEST_CASE("interpolation") {
    const auto pts = evaluation_points(5);
    CHECK(pts == std::vector<BigInt>{0, 1, -1, 2, -2});
    const IntPolynomial p{3, 0, -2, 1};
    std::vector<BigInt> values;
    for (const auto& x : pts) values.push_back(p.evaluate(x));
    CHECK(interpolate(pts, values) == p);
    try {
        interpolate({0, 1, -1}, {0, 1, 0});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonIntegralInterpolation);
    }
}

TEST_CASE("characteristic polynomial") {
    IntMatrix a(2, 2);
    a << 0, 1, 1, 0;
    CHECK(characteristic_polynomial(a) == IntPolynomial{-1, 0, 1});
    IntMatrix b(3, 3);
    b << 2, 0, 0, 0, 3, 0, 0, 0, -1;
    CHECK(characteristic_polynomial(b) == IntPolynomial{6, 1, -4, 1});
}

TEST_CASE("normalization") {
    const auto a = normalize_alexander(IntPolynomial{0, 0, -1, 1, -1});
    CHECK(a.normalized == IntPolynomial{1, -1, 1});
    CHECK(a.leading == 1);
    const auto b = normalize_alexander(IntPolynomial{0, -2, 3, -2});
    CHECK(b.normalized == IntPolynomial{2, -3, 2});
    CHECK(b.span == 2);
    CHECK(b.leading == 2);
    CHECK(equal_up_to_unit(IntPolynomial{0, -1, 1, -1}, IntPolynomial{1, -1, 1}));
    CHECK_FALSE(equal_up_to_unit(IntPolynomial{1, -3, 1}, IntPolynomial{1, -1, 1}));
}

TEST_CASE("determinant and Arf") {
    CHECK(knot_determinant(parse_code("1,2,3,4,1,2,3,4")) == 3);
    CHECK(knot_determinant(parse_code("1,2,4,3,1,2,4,3")) == 5);
    CHECK(arf(parse_code("1,2,3,4,1,2,3,4")) == 1);
    CHECK(arf(parse_code("1,2,4,3,1,2,4,3")) == 1);
    CHECK(arf(parse_code("1,2,3,5,6,4,5,6,1,2,3,4")) == 0);
    CHECK(arf_from_determinant(1) == 0);
    CHECK(arf_from_determinant(9) == 0);
    CHECK(arf_from_determinant(15) == 0);
    CHECK(arf_from_determinant(13) == 1);
    try {
        knot_determinant(parse_code("1,1"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAKnot);
    }
    try {
        arf_from_determinant(4);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnexpectedResidue);
    }
}

TEST_CASE("signature matches floating-point eigenvalues") {
    CHECK(signature(parse_code("1,2,3,4,1,2,3,4")) == 2);
    CHECK(signature(parse_code("1,4,3,2,1,4,3,2")) == -2);
    CHECK(signature(parse_code("1,2,4,3,1,2,4,3")) == 0);
    CHECK(sign_variations(IntPolynomial{1, 0, -1}) == 1);
    CHECK(sign_variations(IntPolynomial{1, -2, 1}) == 2);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const auto w = oracle::random_word(rng, 1 + static_cast<int>(rng() % 10));
        const auto code = FlatBasketCode(w);
        CHECK(signature(code) == oracle::float_signature(symmetrized(seifert_matrix(code))));
    }
}

TEST_CASE("top coefficient is the product around the cycle") {
    // The t^(n-1) coefficient of the raw determinant is +v21 v32 ... v_{n,n-1} v_{n,1};
    // the t coefficient carries an extra (-1)^n.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const auto code = FlatBasketCode(oracle::random_word(rng, n));
        const auto v = seifert_matrix(code);
        int product = v(n - 1, 0);
        for (int i = 0; i + 1 < n; ++i) product *= v(i + 1, i);
        const auto raw = alexander(code).raw;
        CHECK(raw.coeff(static_cast<std::size_t>(n - 1)) == product);
        CHECK(raw.coeff(1) == (n % 2 == 0 ? product : -product));
    }
}

}
