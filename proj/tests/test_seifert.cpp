#include <doctest.h>

#include <random>

#include "fpb/code.hpp"
#include "fpb/seifert.hpp"
#include "oracles.hpp"

using namespace fpb;

TEST_SUITE("seifert") {

TEST_CASE("the six foot patterns of a pair") {
    // i < j; only interleaved pairs link
    CHECK(seifert_matrix(parse_code("1,2,2,1"))(1, 0) == 0);
    CHECK(seifert_matrix(parse_code("1,2,1,2"))(1, 0) == -1);
    CHECK(seifert_matrix(parse_code("1,1,2,2"))(1, 0) == 0);
    CHECK(seifert_matrix(parse_code("2,1,1,2"))(1, 0) == 0);
    CHECK(seifert_matrix(parse_code("2,1,2,1"))(1, 0) == 1);
    CHECK(seifert_matrix(parse_code("2,2,1,1"))(1, 0) == 0);
}

TEST_CASE("trefoil code") {
    const auto v = seifert_matrix(parse_code("1,2,3,4,1,2,3,4"));
    IntMatrix expected(4, 4);
    expected << 0, 0, 0, 0,
                -1, 0, 0, 0,
                -1, -1, 0, 0,
                -1, -1, -1, 0;
    CHECK(v == expected);
    CHECK(symmetrized(v) == expected + expected.transpose());
    CHECK(format_matrix(IntMatrix::Identity(2, 2) * -1) == "-1  0\n 0 -1\n");
}

TEST_CASE("matches the case table on random codes") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto w = oracle::random_word(rng, 1 + static_cast<int>(rng() % 9));
        const auto v = seifert_matrix(FlatBasketCode(w));
        CHECK(v == oracle::seifert_by_cases(w));
        CHECK(v.triangularView<Eigen::Upper>().toDenseMatrix().isZero());
    }
}

}
