#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "fpb/error.hpp"
#include "fpb/invariants.hpp"
#include "fpb/search.hpp"
#include "oracles.hpp"

using namespace fpb;

TEST_SUITE("search") {

TEST_CASE("matching enumeration against brute force") {
    for (int n = 1; n <= 4; ++n) {
        const auto all = enumerate_matchings(n, false);
        CHECK(all.size() == matching_count(n));
        std::vector<std::vector<int>> got;
        for (const auto& m : all) got.push_back(m.partners());
        CHECK(std::is_sorted(got.begin(), got.end()));
        CHECK(got == oracle::matchings_bruteforce(n));
        std::size_t knots = 0;
        for (const auto& m : all) knots += boundary_components(m) == 1;
        CHECK(enumerate_matchings(n, true).size() == knots);
    }
    CHECK(matching_count(6) == 10395);
}

TEST_CASE("one rotation-minimal matching per rotation class") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::vector<int>> classes;
        std::size_t minimal = 0;
        for_each_matching(n, false, [&](const UnderlyingDiagram& m) {
            std::vector<int> least = m.partners();
            for (int k = 1; k < m.points(); ++k) least = std::min(least, m.rotated(k).partners());
            classes.insert(least);
            minimal += is_rotation_minimal(m);
        });
        CHECK(minimal == classes.size());
    }
}

TEST_CASE("search agrees with brute-force canonical words") {
    for (int n = 1; n <= 4; ++n) {
        std::set<std::vector<int>> expected;
        std::vector<int> w;
        for (int i = 1; i <= n; ++i) w.insert(w.end(), {i, i});
        std::sort(w.begin(), w.end());
        do expected.insert(oracle::least_rotation(w));
        while (std::next_permutation(w.begin(), w.end()));
        SearchQuery q;
        q.bands = n;
        std::set<std::vector<int>> got;
        for (const auto& r : search(q)) got.insert(r.code.word());
        CHECK(got == expected);
    }
}

TEST_CASE("census of two bands") {
    const auto c = census(2);
    REQUIRE(c.size() == 1);
    CHECK(c.begin()->first == IntPolynomial{1});
    CHECK(c.begin()->second == 1);
    try {
        census(7);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CapExceeded);
    }
}

TEST_CASE("targets and filters") {
    SearchQuery q;
    q.bands = 4;
    q.target = IntPolynomial{1, -1, 1};
    const auto hits = search(q);
    CHECK(std::any_of(hits.begin(), hits.end(),
                      [](const SearchRecord& r) { return r.code.word() == std::vector<int>{1, 2, 3, 4, 1, 2, 3, 4}; }));
    for (const auto& r : hits) CHECK(r.delta == IntPolynomial{1, -1, 1});
    q.dedup_mirror = true;
    const auto deduped = search(q);
    for (const auto& r : hits) {
        const auto keep = std::min(r.code, mirrored(r.code));
        CHECK(std::any_of(deduped.begin(), deduped.end(), [&](const SearchRecord& d) { return d.code == keep; }));
    }
    q.bands = 2;
    q.dedup_mirror = false;
    CHECK(search(q).empty());

    SearchQuery k;
    k.bands = 3;
    k.knots_only = true;
    CHECK(search(k).empty());
    k.bands = 4;
    k.limit = 5;
    const auto few = search(k);
    CHECK(few.size() == 5);
    for (const auto& r : few) CHECK(r.boundary == 1);
}

TEST_CASE("reversing word and labels keeps the invariants") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const auto code = FlatBasketCode(oracle::random_word(rng, 1 + static_cast<int>(rng() % 8)));
        auto a = make_record(code);
        auto b = make_record(mirrored(code));
        b.code = a.code;
        CHECK(a == b);
    }
}

TEST_CASE("thread count does not change the result") {
    SearchQuery q;
    q.bands = 5;
    const auto one = search(q);
    q.jobs = 4;
    CHECK(search(q) == one);
}

TEST_CASE("records") {
    const auto r = make_record(parse_code("1,2,3,4,1,2,3,4"));
    CHECK(r.boundary == 1);
    CHECK(r.genus == 2);
    CHECK(r.determinant == 3);
    CHECK(r.arf == 1);
    CHECK(r.signature == 2);
    const auto line = to_json_line(r);
    CHECK(line == R"({"arf":1,"b":1,"code":[1,2,3,4,1,2,3,4],"delta":[1,-1,1],"det":3,"genus":2,"signature":2})");
    CHECK(from_json_line(line) == r);
    const auto link = make_record(parse_code("1,1"));
    CHECK_FALSE(link.arf.has_value());
    CHECK(from_json_line(to_json_line(link)) == link);
    CHECK_THROWS_AS(from_json_line("{"), Error);
}

TEST_CASE("store merge") {
    const auto path = (std::filesystem::temp_directory_path() / "fpb_store_test.jsonl").string();
    std::filesystem::remove(path);
    SearchQuery q;
    q.bands = 3;
    const auto records = search(q);
    auto s = merge_into_store(path, records);
    CHECK(s.added == records.size());
    CHECK(s.verified == 0);
    s = merge_into_store(path, records);
    CHECK(s.added == 0);
    CHECK(s.verified == records.size());

    auto bad = make_record(parse_code("1,2,1,2"));
    bad.signature = 5;
    {
        std::ofstream out(path, std::ios::app);
        out << to_json_line(bad) << '\n';
    }
    try {
        merge_into_store(path, {});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::StoreMismatch);
    }
    std::filesystem::remove(path);
}

}
