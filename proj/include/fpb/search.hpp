#ifndef FPB_SEARCH_HPP
#define FPB_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpb/bigint.hpp"
#include "fpb/code.hpp"
#include "fpb/polynomial.hpp"

namespace fpb {

/// (2n-1)!!, the number of perfect matchings on 2n points.
std::uint64_t matching_count(int n);

/// Every fixed-point-free involution on 2n points, in lexicographic order of
/// the partner list. With knots_only, only single-boundary matchings.
void for_each_matching(int n, bool knots_only, const std::function<void(const UnderlyingDiagram&)>& visit);
std::vector<UnderlyingDiagram> enumerate_matchings(int n, bool knots_only);

/// True if no rotation of the matching has a lexicographically smaller
/// partner list. Exactly one matching per rotation class qualifies.
bool is_rotation_minimal(const UnderlyingDiagram& m);

/// All n! labellings of the matching, canonicalized and deduplicated, sorted.
std::vector<FlatBasketCode> enumerate_codes(const UnderlyingDiagram& m);

struct SearchQuery {
    int bands = 1;
    std::optional<IntPolynomial> target;  // normalized; matched up to ±t^k
    bool knots_only = false;
    bool dedup_mirror = false;
    std::optional<std::size_t> limit;
    int jobs = 1;
};

struct SearchRecord {
    FlatBasketCode code;
    int boundary;
    int genus;
    IntPolynomial delta;  // normalized
    BigInt determinant;   // |Δ(-1)|
    std::optional<int> arf;
    int signature;

    friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

/// Invariants of one code, recomputed from scratch.
SearchRecord make_record(const FlatBasketCode& code);

/// Every canonical code with the requested band count that passes the
/// filters, sorted by code. Work is split across `jobs` threads by matching;
/// the result does not depend on the thread count.
std::vector<SearchRecord> search(const SearchQuery& query);

inline constexpr int kDefaultCensusCap = 6;

/// Histogram of normalized Δ over all canonical knot codes with n bands.
/// Throws Error(CapExceeded) above the cap.
std::map<IntPolynomial, std::size_t> census(int n, int jobs = 1, int cap = kDefaultCensusCap);

/// One self-describing JSON object per line.
std::string to_json_line(const SearchRecord& r);
SearchRecord from_json_line(const std::string& line);

struct StoreSummary {
    std::size_t added = 0;
    std::size_t verified = 0;
};

/// Append-only record file. Records already present are recomputed and must
/// match (Error(StoreMismatch) otherwise); new records are appended.
StoreSummary merge_into_store(const std::string& path, const std::vector<SearchRecord>& records);

}  // namespace fpb

#endif  // FPB_SEARCH_HPP
