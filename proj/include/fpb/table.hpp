#ifndef FPB_TABLE_HPP
#define FPB_TABLE_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpb/bounds.hpp"
#include "fpb/code.hpp"
#include "fpb/invariants.hpp"

namespace fpb {

/// Reported flat plumbing basket number: an exact value (lo == hi) or an
/// inclusive range.
struct FpbkClaim {
    int lo;
    int hi;
    bool exact() const { return lo == hi; }
};

struct KnotRecord {
    std::string name;
    FlatBasketCode code;
    int genus;
    FpbkClaim claim;
    std::string claim_text;  // as printed, e.g. "6 - 8"
    bool bullet = false;
    std::optional<std::string> footnote;  // "*" or "**"
    int block = 0;
};

inline constexpr std::size_t kTableRowCount = 84;
inline constexpr std::array<std::size_t, 3> kTableBlockSizes{35, 40, 9};

/// Tab-separated rows: name, code, genus, claim, marks. '#' lines are
/// comments; a "# block N" comment starts block N. Fields are trimmed, and
/// runs of spaces are accepted in place of tabs. Throws Error(ParseError)
/// naming the offending line.
std::vector<KnotRecord> parse_table(std::string_view text);
std::vector<KnotRecord> load_table(const std::string& path);

/// name -> normalized Alexander polynomial, one "name<TAB>c0,c1,..." per line.
std::map<std::string, IntPolynomial> parse_references(std::string_view text);
std::map<std::string, IntPolynomial> load_references(const std::string& path);

/// $FPB_DATA_DIR if set, otherwise the data directory of the source tree.
std::string default_data_dir();

enum class RowCheck { SingleBoundary, ReferenceMatch, BandCount, LowerBound, GenusSpan, BulletFlag };
inline constexpr std::size_t kRowCheckCount = 6;
std::string_view to_string(RowCheck c);

struct CheckOutcome {
    bool pass = false;
    std::string detail;
};

struct RowReport {
    std::string name;
    int bands = 0;
    int boundary = 0;
    IntPolynomial delta;  // normalized, computed from the code
    std::optional<FpbkBound> bound;
    std::array<CheckOutcome, kRowCheckCount> checks;

    bool pass() const;
    const CheckOutcome& check(RowCheck c) const { return checks[static_cast<std::size_t>(c)]; }
};

struct TableReport {
    std::vector<RowReport> rows;  // same order as the input records
    std::size_t passed() const;
    bool all_pass() const { return passed() == rows.size(); }
};

/// Runs the six per-row checks. Rows are processed by `jobs` threads.
/// Throws Error(MissingReference) if some row has no reference polynomial.
TableReport verify_table(const std::vector<KnotRecord>& records,
                         const std::map<std::string, IntPolynomial>& references, int jobs = 1);

/// Block sizes of the loaded table, in order of appearance.
std::vector<std::size_t> block_sizes(const std::vector<KnotRecord>& records);

}  // namespace fpb

#endif  // FPB_TABLE_HPP
