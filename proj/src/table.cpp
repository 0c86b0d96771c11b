#include "fpb/table.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <regex>
#include <sstream>
#include <thread>

#include "fpb/error.hpp"

#ifndef FPB_DATA_DIR
#define FPB_DATA_DIR "data"
#endif

namespace fpb {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// name, code, genus, and everything after (claim plus marks).
std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> f;
    if (line.find('\t') != std::string::npos) {
        std::size_t start = 0;
        while (true) {
            const auto tab = line.find('\t', start);
            f.push_back(trim(std::string_view(line).substr(start, tab - start)));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (f.size() > 4) {
            std::string rest;
            for (std::size_t i = 3; i < f.size(); ++i) rest += (i > 3 ? " " : "") + f[i];
            f.resize(3);
            f.push_back(trim(rest));
        }
        return f;
    }
    std::istringstream in(line);
    for (int i = 0; i < 3; ++i) {
        std::string tok;
        if (!(in >> tok)) return f;
        f.push_back(tok);
    }
    std::string rest;
    std::getline(in, rest);
    f.push_back(trim(rest));
    return f;
}

[[noreturn]] void bad_row(std::size_t lineno, const std::string& why) {
    throw Error(ErrorKind::ParseError, "table line " + std::to_string(lineno) + ": " + why);
}

}  // namespace

std::vector<KnotRecord> parse_table(std::string_view text) {
    static const std::regex block_re(R"(^#\s*block\s+(\d+)\s*$)");
    static const std::regex claim_re(R"(^(\d+)(?:\s*-\s*(\d+))?\s*(.*)$)");
    std::vector<KnotRecord> out;
    int block = 1;
    std::size_t lineno = 0;
    for (const auto& raw : lines_of(text)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::smatch m;
            if (std::regex_match(line, m, block_re)) block = std::stoi(m[1]);
            continue;
        }
        const auto f = split_row(line);
        if (f.size() < 4) bad_row(lineno, "expected name, code, genus and claim");

        std::optional<FlatBasketCode> code;
        try {
            code = parse_code(f[1]);
        } catch (const Error& e) {
            bad_row(lineno, "row " + f[0] + ": " + e.what());
        }
        int genus = 0;
        try {
            std::size_t used = 0;
            genus = std::stoi(f[2], &used);
            if (used != f[2].size() || genus < 1) throw std::invalid_argument("genus");
        } catch (const std::exception&) {
            bad_row(lineno, "row " + f[0] + ": genus must be a positive integer");
        }

        std::smatch m;
        if (!std::regex_match(f[3], m, claim_re)) bad_row(lineno, "row " + f[0] + ": unreadable claim '" + f[3] + "'");
        FpbkClaim claim{std::stoi(m[1]), m[2].matched ? std::stoi(m[2]) : std::stoi(m[1])};
        if (claim.lo > claim.hi) bad_row(lineno, "row " + f[0] + ": empty claim range");
        std::string marks = m[3];
        const std::string claim_text = trim(std::string_view(f[3]).substr(0, f[3].size() - marks.size()));

        KnotRecord r{f[0], *code, genus, claim, claim_text, false, std::nullopt, block};
        std::istringstream mk(marks);
        std::string tok;
        while (mk >> tok) {
            if (tok == "•" || tok == "bullet") r.bullet = true;
            else if (tok == "*" || tok == "**") r.footnote = tok;
            else bad_row(lineno, "row " + f[0] + ": unknown mark '" + tok + "'");
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<KnotRecord> load_table(const std::string& path) { return parse_table(slurp(path)); }

std::map<std::string, IntPolynomial> parse_references(std::string_view text) {
    std::map<std::string, IntPolynomial> out;
    std::size_t lineno = 0;
    for (const auto& raw : lines_of(text)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream in(line);
        std::string name, coeffs;
        in >> name >> coeffs;
        if (coeffs.empty())
            throw Error(ErrorKind::ParseError, "reference line " + std::to_string(lineno) + ": missing coefficients");
        try {
            out[name] = parse_polynomial(coeffs);
        } catch (const std::invalid_argument& e) {
            throw Error(ErrorKind::ParseError, "reference line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::map<std::string, IntPolynomial> load_references(const std::string& path) {
    return parse_references(slurp(path));
}

std::string default_data_dir() {
    if (const char* env = std::getenv("FPB_DATA_DIR"); env && *env) return env;
    return FPB_DATA_DIR;
}

std::string_view to_string(RowCheck c) {
    switch (c) {
        case RowCheck::SingleBoundary: return "boundary";
        case RowCheck::ReferenceMatch: return "alexander";
        case RowCheck::BandCount: return "bands";
        case RowCheck::LowerBound: return "bound";
        case RowCheck::GenusSpan: return "genus_span";
        case RowCheck::BulletFlag: return "bullet";
    }
    return "?";
}

bool RowReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.pass; });
}

std::size_t TableReport::passed() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RowReport& r) { return r.pass(); }));
}

namespace {

RowReport verify_row(const KnotRecord& rec, const IntPolynomial& reference) {
    RowReport r;
    r.name = rec.name;
    r.bands = rec.code.bands();
    r.boundary = boundary_components(rec.code);
    const AlexanderPolynomial delta = alexander(rec.code);
    r.delta = delta.normalized;
    auto set = [&](RowCheck c, bool ok, std::string detail) {
        r.checks[static_cast<std::size_t>(c)] = {ok, std::move(detail)};
    };

    set(RowCheck::SingleBoundary, r.boundary == 1, "b = " + std::to_string(r.boundary));
    set(RowCheck::ReferenceMatch, equal_up_to_unit(delta.normalized, reference),
        delta.normalized.to_string() + (equal_up_to_unit(delta.normalized, reference) ? "" : " vs " + reference.to_string()));
    set(RowCheck::BandCount, r.bands == rec.claim.hi,
        std::to_string(r.bands) + " bands, claim upper " + std::to_string(rec.claim.hi));

    const int span = delta.span.value_or(0);
    set(RowCheck::GenusSpan, 2 * rec.genus >= span, "2g = " + std::to_string(2 * rec.genus) + ", span = " + std::to_string(span));

    try {
        r.bound = fpbk_lower_bound(delta, rec.genus);
        set(RowCheck::LowerBound, r.bound->overall == rec.claim.lo,
            "bound " + std::to_string(r.bound->overall) + ", claim lower " + std::to_string(rec.claim.lo));
    } catch (const Error& e) {
        set(RowCheck::LowerBound, false, e.what());
    }

    const bool monic = delta.leading && (*delta.leading == 1 || *delta.leading == -1);
    const bool expected = !monic && span + 4 > 2 * rec.genus + 2;
    set(RowCheck::BulletFlag, expected == rec.bullet,
        std::string("marked ") + (rec.bullet ? "yes" : "no") + ", expected " + (expected ? "yes" : "no"));
    return r;
}

}  // namespace

TableReport verify_table(const std::vector<KnotRecord>& records,
                         const std::map<std::string, IntPolynomial>& references, int jobs) {
    for (const auto& rec : records)
        if (!references.count(rec.name)) throw Error(ErrorKind::MissingReference, "no reference polynomial for " + rec.name);

    TableReport report;
    report.rows.resize(records.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < records.size(); i = next++)
                report.rows[i] = verify_row(records[i], references.at(records[i].name));
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = records.size();
        }
    };
    const int n = std::max(1, jobs);
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < n; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return report;
}

std::vector<std::size_t> block_sizes(const std::vector<KnotRecord>& records) {
    std::vector<std::size_t> out;
    int current = 0;
    for (const auto& r : records) {
        if (out.empty() || r.block != current) {
            out.push_back(0);
            current = r.block;
        }
        ++out.back();
    }
    return out;
}

}  // namespace fpb
