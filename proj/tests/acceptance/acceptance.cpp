// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fpb/bounds.hpp"
#include "fpb/determinant.hpp"
#include "fpb/diagram.hpp"
#include "fpb/error.hpp"
#include "fpb/invariants.hpp"
#include "fpb/passclass.hpp"
#include "fpb/search.hpp"
#include "fpb/table.hpp"

using namespace fpb;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned budgets, in seconds. Integer results are compared exactly.
constexpr double kTableBudget = 5.0;
constexpr double kSanityBudget = 120.0;
constexpr double kSearchBudget = 600.0;
constexpr std::uint64_t kCrossSeed = 20240601;
constexpr int kCrossSamples = 1000;
constexpr int kCrossMaxBands = 8;
constexpr std::uint64_t kOrbitSeed = 7;
constexpr std::size_t kOrbitSample = 500;
constexpr std::size_t kMinCorpus = 20;
constexpr int kSanityJobs = 4;
constexpr int kSearchJobs = 8;

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    void fail(const std::string& why) {
        if (pass) note.str("");
        if (!pass) note << "; ";
        pass = false;
        note << why;
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string data(const char* name) { return std::string(FPB_ACCEPT_DATA_DIR) + "/" + name; }

std::string run_cli(const std::string& args, int* status) {
    const std::string cmd = std::string(FPB_CLI_PATH) + " " + args;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    std::array<char, 1 << 16> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
    *status = pclose(pipe.release());
    return out;
}

bool palindromic_up_to_sign(const IntPolynomial& p) {
    const auto& c = p.coefficients();
    std::vector<BigInt> rev(c.rbegin(), c.rend());
    IntPolynomial r(rev);
    return r == p || r == IntPolynomial() - p;
}

void criterion_table(Outcome& o) {
    const auto t0 = Clock::now();
    const auto report = verify_table(load_table(data("fpbk_table.tsv")), load_references(data("reference_alexander.tsv")));
    const double dt = seconds_since(t0);
    std::size_t ok = 0;
    for (const auto& r : report.rows) {
        if (r.check(RowCheck::ReferenceMatch).pass) ++ok;
        else o.fail(r.name + " " + r.check(RowCheck::ReferenceMatch).detail);
    }
    if (report.rows.size() != kTableRowCount) o.fail("row count " + std::to_string(report.rows.size()));
    if (dt > kTableBudget) o.fail("took " + std::to_string(dt) + " s");
    if (o.pass) o.note << ok << "/" << report.rows.size() << " rows match the reference polynomial, " << dt << " s";
}

void criterion_bounds(Outcome& o) {
    const auto five = fpbk_lower_bound(normalize_alexander(IntPolynomial{2, -3, 2}), 1);
    if (five.overall != 6) o.fail("5_2 bound " + std::to_string(five.overall));
    const auto report = verify_table(load_table(data("fpbk_table.tsv")), load_references(data("reference_alexander.tsv")));
    std::size_t bound_ok = 0, bullet_ok = 0;
    std::vector<std::string> bullet_bad;
    for (const auto& r : report.rows) {
        if (r.check(RowCheck::LowerBound).pass) ++bound_ok;
        else o.fail(r.name + " " + r.check(RowCheck::LowerBound).detail);
        if (r.check(RowCheck::BulletFlag).pass) ++bullet_ok;
        else bullet_bad.push_back(r.name + " (" + r.check(RowCheck::BulletFlag).detail + ")");
    }
    for (const auto& b : bullet_bad) o.fail("bullet mismatch " + b);
    if (!o.pass)
        o.note << " [bound matches claim on " << bound_ok << "/" << report.rows.size() << ", bullet on " << bullet_ok
               << "/" << report.rows.size() << "]";
    else
        o.note << "5_2 bound 6; bound = claim on " << bound_ok << " rows; bullets agree on " << bullet_ok << " rows";
}

void criterion_anchors(Outcome& o) {
    const auto a = alexander(parse_code("1,2,3,4,1,2,3,4"));
    if (a.normalized != IntPolynomial{1, -1, 1}) o.fail("3_1 normalized " + a.normalized.to_string());
    if (a.raw != IntPolynomial{0, 1, -1, 1}) o.fail("3_1 raw " + a.raw.to_string());
    const auto b = alexander(parse_code("1,2,4,3,1,2,4,3"));
    if (b.normalized != IntPolynomial{1, -3, 1}) o.fail("4_1 " + b.normalized.to_string());
    if (o.pass) o.note << "3_1: " << a.normalized << " (raw " << a.raw << "), 4_1: " << b.normalized;
}

void criterion_sanity(Outcome& o) {
    const auto t0 = Clock::now();
    for (const auto& r : load_table(data("fpbk_table.tsv")))
        if (boundary_components(r.code) != 1) o.fail(r.name + " has b != 1");

    std::size_t checked = 0;
    for (int n = 1; n <= 6; ++n) {
        SearchQuery q;
        q.bands = n;
        q.knots_only = true;
        q.jobs = kSanityJobs;
        for (const auto& rec : search(q)) {
            ++checked;
            const auto& code = rec.code;
            const auto a = alexander(code, CheckMode::Fast);
            const auto v = seifert_matrix(code);
            const std::string tag = code.to_string() + ": ";
            const BigInt at1 = a.raw.evaluate(BigInt(1));
            const BigInt atm1 = a.raw.evaluate(BigInt(-1));
            if (at1 != 1 && at1 != -1) o.fail(tag + "|Δ(1)| != 1");
            if (atm1 % 2 == 0) o.fail(tag + "Δ(-1) even");
            if (!palindromic_up_to_sign(a.normalized)) o.fail(tag + "not palindromic");
            if (a.raw.min_degree() < 1 || a.raw.degree() > n - 1) o.fail(tag + "raw degree outside [1, n-1]");
            int product = v(n - 1, 0);
            for (int i = 0; i + 1 < n; ++i) product *= v(i + 1, i);
            BigInt top = a.raw.coeff(static_cast<std::size_t>(n - 1));
            if (abs(top) != std::abs(product)) o.fail(tag + "top coefficient");
            if (!o.pass) return;
        }
    }
    const double dt = seconds_since(t0);
    if (dt > kSanityBudget) o.fail("took " + std::to_string(dt) + " s");
    if (o.pass) o.note << "84 table codes with b = 1; " << checked << " knot codes with n <= 6 checked, " << dt << " s";
}

void criterion_cross(Outcome& o) {
    std::mt19937_64 rng(kCrossSeed);
    std::uniform_int_distribution<int> bands(1, kCrossMaxBands);
    for (int trial = 0; trial < kCrossSamples; ++trial) {
        const int n = bands(rng);
        std::vector<int> w;
        for (int i = 1; i <= n; ++i) w.insert(w.end(), {i, i});
        std::shuffle(w.begin(), w.end(), rng);
        const auto v = seifert_matrix(FlatBasketCode(w));
        const auto ff = pencil_determinant(v, DeterminantMethod::FractionFree);
        const auto ei = pencil_determinant(v, DeterminantMethod::EvalInterp);
        if (ff != ei) {
            o.fail(FlatBasketCode(w).to_string() + ": " + ff.to_string() + " vs " + ei.to_string());
            return;
        }
    }
    o.note << kCrossSamples << " codes (seed " << kCrossSeed << ", n <= " << kCrossMaxBands << ") agree exactly";
}

void criterion_orbit(Outcome& o) {
    std::size_t matchings = 0, codes = 0;
    auto check = [&](const UnderlyingDiagram& m) {
        const auto r = orbit_invariant_check(m);
        ++matchings;
        codes += r.orbit_size;
        if (!r.pass) {
            std::ostringstream os;
            for (int p : m.partners()) os << p << ' ';
            o.fail("Arf not constant on matching " + os.str());
        }
    };
    for (int n : {2, 4}) for_each_matching(n, true, check);
    const auto six = enumerate_matchings(6, true);
    std::vector<std::size_t> idx(six.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), std::mt19937_64(kOrbitSeed));
    for (std::size_t i = 0; i < kOrbitSample && i < idx.size(); ++i) check(six[idx[i]]);
    if (o.pass)
        o.note << matchings << " single-boundary matchings (all n = 2, 4; " << kOrbitSample << " sampled at n = 6), "
               << codes << " labelled codes";
}

void criterion_search(Outcome& o) {
    const auto c2 = census(2);
    if (!(c2.size() == 1 && c2.begin()->first == IntPolynomial{1} && c2.begin()->second == 1)) o.fail("census(2)");

    auto hits = [](int n, IntPolynomial target) {
        SearchQuery q;
        q.bands = n;
        q.target = target;
        q.jobs = kSearchJobs;
        return search(q);
    };
    const auto four = hits(4, IntPolynomial{1, -1, 1});
    const bool has_trefoil = std::any_of(four.begin(), four.end(), [](const SearchRecord& r) {
        return r.code.word() == std::vector<int>{1, 2, 3, 4, 1, 2, 3, 4};
    });
    if (!has_trefoil) o.fail("n = 4 search misses the 3_1 code");
    if (!hits(2, IntPolynomial{1, -1, 1}).empty()) o.fail("n = 2 search for t^2 - t + 1 is not empty");
    const auto square = hits(6, IntPolynomial{1, -2, 3, -2, 1});
    if (square.empty()) o.fail("no n = 6 code for t^4 - 2t^3 + 3t^2 - 2t + 1");
    const auto twist = hits(6, IntPolynomial{2, -3, 2});
    if (twist.empty()) o.fail("no n = 6 code for 2t^2 - 3t + 2");

    const auto t0 = Clock::now();
    SearchQuery full;
    full.bands = 6;
    full.jobs = kSearchJobs;
    const auto all = search(full);
    const double dt = seconds_since(t0);
    if (dt > kSearchBudget) o.fail("exhaustive n = 6 took " + std::to_string(dt) + " s");
    if (o.pass)
        o.note << "census(2) = {1: 1}; n = 4 has " << four.size() << " trefoil codes; n = 6 has " << square.size()
               << " codes for (t^2-t+1)^2 and " << twist.size() << " for 2t^2-3t+2; exhaustive n = 6 ("
               << all.size() << " codes) in " << dt << " s";
}

void criterion_pushdown(Outcome& o) {
    const std::filesystem::path dir = std::filesystem::path(FPB_ACCEPT_DATA_DIR) / "diagrams";
    std::size_t files = 0, flat = 0, steps = 0;
    bool valley = false, hopf = false, trefoil = false;
    std::vector<std::filesystem::path> paths;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".txt") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& path : paths) {
        ++files;
        const std::string name = path.stem().string();
        const auto d = load_diagram(path.string());
        const auto r = flatten(d);
        steps += r.steps.size();
        for (const auto& s : r.steps) {
            if (s.bands_after != s.bands_before + 2) o.fail(name + ": band count not +2");
            if (s.boundary_after != s.boundary_before) o.fail(name + ": boundary count changed");
            if (s.ascending_after >= s.ascending_before) o.fail(name + ": no progress");
        }
        const auto oracle = alexander(diagram_seifert_matrix(d)).normalized;
        if (alexander(r.code).normalized != oracle) o.fail(name + ": Δ differs from the diagram oracle");
        if (r.steps.empty()) {
            ++flat;
            if (diagram_seifert_matrix(d) != seifert_matrix(read_off(d))) o.fail(name + ": flat matrix differs");
            hopf |= read_off(d).word() == std::vector<int>{1, 2, 1, 2};
            trefoil |= read_off(d).word() == std::vector<int>{1, 2, 3, 4, 1, 2, 3, 4};
        }
        if (name == "valley") valley = r.code.word() == std::vector<int>{1, 3, 1, 2, 3, 2} && r.steps.size() == 1;
    }
    if (files < kMinCorpus) o.fail("corpus has only " + std::to_string(files) + " diagrams");
    if (!valley) o.fail("valley example does not flatten to (1,3,1,2,3,2)");
    if (!hopf || !trefoil) o.fail("calibration anchors missing from the corpus");
    if (flat == 0) o.fail("no flat diagrams");
    if (o.pass)
        o.note << files << " diagrams (" << flat << " flat), " << steps << " push-downs, all Δ match the diagram oracle";
}

void criterion_determinism(Outcome& o) {
    for (const std::string args : {"search -n 5", "--json search -n 6 --knots-only"}) {
        int s1 = 0, s8 = 0;
        const auto one = run_cli(args + " --jobs 1", &s1);
        const auto eight = run_cli(args + " --jobs 8", &s8);
        if (s1 != 0 || s8 != 0) o.fail("'" + args + "' exited with an error");
        else if (one != eight) o.fail("'" + args + "' output differs between --jobs 1 and --jobs 8");
        else if (one.empty()) o.fail("'" + args + "' printed nothing");
        if (o.pass) o.note << (o.note.tellp() > 0 ? "; " : "") << "'" << args << "': " << one.size() << " bytes identical";
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"table reproduction", criterion_table},
        {"bound reproduction", criterion_bounds},
        {"hand-verified anchors", criterion_anchors},
        {"knot sanity suite", criterion_sanity},
        {"determinant cross-validation", criterion_cross},
        {"orbit Arf property", criterion_orbit},
        {"search milestones", criterion_search},
        {"push-down suite", criterion_pushdown},
        {"determinism", criterion_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << o.note.str() << std::endl;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria pass"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
