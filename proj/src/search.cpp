#include "fpb/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "fpb/bounds.hpp"
#include "fpb/error.hpp"
#include "fpb/invariants.hpp"
#include "fpb/passclass.hpp"

namespace fpb {

std::uint64_t matching_count(int n) {
    std::uint64_t c = 1;
    for (int k = 2 * n - 1; k > 1; k -= 2) c *= static_cast<std::uint64_t>(k);
    return c;
}

namespace {

void extend(std::vector<int>& partner, const std::function<void(std::vector<int>&)>& leaf) {
    const auto free = std::find(partner.begin(), partner.end(), 0);
    if (free == partner.end()) {
        leaf(partner);
        return;
    }
    const int i = static_cast<int>(free - partner.begin()) + 1;
    for (int j = i + 1; j <= static_cast<int>(partner.size()); ++j) {
        if (partner[static_cast<std::size_t>(j - 1)] != 0) continue;
        partner[static_cast<std::size_t>(i - 1)] = j;
        partner[static_cast<std::size_t>(j - 1)] = i;
        extend(partner, leaf);
        partner[static_cast<std::size_t>(i - 1)] = 0;
        partner[static_cast<std::size_t>(j - 1)] = 0;
    }
}

}  // namespace

void for_each_matching(int n, bool knots_only, const std::function<void(const UnderlyingDiagram&)>& visit) {
    if (n < 1) throw std::invalid_argument("for_each_matching: n must be positive");
    std::vector<int> partner(static_cast<std::size_t>(2 * n), 0);
    extend(partner, [&](std::vector<int>& p) {
        UnderlyingDiagram m(p);
        if (!knots_only || boundary_components(m) == 1) visit(m);
    });
}

std::vector<UnderlyingDiagram> enumerate_matchings(int n, bool knots_only) {
    std::vector<UnderlyingDiagram> out;
    for_each_matching(n, knots_only, [&](const UnderlyingDiagram& m) { out.push_back(m); });
    return out;
}

bool is_rotation_minimal(const UnderlyingDiagram& m) {
    for (int k = 1; k < m.points(); ++k)
        if (m.rotated(k).partners() < m.partners()) return false;
    return true;
}

std::vector<FlatBasketCode> enumerate_codes(const UnderlyingDiagram& m) {
    return labeling_orbit(m, std::numeric_limits<int>::max());
}

SearchRecord make_record(const FlatBasketCode& code) {
    const SurfaceStats st = surface_stats(code);
    const AlexanderPolynomial delta = alexander(code, CheckMode::Fast);
    BigInt det = delta.normalized.evaluate(BigInt(-1));
    if (det < 0) det = -det;
    std::optional<int> arf;
    if (st.boundary_components == 1) arf = arf_from_determinant(det);
    return {code, st.boundary_components, st.genus, delta.normalized, det, arf, signature(code)};
}

namespace {

// Sanity check: a non-trivial knot realized with n bands never has a
// lower bound above n.
void check_bound(const SearchRecord& r, int n) {
    if (r.boundary != 1 || r.delta == IntPolynomial(1)) return;
    const auto delta = normalize_alexander(r.delta);
    const int bound = fpbk_lower_bound(delta, *delta.span / 2).overall;
    if (bound > n)
        throw std::logic_error("search: " + r.code.to_string() + " has " + std::to_string(n) +
                               " bands but lower bound " + std::to_string(bound));
}

}  // namespace

std::vector<SearchRecord> search(const SearchQuery& q) {
    if (q.bands < 1) throw std::invalid_argument("search: bands must be positive");
    std::vector<UnderlyingDiagram> work;
    for_each_matching(q.bands, q.knots_only, [&](const UnderlyingDiagram& m) {
        if (is_rotation_minimal(m)) work.push_back(m);
    });

    const int jobs = std::max(1, q.jobs);
    std::vector<std::vector<SearchRecord>> partial(static_cast<std::size_t>(jobs));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&](std::size_t slot) {
        try {
            auto& out = partial[slot];
            for (std::size_t i = next++; i < work.size(); i = next++) {
                for_each_labeling(
                    work[i],
                    [&](const FlatBasketCode& code) {
                        if (q.dedup_mirror && mirrored(code) < code) return;
                        if (q.target) {
                            const auto delta = alexander(code, CheckMode::Fast);
                            if (delta.normalized != *q.target) return;
                        }
                        SearchRecord r = make_record(code);
                        check_bound(r, q.bands);
                        out.push_back(std::move(r));
                    },
                    std::numeric_limits<int>::max());
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = work.size();
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, static_cast<std::size_t>(j));
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<SearchRecord> all;
    for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(all));
    std::sort(all.begin(), all.end(), [](const SearchRecord& a, const SearchRecord& b) { return a.code < b.code; });
    if (q.limit && all.size() > *q.limit) all.erase(all.begin() + static_cast<std::ptrdiff_t>(*q.limit), all.end());
    return all;
}

std::map<IntPolynomial, std::size_t> census(int n, int jobs, int cap) {
    if (n > cap)
        throw Error(ErrorKind::CapExceeded,
                    "census is exhaustive only up to " + std::to_string(cap) + " bands");
    SearchQuery q;
    q.bands = n;
    q.knots_only = true;
    q.jobs = jobs;
    std::map<IntPolynomial, std::size_t> hist;
    for (const auto& r : search(q)) ++hist[r.delta];
    return hist;
}

namespace {

nlohmann::json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

BigInt big_from_json(const nlohmann::json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<long long>());
}

}  // namespace

std::string to_json_line(const SearchRecord& r) {
    nlohmann::json j;
    j["code"] = r.code.word();
    j["b"] = r.boundary;
    j["genus"] = r.genus;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : r.delta.coefficients()) coeffs.push_back(big_to_json(c));
    j["delta"] = coeffs;
    j["det"] = big_to_json(r.determinant);
    j["arf"] = r.arf ? nlohmann::json(*r.arf) : nlohmann::json(nullptr);
    j["signature"] = r.signature;
    return j.dump();
}

SearchRecord from_json_line(const std::string& line) {
    try {
        const auto j = nlohmann::json::parse(line);
        std::vector<BigInt> coeffs;
        for (const auto& c : j.at("delta")) coeffs.push_back(big_from_json(c));
        std::optional<int> arf;
        if (!j.at("arf").is_null()) arf = j.at("arf").get<int>();
        return {FlatBasketCode(j.at("code").get<std::vector<int>>()),
                j.at("b").get<int>(),
                j.at("genus").get<int>(),
                IntPolynomial(std::move(coeffs)),
                big_from_json(j.at("det")),
                arf,
                j.at("signature").get<int>()};
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("store record: ") + e.what());
    }
}

StoreSummary merge_into_store(const std::string& path, const std::vector<SearchRecord>& records) {
    std::map<std::vector<int>, SearchRecord> existing;
    {
        std::ifstream in(path);
        std::string line;
        std::size_t lineno = 0;
        while (in && std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            SearchRecord r = from_json_line(line);
            if (make_record(r.code) != r)
                throw Error(ErrorKind::StoreMismatch,
                            path + ":" + std::to_string(lineno) + " does not match recomputed invariants");
            existing.emplace(r.code.word(), std::move(r));
        }
    }
    StoreSummary s;
    std::ofstream out(path, std::ios::app);
    if (!out) throw Error(ErrorKind::IoError, "cannot append to " + path);
    for (const auto& r : records) {
        if (auto it = existing.find(r.code.word()); it != existing.end()) {
            if (it->second != r)
                throw Error(ErrorKind::StoreMismatch, r.code.to_string() + " differs from the stored record");
            ++s.verified;
            continue;
        }
        out << to_json_line(r) << '\n';
        existing.emplace(r.code.word(), r);
        ++s.added;
    }
    return s;
}

}  // namespace fpb
