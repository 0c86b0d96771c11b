// Command-line front end for the flat basket library.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpb/bounds.hpp"
#include "fpb/code.hpp"
#include "fpb/diagram.hpp"
#include "fpb/error.hpp"
#include "fpb/invariants.hpp"
#include "fpb/passclass.hpp"
#include "fpb/search.hpp"
#include "fpb/seifert.hpp"
#include "fpb/table.hpp"

using nlohmann::json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

bool g_json = false;
int status = 0;

json big(const fpb::BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

// Coefficients from the lowest nonzero term upward, with that term's degree.
json poly_json(const fpb::IntPolynomial& p) {
    json coeffs = json::array();
    const int low = std::max(0, p.min_degree());
    for (std::size_t d = static_cast<std::size_t>(low); d < p.coefficients().size(); ++d)
        coeffs.push_back(big(p.coefficients()[d]));
    return {{"min_degree", low}, {"coefficients", coeffs}};
}

json matrix_json(const fpb::IntMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::string_view kind_name(fpb::PushDownKind k) {
    switch (k) {
        case fpb::PushDownKind::Valley: return "valley";
        case fpb::PushDownKind::LeftCorner: return "left-corner";
        case fpb::PushDownKind::RightCorner: return "right-corner";
    }
    return "?";
}

fpb::FlatBasketCode require_knot(const std::string& text) {
    auto code = fpb::parse_code(text);
    const int b = fpb::boundary_components(code);
    if (b != 1)
        throw fpb::Error(fpb::ErrorKind::NotAKnot,
                         code.to_string() + " bounds a link with " + std::to_string(b) + " components");
    return code;
}

std::string data_path(const std::string& given, const char* file) {
    return given.empty() ? fpb::default_data_dir() + "/" + file : given;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flat plumbing basket toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g_json, "Structured output");

    std::string code_text;
    auto add_code = [&](CLI::App* sub) { sub->add_option("--code,code", code_text, "Flat basket code")->required(); };

    auto* validate = app.add_subcommand("validate", "Check a code and print its canonical form");
    add_code(validate);
    validate->callback([&] {
        const auto code = fpb::parse_code(code_text);
        const auto canon = fpb::canonicalize(code);
        if (g_json) emit({{"code", code.word()}, {"canonical", canon.word()}, {"bands", code.bands()}});
        else std::cout << "ok " << canon.to_string() << '\n';
    });

    auto* stats = app.add_subcommand("stats", "Band count, Euler characteristic, boundary components, genus");
    add_code(stats);
    stats->callback([&] {
        const auto s = fpb::surface_stats(fpb::parse_code(code_text));
        if (g_json)
            emit({{"bands", s.bands}, {"chi", s.euler_characteristic}, {"b", s.boundary_components}, {"genus", s.genus}});
        else
            std::cout << "bands " << s.bands << "\nchi " << s.euler_characteristic << "\nb " << s.boundary_components
                      << "\ngenus " << s.genus << '\n';
    });

    bool symmetric = false;
    auto* matrix = app.add_subcommand("matrix", "Seifert matrix");
    add_code(matrix);
    matrix->add_flag("--symmetrized", symmetric, "Print V + V^T instead");
    matrix->callback([&] {
        fpb::IntMatrix v = fpb::seifert_matrix(fpb::parse_code(code_text));
        if (symmetric) v = fpb::symmetrized(v);
        if (g_json) emit(matrix_json(v));
        else std::cout << fpb::format_matrix(v);
    });

    std::string method = "checked";
    bool raw = false;
    auto* alex = app.add_subcommand("alexander", "Alexander polynomial det(V - tV^T)");
    add_code(alex);
    alex->add_option("--method", method, "fraction-free, eval-interp or checked")
        ->check(CLI::IsMember({"fraction-free", "eval-interp", "checked"}));
    alex->add_flag("--raw", raw, "Print the unnormalized determinant");
    alex->callback([&] {
        const auto code = fpb::parse_code(code_text);
        fpb::AlexanderPolynomial a;
        if (method == "checked") {
            a = fpb::alexander(code, fpb::CheckMode::Checked);
        } else {
            const auto m = method == "fraction-free" ? fpb::DeterminantMethod::FractionFree
                                                     : fpb::DeterminantMethod::EvalInterp;
            a = fpb::normalize_alexander(fpb::pencil_determinant(fpb::seifert_matrix(code), m));
        }
        if (g_json) {
            json j{{"normalized", poly_json(a.normalized)}, {"raw", poly_json(a.raw)}};
            j["span"] = a.span ? json(*a.span) : json(nullptr);
            j["leading"] = a.leading ? big(*a.leading) : json(nullptr);
            emit(j);
        } else {
            std::cout << (raw ? a.raw : a.normalized).to_string() << '\n';
        }
    });

    auto* inv = app.add_subcommand("invariants", "Alexander polynomial, determinant, Arf, signature");
    add_code(inv);
    inv->callback([&] {
        const auto code = fpb::parse_code(code_text);
        const auto s = fpb::surface_stats(code);
        const auto a = fpb::alexander(code);
        const int sig = fpb::signature(code);
        std::optional<fpb::BigInt> det;
        std::optional<int> arf;
        if (s.boundary_components == 1) {
            det = fpb::knot_determinant(code);
            arf = fpb::arf_from_determinant(*det);
        }
        if (g_json) {
            emit({{"b", s.boundary_components},
                  {"alexander", poly_json(a.normalized)},
                  {"det", det ? big(*det) : json(nullptr)},
                  {"arf", arf ? json(*arf) : json(nullptr)},
                  {"signature", sig}});
            return;
        }
        std::cout << "b " << s.boundary_components << "\nalexander " << a.normalized << '\n';
        if (det) std::cout << "det " << *det << "\narf " << *arf << '\n';
        std::cout << "signature " << sig << '\n';
    });

    std::optional<int> genus;
    std::string poly_text;
    auto* bound = app.add_subcommand("bound", "Lower bound for the flat plumbing basket number");
    auto* bound_code = bound->add_option("--code", code_text, "Flat basket code of a knot");
    bound->add_option("--poly", poly_text, "Alexander polynomial instead of a code")->excludes(bound_code);
    bound->add_option("--genus", genus, "Three genus of the knot");
    bound->callback([&] {
        fpb::AlexanderPolynomial a;
        if (!poly_text.empty()) a = fpb::normalize_alexander(fpb::parse_polynomial(poly_text));
        else if (!code_text.empty()) a = fpb::alexander(require_knot(code_text));
        else throw CLI::RequiredError("--code or --poly");
        const auto b = fpb::fpbk_lower_bound(a, genus);
        if (g_json) {
            emit({{"genus_bound", b.genus_bound ? json(*b.genus_bound) : json(nullptr)},
                  {"degree_bound", b.degree_bound},
                  {"case", fpb::to_string(b.case_tag)},
                  {"overall", b.overall}});
            return;
        }
        std::cout << "genus_bound " << (b.genus_bound ? std::to_string(*b.genus_bound) : "-") << "\ndegree_bound "
                  << b.degree_bound << "\ncase " << fpb::to_string(b.case_tag) << "\noverall " << b.overall << '\n';
    });

    auto* pass = app.add_subcommand("passclass", "Pass-equivalence class");
    add_code(pass);
    pass->callback([&] {
        const auto p = fpb::pass_class(fpb::parse_code(code_text));
        const bool exact = p.certainty == fpb::Certainty::Exact;
        if (g_json) emit({{"class", p.label()}, {"components", p.components}, {"certainty", exact ? "exact" : "partial"}});
        else std::cout << p.label() << (exact ? "" : " (partial)") << '\n';
    });

    std::string matching_text;
    auto* orbit = app.add_subcommand("orbit-check", "Arf over all labellings of a matching");
    orbit->add_option("--matching,matching", matching_text, "Partner list or pairs such as 1-3 2-4")->required();
    orbit->callback([&] {
        const auto r = fpb::orbit_invariant_check(fpb::parse_matching(matching_text));
        if (g_json) {
            emit({{"arf_values", r.arf_values}, {"orbit_size", r.orbit_size}, {"pass", r.pass}});
        } else {
            std::cout << "orbit " << r.orbit_size << "\narf";
            for (int v : r.arf_values) std::cout << ' ' << v;
            std::cout << '\n' << (r.pass ? "pass" : "FAIL") << '\n';
        }
        if (!r.pass) status = kExitDomain;
    });

    std::string diagram_path;
    bool trace = false;
    auto* flat = app.add_subcommand("flatten", "Push a normal-form diagram down to a flat basket");
    flat->add_option("--diagram,diagram", diagram_path, "Diagram file")->required()->check(CLI::ExistingFile);
    flat->add_flag("--trace", trace, "Print each push-down step");
    flat->callback([&] {
        const auto d = fpb::load_diagram(diagram_path);
        const auto r = fpb::flatten(d);
        if (g_json) {
            json steps = json::array();
            for (const auto& s : r.steps)
                steps.push_back({{"band", s.site.band},
                                 {"segment", s.site.segment},
                                 {"kind", kind_name(s.kind)},
                                 {"height", s.height},
                                 {"bands", {s.bands_before, s.bands_after}},
                                 {"b", {s.boundary_before, s.boundary_after}},
                                 {"ascending", {s.ascending_before, s.ascending_after}}});
            json j{{"code", r.code.word()}, {"steps", steps}};
            if (trace) j["diagram"] = fpb::format_diagram(r.flat);
            emit(j);
            return;
        }
        if (trace) {
            for (std::size_t i = 0; i < r.steps.size(); ++i) {
                const auto& s = r.steps[i];
                std::cout << "step " << i + 1 << ": " << kind_name(s.kind) << " at band " << s.site.band
                          << " height " << s.height << ", bands " << s.bands_before << " -> " << s.bands_after
                          << ", b " << s.boundary_before << " -> " << s.boundary_after << ", ascending "
                          << s.ascending_before << " -> " << s.ascending_after << '\n';
            }
        }
        std::cout << r.code.to_string() << '\n';
    });

    int bands = 0;
    int jobs = 1;
    std::string target_text, store_path;
    bool knots_only = false, dedup_mirror = false;
    std::optional<std::size_t> limit;
    auto* srch = app.add_subcommand("search", "Enumerate canonical codes with n bands");
    srch->add_option("-n,--bands", bands, "Band count")->required()->check(CLI::Range(1, 12));
    srch->add_option("--target", target_text, "Alexander polynomial to match up to units");
    srch->add_flag("--knots-only", knots_only, "Keep single-boundary codes only");
    srch->add_flag("--dedup-mirror", dedup_mirror, "Keep one code of each mirror pair");
    srch->add_option("--limit", limit, "Maximum number of records");
    srch->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    srch->add_option("--store", store_path, "Append results to a record file");
    srch->callback([&] {
        fpb::SearchQuery q;
        q.bands = bands;
        q.knots_only = knots_only;
        q.dedup_mirror = dedup_mirror;
        q.limit = limit;
        q.jobs = jobs;
        if (!target_text.empty()) q.target = fpb::normalize_alexander(fpb::parse_polynomial(target_text)).normalized;
        const auto records = fpb::search(q);
        for (const auto& r : records) {
            if (g_json) {
                std::cout << fpb::to_json_line(r) << '\n';
                continue;
            }
            std::cout << r.code.to_string() << "\tb=" << r.boundary << "\tg=" << r.genus << "\tdelta=" << r.delta
                      << "\tdet=" << r.determinant << "\tarf=" << (r.arf ? std::to_string(*r.arf) : "-")
                      << "\tsig=" << r.signature << '\n';
        }
        if (!store_path.empty()) {
            const auto s = fpb::merge_into_store(store_path, records);
            std::cerr << "store: " << s.added << " added, " << s.verified << " verified\n";
        }
    });

    auto* cens = app.add_subcommand("census", "Histogram of Alexander polynomials over knot codes");
    cens->add_option("-n,--bands", bands, "Band count")->required()->check(CLI::PositiveNumber);
    cens->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    cens->callback([&] {
        const auto hist = fpb::census(bands, jobs);
        if (g_json) {
            json rows = json::array();
            for (const auto& [p, count] : hist) rows.push_back({{"delta", poly_json(p)}, {"count", count}});
            emit(rows);
            return;
        }
        for (const auto& [p, count] : hist) std::cout << count << '\t' << p << '\n';
    });

    std::string table_path, ref_path;
    auto* verify = app.add_subcommand("verify-table", "Check every row of the bundled knot table");
    verify->add_option("--table", table_path, "Table file (default: bundled)");
    verify->add_option("--references", ref_path, "Reference polynomials (default: bundled)");
    verify->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->callback([&] {
        const auto records = fpb::load_table(data_path(table_path, "fpbk_table.tsv"));
        const auto refs = fpb::load_references(data_path(ref_path, "reference_alexander.tsv"));
        const auto report = fpb::verify_table(records, refs, jobs);
        for (const auto& row : report.rows) {
            if (g_json) {
                json checks;
                for (std::size_t c = 0; c < fpb::kRowCheckCount; ++c)
                    checks[std::string(fpb::to_string(static_cast<fpb::RowCheck>(c)))] = {
                        {"pass", row.checks[c].pass}, {"detail", row.checks[c].detail}};
                emit({{"name", row.name},
                      {"pass", row.pass()},
                      {"delta", poly_json(row.delta)},
                      {"bound", row.bound ? json(row.bound->overall) : json(nullptr)},
                      {"checks", checks}});
                continue;
            }
            std::cout << row.name << '\t' << (row.pass() ? "pass" : "FAIL");
            for (std::size_t c = 0; c < fpb::kRowCheckCount; ++c)
                if (!row.checks[c].pass)
                    std::cout << '\t' << fpb::to_string(static_cast<fpb::RowCheck>(c)) << ": " << row.checks[c].detail;
            std::cout << '\n';
        }
        if (!g_json) std::cout << report.passed() << '/' << report.rows.size() << " rows pass\n";
        if (!report.all_pass()) status = kExitDomain;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const fpb::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return status;
}
