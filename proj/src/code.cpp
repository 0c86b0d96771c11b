#include "fpb/code.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "fpb/error.hpp"

namespace fpb {

namespace {

// Splits on commas, whitespace and an optional pair of outer parentheses.
std::vector<std::string_view> tokenize(std::string_view text) {
    auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (b < e && text[b] == '(') {
        if (text[e - 1] != ')') throw Error(ErrorKind::MalformedCode, "unbalanced parenthesis");
        ++b;
        --e;
    }
    std::vector<std::string_view> out;
    std::size_t i = b;
    while (i < e) {
        while (i < e && is_sep(text[i])) ++i;
        std::size_t j = i;
        while (j < e && !is_sep(text[j])) ++j;
        if (j > i) out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_positive(std::string_view tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value <= 0)
        throw Error(ErrorKind::MalformedCode, "not a positive integer: '" + std::string(tok) + "'");
    return value;
}

}  // namespace

UnderlyingDiagram::UnderlyingDiagram(std::vector<int> partner) : partner_(std::move(partner)) {
    const int m = static_cast<int>(partner_.size());
    if (m == 0) throw Error(ErrorKind::EmptyInput, "empty matching");
    if (m % 2 != 0) throw Error(ErrorKind::InvalidMatching, "odd number of points");
    for (int i = 1; i <= m; ++i) {
        const int p = partner_[static_cast<std::size_t>(i - 1)];
        if (p < 1 || p > m || p == i || partner_[static_cast<std::size_t>(p - 1)] != i)
            throw Error(ErrorKind::InvalidMatching,
                        "position " + std::to_string(i) + " is not matched to a distinct mate");
    }
}

std::vector<FootPair> UnderlyingDiagram::chords() const {
    std::vector<FootPair> out;
    out.reserve(partner_.size() / 2);
    for (int i = 1; i <= points(); ++i)
        if (partner(i) > i) out.push_back({i, partner(i)});
    return out;
}

UnderlyingDiagram UnderlyingDiagram::rotated(int k) const {
    const int m = points();
    k = ((k % m) + m) % m;
    std::vector<int> p(partner_.size());
    for (int i = 1; i <= m; ++i) {
        const int ni = ((i - 1 - k) % m + m) % m + 1;
        const int nj = ((partner(i) - 1 - k) % m + m) % m + 1;
        p[static_cast<std::size_t>(ni - 1)] = nj;
    }
    return UnderlyingDiagram(std::move(p));
}

UnderlyingDiagram parse_matching(std::string_view text) {
    const auto toks = tokenize(text);
    if (toks.empty()) throw Error(ErrorKind::EmptyInput, "empty matching");
    const bool pairs = std::any_of(toks.begin(), toks.end(), [](std::string_view t) {
        return t.find('-') != std::string_view::npos || t.find(':') != std::string_view::npos;
    });
    try {
        if (!pairs) {
            std::vector<int> partner;
            for (auto t : toks) partner.push_back(parse_positive(t));
            return UnderlyingDiagram(std::move(partner));
        }
        std::vector<std::pair<int, int>> ps;
        int maxpos = 0;
        for (auto t : toks) {
            const auto cut = t.find_first_of("-:");
            if (cut == std::string_view::npos) throw Error(ErrorKind::InvalidMatching, "expected pair a-b");
            const int a = parse_positive(t.substr(0, cut));
            const int b = parse_positive(t.substr(cut + 1));
            ps.emplace_back(a, b);
            maxpos = std::max({maxpos, a, b});
        }
        std::vector<int> partner(static_cast<std::size_t>(maxpos), 0);
        for (auto [a, b] : ps) {
            if (partner[static_cast<std::size_t>(a - 1)] || partner[static_cast<std::size_t>(b - 1)])
                throw Error(ErrorKind::InvalidMatching, "position used twice");
            partner[static_cast<std::size_t>(a - 1)] = b;
            partner[static_cast<std::size_t>(b - 1)] = a;
        }
        return UnderlyingDiagram(std::move(partner));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::MalformedCode) throw Error(ErrorKind::InvalidMatching, e.what());
        throw;
    }
}

FlatBasketCode::FlatBasketCode(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty()) throw Error(ErrorKind::EmptyInput, "empty code");
    const int maxlabel = *std::max_element(word_.begin(), word_.end());
    const int minlabel = *std::min_element(word_.begin(), word_.end());
    if (minlabel < 1) throw Error(ErrorKind::MalformedCode, "labels must be positive");
    std::vector<int> count(static_cast<std::size_t>(maxlabel) + 1, 0);
    for (int x : word_) ++count[static_cast<std::size_t>(x)];
    for (int x = 1; x <= maxlabel; ++x) {
        const int c = count[static_cast<std::size_t>(x)];
        if (c != 0 && c != 2)
            throw Error(ErrorKind::MalformedCode,
                        "label " + std::to_string(x) + " occurs " + std::to_string(c) + " time(s)");
    }
    if (word_.size() % 2 != 0) throw Error(ErrorKind::MalformedCode, "odd word length");
    const int n = static_cast<int>(word_.size() / 2);
    if (maxlabel != n)
        throw Error(ErrorKind::NonContiguousLabels,
                    "labels must be exactly 1.." + std::to_string(n) + ", found maximum " + std::to_string(maxlabel));
    feet_.assign(static_cast<std::size_t>(n), FootPair{0, 0});
    for (int pos = 1; pos <= length(); ++pos) {
        auto& f = feet_[static_cast<std::size_t>(at(pos) - 1)];
        (f.first == 0 ? f.first : f.second) = pos;
    }
}

std::string FlatBasketCode::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < word_.size(); ++i) os << (i ? "," : "") << word_[i];
    os << ')';
    return os.str();
}

FlatBasketCode parse_code(std::string_view text) {
    const auto toks = tokenize(text);
    if (toks.empty()) throw Error(ErrorKind::EmptyInput, "empty code");
    std::vector<int> word;
    word.reserve(toks.size());
    for (auto t : toks) word.push_back(parse_positive(t));
    return FlatBasketCode(std::move(word));
}

UnderlyingDiagram underlying(const FlatBasketCode& code) {
    std::vector<int> partner(static_cast<std::size_t>(code.length()));
    for (int label = 1; label <= code.bands(); ++label) {
        const auto& f = code.feet(label);
        partner[static_cast<std::size_t>(f.first - 1)] = f.second;
        partner[static_cast<std::size_t>(f.second - 1)] = f.first;
    }
    return UnderlyingDiagram(std::move(partner));
}

int boundary_components(const UnderlyingDiagram& diagram) {
    const int m = diagram.points();
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    int cycles = 0;
    for (int start = 1; start <= m; ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        ++cycles;
        int i = start;
        while (!seen[static_cast<std::size_t>(i - 1)]) {
            seen[static_cast<std::size_t>(i - 1)] = 1;
            i = diagram.partner(i) % m + 1;
        }
    }
    return cycles;
}

int boundary_components(const FlatBasketCode& code) { return boundary_components(underlying(code)); }

SurfaceStats surface_stats(const FlatBasketCode& code) {
    const int n = code.bands();
    const int chi = 1 - n;
    const int b = boundary_components(code);
    return {n, chi, b, (2 - b - chi) / 2};
}

std::vector<int> rotate_word(const std::vector<int>& word, int k) {
    const int m = static_cast<int>(word.size());
    k = ((k % m) + m) % m;
    std::vector<int> out(word.begin() + k, word.end());
    out.insert(out.end(), word.begin(), word.begin() + k);
    return out;
}

std::vector<int> canonical_rotation(const std::vector<int>& word) {
    const std::size_t m = word.size();
    // the least rotation starts at an occurrence of the smallest label
    const int low = *std::min_element(word.begin(), word.end());
    std::size_t best = static_cast<std::size_t>(std::find(word.begin(), word.end(), low) - word.begin());
    for (std::size_t k = best + 1; k < m; ++k) {
        if (word[k] != low) continue;
        for (std::size_t i = 0; i < m; ++i) {
            const int a = word[(k + i) % m];
            const int b = word[(best + i) % m];
            if (a != b) {
                if (a < b) best = k;
                break;
            }
        }
    }
    return rotate_word(word, static_cast<int>(best));
}

FlatBasketCode canonicalize(const FlatBasketCode& code) { return FlatBasketCode(canonical_rotation(code.word())); }

FlatBasketCode relabel(const FlatBasketCode& code, const std::vector<int>& perm) {
    const int n = code.bands();
    if (static_cast<int>(perm.size()) != n)
        throw Error(ErrorKind::InvalidPermutation, "permutation has wrong size");
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int x : perm) {
        if (x < 1 || x > n || hit[static_cast<std::size_t>(x - 1)])
            throw Error(ErrorKind::InvalidPermutation, "not a bijection on 1.." + std::to_string(n));
        hit[static_cast<std::size_t>(x - 1)] = 1;
    }
    std::vector<int> w = code.word();
    for (int& x : w) x = perm[static_cast<std::size_t>(x - 1)];
    return FlatBasketCode(canonical_rotation(w));
}

FlatBasketCode reversed(const FlatBasketCode& code) {
    std::vector<int> w(code.word().rbegin(), code.word().rend());
    return FlatBasketCode(std::move(w));
}

FlatBasketCode mirrored(const FlatBasketCode& code) {
    const int n = code.bands();
    std::vector<int> w(code.word().rbegin(), code.word().rend());
    for (int& x : w) x = n + 1 - x;
    return FlatBasketCode(canonical_rotation(w));
}

FlatBasketCode label_matching(const UnderlyingDiagram& diagram, const std::vector<int>& labels) {
    const auto ch = diagram.chords();
    std::vector<int> w(static_cast<std::size_t>(diagram.points()));
    for (std::size_t k = 0; k < ch.size(); ++k) {
        w[static_cast<std::size_t>(ch[k].first - 1)] = labels[k];
        w[static_cast<std::size_t>(ch[k].second - 1)] = labels[k];
    }
    return FlatBasketCode(std::move(w));
}

}  // namespace fpb
