#include "fpb/polynomial.hpp"

#include <cctype>

namespace fpb {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    return s;
}

BigInt parse_integer(const std::string& s) {
    if (s.empty() || s == "+" || s == "-") throw std::invalid_argument("missing integer");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw std::invalid_argument("bad integer '" + s + "'");
    BigInt v(s.substr(i));
    return s[0] == '-' ? BigInt(-v) : v;
}

// One signed term such as "-3t^2", "+t", "7", "2*t".
std::pair<BigInt, std::size_t> parse_term(const std::string& term, char var) {
    const auto at = term.find(var);
    if (at == std::string::npos) return {parse_integer(term), 0};
    std::string head = term.substr(0, at);
    if (!head.empty() && head.back() == '*') head.pop_back();
    BigInt c;
    if (head.empty() || head == "+") c = 1;
    else if (head == "-") c = -1;
    else c = parse_integer(head);
    const std::string tail = term.substr(at + 1);
    if (tail.empty()) return {c, 1};
    if (tail[0] != '^' || tail.size() < 2) throw std::invalid_argument("bad exponent in '" + term + "'");
    for (std::size_t j = 1; j < tail.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(tail[j]))) throw std::invalid_argument("bad exponent in '" + term + "'");
    return {c, static_cast<std::size_t>(std::stoul(tail.substr(1)))};
}

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial");

    const bool expression = s.find_first_of("tx") != std::string::npos;
    if (!expression) {
        std::vector<BigInt> coeffs;
        std::size_t start = 0;
        while (true) {
            const auto comma = s.find(',', start);
            coeffs.push_back(parse_integer(s.substr(start, comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return IntPolynomial(std::move(coeffs));
    }

    const char var = s.find('t') != std::string::npos ? 't' : 'x';
    std::vector<BigInt> coeffs;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        if (i < s.size() && !((s[i] == '+' || s[i] == '-') && s[i - 1] != '^')) continue;
        auto [c, d] = parse_term(s.substr(start, i - start), var);
        if (coeffs.size() <= d) coeffs.resize(d + 1, BigInt(0));
        coeffs[d] += c;
        start = i;
    }
    return IntPolynomial(std::move(coeffs));
}

}  // namespace fpb
