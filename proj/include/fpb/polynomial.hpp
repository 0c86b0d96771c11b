#ifndef FPB_POLYNOMIAL_HPP
#define FPB_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpb/bigint.hpp"

namespace fpb {

/// Dense univariate polynomial in t over an exact integral ring. Coefficient
/// index equals degree; trailing zeros are always trimmed so the zero
/// polynomial has no coefficients.
template <typename Coeff>
class Polynomial {
public:
    using coefficient_type = Coeff;

    Polynomial() = default;
    Polynomial(int constant) { if (constant != 0) coeffs_.push_back(Coeff(constant)); }
    explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial monomial(Coeff c, std::size_t degree) {
        if (c == 0) return {};
        std::vector<Coeff> v(degree + 1, Coeff(0));
        v[degree] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the top term; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Degree of the lowest nonzero term; -1 for the zero polynomial.
    int min_degree() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<int>(i);
        return -1;
    }

    const std::vector<Coeff>& coefficients() const { return coeffs_; }
    Coeff coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Coeff(0); }
    const Coeff& leading() const { return coeffs_.back(); }

    template <typename X>
    X evaluate(const X& x) const {
        X acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    /// Multiply by t^k (k may be negative as long as no term drops below t^0).
    Polynomial shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        if (k < 0) {
            const auto drop = static_cast<std::size_t>(-k);
            if (static_cast<int>(drop) > min_degree())
                throw std::domain_error("Polynomial::shifted: negative power of t");
            return Polynomial(std::vector<Coeff>(coeffs_.begin() + drop, coeffs_.end()));
        }
        std::vector<Coeff> v(static_cast<std::size_t>(k), Coeff(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(v));
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator/=(const Polynomial& o) { return *this = *this / o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(v));
    }

    /// Exact quotient. The divisor must divide the dividend over the integers;
    /// anything else is an arithmetic bug and throws std::domain_error.
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("Polynomial: division by zero");
        if (a.is_zero()) return {};
        if (a.degree() < b.degree()) throw std::domain_error("Polynomial: inexact division");
        std::vector<Coeff> rem = a.coeffs_;
        std::vector<Coeff> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Coeff(0));
        const Coeff& lead = b.leading();
        const std::size_t db = b.coeffs_.size() - 1;
        for (std::size_t k = q.size(); k-- > 0;) {
            const Coeff& top = rem[k + db];
            if (top == 0) continue;
            if (top % lead != 0) throw std::domain_error("Polynomial: inexact division");
            Coeff f = top / lead;
            for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs_[j];
            q[k] = std::move(f);
        }
        for (const auto& r : rem)
            if (r != 0) throw std::domain_error("Polynomial: inexact division");
        return Polynomial(std::move(q));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    /// Total order (degree first, then coefficients from the top) for use as a map key.
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
        for (std::size_t i = a.coeffs_.size(); i-- > 0;)
            if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
        return false;
    }

    /// Descending text form in the variable t, e.g. "2t^2 - 3t + 2".
    std::string to_string(char var = 't') const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t d = coeffs_.size(); d-- > 0;) {
            const Coeff& c = coeffs_[d];
            if (c == 0) continue;
            const bool neg = c < 0;
            Coeff mag = neg ? Coeff(-c) : c;
            if (first) {
                if (neg) os << '-';
            } else {
                os << (neg ? " - " : " + ");
            }
            if (mag != 1 || d == 0) os << mag;
            if (d >= 1) os << var;
            if (d >= 2) os << '^' << d;
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;

template <typename Coeff>
std::ostream& operator<<(std::ostream& os, const Polynomial<Coeff>& p) {
    return os << p.to_string();
}

/// Parse "t^2 - t + 1" style text, or a comma-separated ascending coefficient
/// list such as "1,-1,1". Throws std::invalid_argument on malformed input.
IntPolynomial parse_polynomial(std::string_view text);

}  // namespace fpb

namespace Eigen {

template <typename Coeff>
struct NumTraits<fpb::Polynomial<Coeff>> : GenericNumTraits<fpb::Polynomial<Coeff>> {
    using Real = fpb::Polynomial<Coeff>;
    using NonInteger = fpb::Polynomial<Coeff>;
    using Literal = fpb::Polynomial<Coeff>;
    using Nested = fpb::Polynomial<Coeff>;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 128
    };
    static inline Real epsilon() { return Real(); }
    static inline Real dummy_precision() { return Real(); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // FPB_POLYNOMIAL_HPP
