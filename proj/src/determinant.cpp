#include "fpb/determinant.hpp"

#include "fpb/error.hpp"

namespace fpb {

DenseMatrix<IntPolynomial> pencil(const SeifertMatrix& v) {
    const Eigen::Index n = v.rows();
    DenseMatrix<IntPolynomial> a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            a(i, j) = IntPolynomial{BigInt(v(i, j)), BigInt(-v(j, i))};
    return a;
}

BigMatrix pencil_at(const SeifertMatrix& v, const BigInt& x) {
    const Eigen::Index n = v.rows();
    BigMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = BigInt(v(i, j)) - x * v(j, i);
    return a;
}

std::vector<BigInt> evaluation_points(int count) {
    std::vector<BigInt> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int k = 0; static_cast<int>(pts.size()) < count; ++k) {
        pts.emplace_back(k);
        if (k != 0 && static_cast<int>(pts.size()) < count) pts.emplace_back(-k);
    }
    return pts;
}

IntPolynomial interpolate(const std::vector<BigInt>& points, const std::vector<BigInt>& values) {
    const std::size_t m = points.size();
    // Newton divided differences, then expand the Newton form.
    std::vector<Rational> dd(values.begin(), values.end());
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i] - points[i - level]);
    std::vector<Rational> coeffs(m, Rational(0));
    for (std::size_t k = m; k-- > 0;) {
        // coeffs <- coeffs * (t - points[k]) + dd[k]
        for (std::size_t d = m - 1; d > 0; --d) coeffs[d] = coeffs[d - 1] - coeffs[d] * Rational(points[k]);
        coeffs[0] = dd[k] - coeffs[0] * Rational(points[k]);
    }
    std::vector<BigInt> out;
    out.reserve(m);
    for (const auto& c : coeffs) {
        if (boost::multiprecision::denominator(c) != 1)
            throw Error(ErrorKind::NonIntegralInterpolation, "interpolated coefficient is not an integer");
        out.push_back(boost::multiprecision::numerator(c));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial pencil_determinant(const SeifertMatrix& v, DeterminantMethod method) {
    const int n = static_cast<int>(v.rows());
    if (method == DeterminantMethod::FractionFree) return bareiss_determinant(pencil(v));
    const auto pts = evaluation_points(n + 1);
    std::vector<BigInt> vals;
    vals.reserve(pts.size());
    for (const auto& x : pts) vals.push_back(bareiss_determinant(pencil_at(v, x)));
    return interpolate(pts, vals);
}

IntPolynomial characteristic_polynomial(const IntMatrix& a) {
    const Eigen::Index n = a.rows();
    DenseMatrix<IntPolynomial> m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = (i == j) ? IntPolynomial{BigInt(-a(i, j)), BigInt(1)} : IntPolynomial(-a(i, j));
    return bareiss_determinant(m);
}

}  // namespace fpb
