#ifndef FPB_DETERMINANT_HPP
#define FPB_DETERMINANT_HPP

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fpb/bigint.hpp"
#include "fpb/polynomial.hpp"
#include "fpb/seifert.hpp"

namespace fpb {

/// Fraction-free (Bareiss) determinant over any integral domain whose
/// operator/ is exact division. Row swaps are used when a pivot vanishes.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    eigen_assert(input.rows() == input.cols());
    const Eigen::Index n = input.rows();
    if (n == 0) return Scalar(1);
    DenseMatrix<Scalar> a = input;
    Scalar previous(1);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == Scalar(0)) {
            Eigen::Index r = k + 1;
            while (r < n && a(r, k) == Scalar(0)) ++r;
            if (r == n) return Scalar(0);
            a.row(k).swap(a.row(r));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Scalar t = a(k, k) * a(i, j);
                t -= a(i, k) * a(k, j);
                a(i, j) = t / previous;
            }
        }
        previous = a(k, k);
    }
    Scalar det = a(n - 1, n - 1);
    return negate ? Scalar(-det) : det;
}

/// V - tV^T with polynomial entries.
DenseMatrix<IntPolynomial> pencil(const SeifertMatrix& v);

/// V - xV^T at a fixed integer x.
BigMatrix pencil_at(const SeifertMatrix& v, const BigInt& x);

/// Evaluation points 0, 1, -1, 2, -2, ...
std::vector<BigInt> evaluation_points(int count);

/// Unique polynomial of degree < points.size() through (points[k], values[k]).
/// Throws Error(NonIntegralInterpolation) if some coefficient is not an integer.
IntPolynomial interpolate(const std::vector<BigInt>& points, const std::vector<BigInt>& values);

enum class DeterminantMethod { FractionFree, EvalInterp };

/// det(V - tV^T) as an exact integer polynomial.
IntPolynomial pencil_determinant(const SeifertMatrix& v, DeterminantMethod method);

/// det(tI - A) for a square integer matrix.
IntPolynomial characteristic_polynomial(const IntMatrix& a);

}  // namespace fpb

#endif  // FPB_DETERMINANT_HPP
