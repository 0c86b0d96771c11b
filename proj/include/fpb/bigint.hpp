#ifndef FPB_BIGINT_HPP
#define FPB_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

namespace fpb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<int>;
using BigMatrix = DenseMatrix<BigInt>;

}  // namespace fpb

namespace Eigen {

// Exact ring scalars only need storage and element access from Eigen; the
// precision members are never consulted by the fraction-free routines.
template <>
struct NumTraits<fpb::BigInt> : GenericNumTraits<fpb::BigInt> {
    using Real = fpb::BigInt;
    using NonInteger = fpb::Rational;
    using Literal = fpb::BigInt;
    using Nested = fpb::BigInt;
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // FPB_BIGINT_HPP
