#pragma once

// Eigen scalar traits for the exact and certified number types, so that
// Eigen::Matrix<BigRat, 3, 3>, Eigen::Matrix<Interval, 3, 1> and friends
// work with the usual dense expressions.

#include <Eigen/Core>
#include <Eigen/LU>

#include "cubicmahler/numerics/certified_real.hpp"

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpq_class NonInteger;
    typedef mpz_class Nested;
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
};

template <>
struct NumTraits<cubicmahler::numerics::Interval> : GenericNumTraits<cubicmahler::numerics::Interval> {
    typedef cubicmahler::numerics::Interval Real;
    typedef cubicmahler::numerics::Interval NonInteger;
    typedef cubicmahler::numerics::Interval Nested;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 300,
        MulCost = 300
    };
};

template <>
struct NumTraits<cubicmahler::numerics::CertifiedReal> : GenericNumTraits<cubicmahler::numerics::CertifiedReal> {
    typedef cubicmahler::numerics::CertifiedReal Real;
    typedef cubicmahler::numerics::CertifiedReal NonInteger;
    typedef cubicmahler::numerics::CertifiedReal Nested;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 500,
        MulCost = 500
    };
};

}  // namespace Eigen

namespace cubicmahler {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

}  // namespace cubicmahler
