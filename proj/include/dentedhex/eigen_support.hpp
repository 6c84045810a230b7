#pragma once

#include <Eigen/Core>

#include "dentedhex/laurent_poly.hpp"
#include "dentedhex/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<dentedhex::Rational> : GenericNumTraits<dentedhex::Rational> {
    using Real = dentedhex::Rational;
    using NonInteger = dentedhex::Rational;
    using Nested = dentedhex::Rational;
    using Literal = dentedhex::Rational;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 10, MulCost = 10 };
};

template <>
struct NumTraits<dentedhex::LaurentPoly> : GenericNumTraits<dentedhex::LaurentPoly> {
    using Real = dentedhex::LaurentPoly;
    using NonInteger = dentedhex::LaurentPoly;
    using Nested = dentedhex::LaurentPoly;
    using Literal = dentedhex::LaurentPoly;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 100, MulCost = 1000 };
};

}  // namespace Eigen

namespace dentedhex {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using PolyMatrix = DenseMatrix<LaurentPoly>;
using RationalMatrix = DenseMatrix<Rational>;

}  // namespace dentedhex
