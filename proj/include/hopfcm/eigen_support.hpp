#pragma once

#include "hopfcm/jet.hpp"
#include "hopfcm/param_expr.hpp"
#include "hopfcm/rational.hpp"

#include <Eigen/Core>

namespace hopfcm::detail {

template <class T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
    using Real = T;
    using NonInteger = T;
    using Nested = T;
    using Literal = T;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 10,
        MulCost = 10
    };
    static T epsilon() { return T(0); }
    static T dummy_precision() { return T(0); }
    static int digits10() { return 0; }
};

}  // namespace hopfcm::detail

namespace Eigen {

template <>
struct NumTraits<hopfcm::Rational> : hopfcm::detail::ExactNumTraits<hopfcm::Rational> {};

template <>
struct NumTraits<hopfcm::ParamExpr> : hopfcm::detail::ExactNumTraits<hopfcm::ParamExpr> {};

template <>
struct NumTraits<hopfcm::RJet> : hopfcm::detail::ExactNumTraits<hopfcm::RJet> {};

}  // namespace Eigen

namespace hopfcm {

template <class S>
using Mat3 = Eigen::Matrix<S, 3, 3>;
template <class S>
using Vec3 = Eigen::Matrix<S, 3, 1>;
template <class S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace hopfcm
