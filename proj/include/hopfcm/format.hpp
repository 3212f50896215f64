#pragma once

#include "hopfcm/jet.hpp"
#include "hopfcm/param_expr.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

namespace hopfcm {

inline std::string to_text(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}
inline std::string to_text(long double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.21Lg", x);
    return buf;
}
inline std::string to_text(const Rational& x) { return x.str(); }
inline std::string to_text(const ParamExpr& x, const std::vector<std::string>& names) { return x.str(names); }
std::string to_text(const RJet& x);

inline double to_approx(double x) { return x; }
inline double to_approx(long double x) { return static_cast<double>(x); }
inline double to_approx(const Rational& x) { return x.to_double(); }
inline double to_approx(const ParamExpr& x) {
    return x.is_constant() ? x.constant_value().to_double() : std::numeric_limits<double>::quiet_NaN();
}
inline double to_approx(const RJet& x) { return x.constant().to_double(); }

}  // namespace hopfcm
