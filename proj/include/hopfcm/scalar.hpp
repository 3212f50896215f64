#pragma once

#include <cmath>
#include <type_traits>

namespace hopfcm {

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(long double x) { return x == 0.0L; }

// Unqualified dispatch point for generic code; exact types supply is_zero
// through argument-dependent lookup.
template <class T>
bool scalar_is_zero(const T& x) {
    return is_zero(x);
}

template <class T>
inline constexpr bool is_floating_scalar = std::is_floating_point_v<T>;

}  // namespace hopfcm
