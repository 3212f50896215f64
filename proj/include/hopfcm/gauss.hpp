#pragma once

#include "hopfcm/scalar.hpp"

#include <ostream>

namespace hopfcm {

// re + i*im over a real field T. Parameters are real, so conjugation only
// flips the sign of im.
template <class T>
struct Gauss {
    T re{};
    T im{};

    Gauss() = default;
    Gauss(const T& r) : re(r), im(T(0)) {}  // NOLINT(implicit)
    Gauss(int r) : re(T(r)), im(T(0)) {}    // NOLINT(implicit)
    Gauss(const T& r, const T& i) : re(r), im(i) {}

    static Gauss i() { return Gauss(T(0), T(1)); }

    Gauss& operator+=(const Gauss& o) { re += o.re; im += o.im; return *this; }
    Gauss& operator-=(const Gauss& o) { re -= o.re; im -= o.im; return *this; }
    Gauss& operator*=(const Gauss& o) { return *this = *this * o; }
    Gauss& operator/=(const Gauss& o) { return *this = *this / o; }

    friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
    friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
    friend Gauss operator-(const Gauss& a) { return Gauss(-a.re, -a.im); }
    friend Gauss operator*(const Gauss& a, const Gauss& b) {
        return Gauss(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Gauss operator/(const Gauss& a, const Gauss& b) {
        if (scalar_is_zero(b.im)) return Gauss(a.re / b.re, a.im / b.re);
        T n = b.re * b.re + b.im * b.im;
        return Gauss((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }
    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

    friend Gauss conj(const Gauss& a) { return Gauss(a.re, -a.im); }
    friend bool is_zero(const Gauss& a) { return scalar_is_zero(a.re) && scalar_is_zero(a.im); }

    friend std::ostream& operator<<(std::ostream& os, const Gauss& g) {
        return os << "(" << g.re << ") + i(" << g.im << ")";
    }
};

}  // namespace hopfcm
