#pragma once

#include "hopfcm/eigen_support.hpp"
#include "hopfcm/errors.hpp"
#include "hopfcm/state_poly.hpp"

#include <array>
#include <string>
#include <type_traits>
#include <vector>

namespace hopfcm {

enum class Backend { Exact, Float };

template <class S>
using Point3 = std::array<S, 3>;

// Three polynomial components over S. `params` names the symbolic
// parameters that exact coefficients may depend on (positional).
template <class S>
struct VectorField3 {
    static constexpr Backend backend = std::is_floating_point_v<S> ? Backend::Float : Backend::Exact;

    std::array<StatePoly<S>, 3> f;
    std::vector<std::string> params;
    std::array<std::string, 3> vars{"x", "y", "z"};

    const StatePoly<S>& operator[](int i) const { return f[i]; }
    StatePoly<S>& operator[](int i) { return f[i]; }

    friend bool operator==(const VectorField3& a, const VectorField3& b) { return a.f == b.f; }

    template <class F>
    auto map(F&& fn) const {
        using T = decltype(fn(std::declval<const S&>()));
        VectorField3<T> r;
        for (int i = 0; i < 3; ++i) r.f[i] = f[i].map(fn);
        r.params = params;
        r.vars = vars;
        return r;
    }
};

template <class S>
Point3<S> evaluate_field(const VectorField3<S>& f, const Point3<S>& p) {
    return {f[0].evaluate(p), f[1].evaluate(p), f[2].evaluate(p)};
}

template <class S>
Mat3<S> jacobian_at(const VectorField3<S>& f, const Point3<S>& p) {
    Mat3<S> J;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) J(i, j) = f[i].derivative(j).evaluate(p);
    return J;
}

// Coefficient matrix of the linear terms.
template <class S>
Mat3<S> linear_part(const VectorField3<S>& f) {
    Mat3<S> J;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Mono3 m{0, 0, 0};
            m[j] = 1;
            J(i, j) = f[i].coeff(m);
        }
    return J;
}

template <class S>
S det3(const Mat3<S>& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <class S>
bool is_singular(const Mat3<S>& m) {
    S d = det3(m);
    if constexpr (std::is_floating_point_v<S>) {
        S scale = m.cwiseAbs().maxCoeff();
        return !(std::abs(d) > 1e-14 * scale * scale * scale);
    } else {
        return scalar_is_zero(d);
    }
}

// Inverse through the adjugate; works over any field.
template <class S>
Mat3<S> inverse3(const Mat3<S>& m) {
    if (is_singular(m)) throw SingularTransform("matrix is not invertible");
    S d = det3(m);
    Mat3<S> a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            a(i, j) = (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)) / d;
        }
    return a;
}

// New coordinates y with x = shift + M*y and new time tau = time_scale*t:
// dy/dtau = M^{-1} f(shift + M y) / time_scale.
template <class S>
VectorField3<S> transform(const VectorField3<S>& f, const Point3<S>& shift, const Mat3<S>& M,
                          const S& time_scale) {
    if (scalar_is_zero(time_scale)) throw SingularTransform("time scale is zero");
    Mat3<S> Minv = inverse3(M);
    std::array<StatePoly<S>, 3> images;
    for (int i = 0; i < 3; ++i) {
        StatePoly<S> li = StatePoly<S>::constant(shift[i]);
        for (int j = 0; j < 3; ++j) li += M(i, j) * StatePoly<S>::variable(j);
        images[i] = li;
    }
    std::array<StatePoly<S>, 3> h;
    for (int i = 0; i < 3; ++i) h[i] = f[i].compose(images);
    VectorField3<S> g;
    g.params = f.params;
    g.vars = f.vars;
    S inv_tau = S(1) / time_scale;
    for (int i = 0; i < 3; ++i) {
        StatePoly<S> gi;
        for (int j = 0; j < 3; ++j) gi += (Minv(i, j) * inv_tau) * h[j];
        g[i] = gi;
    }
    return g;
}

template <class S>
VectorField3<S> translate(const VectorField3<S>& f, const Point3<S>& shift) {
    const Mat3<S> I = Mat3<S>::Identity();
    return transform(f, shift, I, S(1));
}

// Formal <f, grad H>.
template <class S>
StatePoly<S> lie_derivative(const VectorField3<S>& f, const StatePoly<S>& H) {
    StatePoly<S> r;
    for (int i = 0; i < 3; ++i) r += H.derivative(i) * f[i];
    return r;
}

}  // namespace hopfcm
