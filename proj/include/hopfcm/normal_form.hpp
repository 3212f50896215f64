#pragma once

#include "hopfcm/hopf.hpp"
#include "hopfcm/vector_field.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>

namespace hopfcm {

// u' = -o v + P, v' = o u + Q, w' = lambda w + R with o = orientation.
// P, Q, R have no constant or linear terms.
template <class S>
struct NormalForm3 {
    VectorField3<S> field;
    S lambda;
    int orientation = 1;
    // Original coordinates x = shift + transform * y, new time tau = time_scale * t.
    Point3<S> shift{S(0), S(0), S(0)};
    Mat3<S> transform = Mat3<S>::Identity();
    S time_scale = S(1);

    StatePoly<S> P() const { return field[0].tail(2); }
    StatePoly<S> Q() const { return field[1].tail(2); }
    StatePoly<S> R() const { return field[2].tail(2); }
};

namespace detail {

template <class S>
bool near(const S& x, const S& target, double tol) {
    if constexpr (std::is_floating_point_v<S>) {
        return std::abs(x - target) <= S(tol) * std::max(S(1), std::abs(target));
    } else {
        (void)tol;
        return scalar_is_zero(x - target);
    }
}

}  // namespace detail

// Validate that `f` already has the rotation-plus-real-eigendirection linear
// part. Float coefficients within `tol` of the block are snapped onto it.
template <class S>
NormalForm3<S> as_normal_form(const VectorField3<S>& f, double tol = 1e-10) {
    for (int i = 0; i < 3; ++i)
        if (!detail::near(f[i].coeff({0, 0, 0}), S(0), tol))
            throw BadTransform("origin is not an equilibrium of the transformed field");
    Mat3<S> L = linear_part(f);
    int o = 0;
    if (detail::near(L(0, 1), S(-1), tol) && detail::near(L(1, 0), S(1), tol)) o = 1;
    else if (detail::near(L(0, 1), S(1), tol) && detail::near(L(1, 0), S(-1), tol)) o = -1;
    bool block = o != 0;
    for (auto [i, j] : {std::pair{0, 0}, {1, 1}, {0, 2}, {1, 2}, {2, 0}, {2, 1}})
        block = block && detail::near(L(i, j), S(0), tol);
    if (!block) throw BadTransform("linear part is not a unit rotation block plus a real eigendirection");
    if (detail::near(L(2, 2), S(0), tol)) throw NotHopf("real eigenvalue is zero");

    NormalForm3<S> nf;
    nf.field = f;
    nf.lambda = L(2, 2);
    nf.orientation = o;
    if constexpr (std::is_floating_point_v<S>) {
        Mat3<S> block = Mat3<S>::Zero();
        block(0, 1) = S(-o);
        block(1, 0) = S(o);
        block(2, 2) = nf.lambda;
        for (int i = 0; i < 3; ++i) {
            nf.field[i].set_term({0, 0, 0}, S(0));
            for (int j = 0; j < 3; ++j) {
                Mono3 m{0, 0, 0};
                m[j] = 1;
                nf.field[i].set_term(m, block(i, j));
            }
        }
    }
    return nf;
}

// Rejects points whose Jacobian is decidably not Hopf.
template <class S>
void require_hopf(const VectorField3<S>& f, const Point3<S>& eq) {
    auto rep = hopf_test(char_cubic(jacobian_at(f, eq)));
    if (rep.verdict == Verdict::No) throw NotHopf(rep.reason);
}

// Apply the change of coordinates and time rescaling, then validate.
template <class S>
NormalForm3<S> to_normal_form(const VectorField3<S>& f, const Point3<S>& eq, const Mat3<S>& M, const S& tau,
                              double tol = 1e-10) {
    require_hopf(f, eq);
    NormalForm3<S> nf = as_normal_form(transform(f, eq, M, tau), tol);
    nf.shift = eq;
    nf.transform = M;
    nf.time_scale = tau;
    return nf;
}

// Orientation +1 by exchanging u and v.
template <class S>
NormalForm3<S> canonical(const NormalForm3<S>& nf) {
    if (nf.orientation == 1) return nf;
    std::array<StatePoly<S>, 3> swap{StatePoly<S>::variable(1), StatePoly<S>::variable(0), StatePoly<S>::variable(2)};
    NormalForm3<S> r = nf;
    r.field[0] = nf.field[1].compose(swap);
    r.field[1] = nf.field[0].compose(swap);
    r.field[2] = nf.field[2].compose(swap);
    r.transform.col(0) = nf.transform.col(1);
    r.transform.col(1) = nf.transform.col(0);
    r.orientation = 1;
    return r;
}

// Eigenvector-based normal form for float fields. With A q = i w q and
// q = p + i s, the columns (p, -s, r) and tau = w t give orientation +1.
// q is scaled to unit norm with the phase making Re q orthogonal to Im q and
// |Re q| >= |Im q|.
template <class Real>
NormalForm3<Real> to_normal_form_numeric(const VectorField3<Real>& f, const Point3<Real>& eq, double tol = 1e-9) {
    using C = std::complex<Real>;
    Mat3<Real> J = jacobian_at(f, eq);
    Eigen::EigenSolver<Mat3<Real>> es(J);
    if (es.info() != Eigen::Success) throw NonConvergence("eigen decomposition failed");
    auto ev = es.eigenvalues();
    int ic = -1, ir = -1;
    for (int k = 0; k < 3; ++k) {
        if (ev(k).imag() > 0 && (ic < 0 || ev(k).imag() > ev(ic).imag())) ic = k;
    }
    if (ic < 0) throw NotHopf("no complex eigenvalue pair");
    for (int k = 0; k < 3; ++k)
        if (std::abs(ev(k).imag()) <= Real(tol) * std::abs(ev(ic))) ir = k;
    if (ir < 0) throw NotHopf("no real eigenvalue");
    Real scale = std::max(Real(1), J.cwiseAbs().maxCoeff());
    if (std::abs(ev(ic).real()) > Real(tol) * scale) throw NotHopf("complex pair is not purely imaginary");
    Real omega = ev(ic).imag();

    Eigen::Matrix<C, 3, 1> q = es.eigenvectors().col(ic);
    q /= q.norm();
    Vec3<Real> p = q.real(), s = q.imag();
    Real pp = p.dot(p), ss = s.dot(s), ps = p.dot(s);
    Real phi = std::atan2(-2 * ps, pp - ss) / 2;
    q *= C(std::cos(phi), std::sin(phi));
    p = q.real();
    s = q.imag();

    Vec3<Real> r = es.eigenvectors().col(ir).real();
    r /= r.norm();
    int big = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(r(k)) > std::abs(r(big))) big = k;
    if (r(big) < 0) r = -r;

    Mat3<Real> M;
    M.col(0) = p;
    M.col(1) = -s;
    M.col(2) = r;
    NormalForm3<Real> nf = as_normal_form(transform(f, eq, M, omega), 1e-8);
    nf.shift = eq;
    nf.transform = M;
    nf.time_scale = omega;
    return nf;
}

}  // namespace hopfcm
