#pragma once

#include "hopfcm/vector_field.hpp"

#include <Eigen/LU>

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace hopfcm {

// P(l) = l^3 + alpha l^2 + beta l + gamma
template <class S>
struct CharCubic {
    S alpha, beta, gamma;
};

template <class S>
CharCubic<S> char_cubic(const Mat3<S>& m) {
    S tr = m(0, 0) + m(1, 1) + m(2, 2);
    S minors = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) + (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
               (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
    return {-tr, minors, -det3(m)};
}

enum class Verdict { Yes, No, Undecided };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        default: return "undecided";
    }
}

// Hopf point iff gamma - alpha beta = 0 and beta > 0; then the spectrum is
// +-sqrt(beta) i and -alpha.
template <class S>
struct HopfReport {
    Verdict verdict = Verdict::Undecided;
    S residual;  // gamma - alpha beta
    S beta;      // omega^2
    S lambda3;   // -alpha
    double omega = std::numeric_limits<double>::quiet_NaN();
    std::optional<S> omega_exact;
    std::string reason;

    bool is_hopf() const { return verdict == Verdict::Yes; }
};

namespace detail {

inline double approx(const Rational& x) { return x.to_double(); }
inline double approx(double x) { return x; }
inline double approx(long double x) { return static_cast<double>(x); }

}  // namespace detail

template <class S>
HopfReport<S> hopf_test(const CharCubic<S>& p, double tol = 1e-10) {
    HopfReport<S> r;
    r.residual = p.gamma - p.alpha * p.beta;
    r.beta = p.beta;
    r.lambda3 = -p.alpha;
    if constexpr (std::is_floating_point_v<S>) {
        S scale = std::max({S(1), std::abs(p.alpha), std::abs(p.beta), std::abs(p.gamma)});
        if (std::abs(r.residual) > tol * scale * scale) {
            r.verdict = Verdict::No;
            r.reason = "gamma - alpha*beta != 0";
        } else if (!(p.beta > tol * scale)) {
            r.verdict = Verdict::No;
            r.reason = "beta <= 0";
        } else if (std::abs(p.alpha) <= tol * scale) {
            r.verdict = Verdict::No;
            r.reason = "zero real eigenvalue";
        } else {
            r.verdict = Verdict::Yes;
            r.omega = static_cast<double>(std::sqrt(p.beta));
        }
    } else if constexpr (std::is_same_v<S, Rational>) {
        if (!r.residual.is_zero()) {
            r.verdict = Verdict::No;
            r.reason = "gamma - alpha*beta != 0";
        } else if (p.beta.sign() <= 0) {
            r.verdict = Verdict::No;
            r.reason = "beta <= 0";
        } else if (p.alpha.is_zero()) {
            r.verdict = Verdict::No;
            r.reason = "zero real eigenvalue";
        } else {
            r.verdict = Verdict::Yes;
            r.omega = std::sqrt(p.beta.to_double());
            if (is_perfect_square(p.beta)) r.omega_exact = rational_sqrt(p.beta);
        }
    } else {
        // Symbolic coefficients: decide only what is decidable.
        if (!scalar_is_zero(r.residual) && r.residual.is_constant()) {
            r.verdict = Verdict::No;
            r.reason = "gamma - alpha*beta != 0";
        } else if (!scalar_is_zero(r.residual)) {
            r.verdict = Verdict::Undecided;
            r.reason = "gamma - alpha*beta is a nonzero function of the parameters";
        } else if (p.beta.is_constant()) {
            Rational b = p.beta.constant_value();
            if (b.sign() <= 0) {
                r.verdict = Verdict::No;
                r.reason = "beta <= 0";
            } else {
                r.verdict = Verdict::Yes;
                r.omega = std::sqrt(b.to_double());
            }
        } else {
            r.verdict = Verdict::Undecided;
            r.reason = "requires beta > 0";
        }
    }
    return r;
}

struct LabeledPoint {
    std::string label;
    Point3<double> x;
};

// Closed-form equilibria of khaled-original that exist at (a,b,c,d).
// E1 for d != 0 and E2/E3 where their radicands allow; E4/E5 for d = 0.
std::vector<LabeledPoint> khaled_equilibria(double a, double b, double c, double d);
Point3<Rational> e1_point(const Rational& d);
// One of E4+, E4-, E5+, E5- (d = 0). Throws DomainError if it does not exist.
Point3<double> khaled_e45(const std::string& label, double a, double b, double c);

enum class Region { W1, W2, W3, W4 };
Region parse_region(const std::string& s);
// Membership in the parameter sets used when d = 0. Exact in (a,b,c).
bool in_region(Region w, const Rational& a, const Rational& b, const Rational& c);

// Hopf conditions at E4 (a=-c, c>0, b>3c) and E5 (a=-c, c<0, b<3c; b<0 follows).
bool e4_hopf_conditions(const Rational& a, const Rational& b, const Rational& c);
bool e5_hopf_conditions(const Rational& a, const Rational& b, const Rational& c);

// Damped Newton with the analytic Jacobian; steps are halved up to 40 times.
template <class Real>
Point3<Real> newton_equilibrium(const VectorField3<Real>& f, Point3<Real> x, int max_iter = 100,
                                Real tol = Real(1e-12)) {
    auto norm = [](const Point3<Real>& v) {
        using std::sqrt;
        return sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    };
    Point3<Real> fx = evaluate_field(f, x);
    Real r = norm(fx);
    for (int it = 0; it < max_iter; ++it) {
        if (r < tol) return x;
        Mat3<Real> J = jacobian_at(f, x);
        Eigen::PartialPivLU<Mat3<Real>> lu(J);
        if (std::abs(lu.determinant()) < std::numeric_limits<Real>::min())
            throw NonConvergence("singular Jacobian during Newton iteration");
        Vec3<Real> rhs(-fx[0], -fx[1], -fx[2]);
        Vec3<Real> dx = lu.solve(rhs);
        Real t(1);
        bool accepted = false;
        for (int h = 0; h <= 40; ++h, t /= 2) {
            Point3<Real> y{x[0] + t * dx(0), x[1] + t * dx(1), x[2] + t * dx(2)};
            Point3<Real> fy = evaluate_field(f, y);
            Real ry = norm(fy);
            if (ry < r) {
                x = y;
                fx = fy;
                r = ry;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }
    if (r < tol) return x;
    throw NonConvergence("Newton iteration did not reach the residual tolerance");
}

}  // namespace hopfcm
