#pragma once

#include "hopfcm/normal_form.hpp"
#include "hopfcm/vector_field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace hopfcm {

// Flat monomial list for fast repeated evaluation.
template <class Real>
class CompiledField {
public:
    explicit CompiledField(const VectorField3<Real>& f) {
        for (int i = 0; i < 3; ++i)
            for (const auto& [m, c] : f[i].terms()) {
                terms_[i].push_back({c, m});
                maxdeg_ = std::max({maxdeg_, m[0], m[1], m[2]});
            }
    }

    Point3<Real> operator()(const Point3<Real>& x) const {
        std::array<std::array<Real, 16>, 3> pw;
        const int top = std::min(maxdeg_, 15);
        for (int v = 0; v < 3; ++v) {
            pw[v][0] = Real(1);
            for (int e = 1; e <= top; ++e) pw[v][e] = pw[v][e - 1] * x[v];
        }
        Point3<Real> r{Real(0), Real(0), Real(0)};
        for (int i = 0; i < 3; ++i)
            for (const auto& t : terms_[i]) r[i] += t.c * pw[0][t.m[0]] * pw[1][t.m[1]] * pw[2][t.m[2]];
        return r;
    }

private:
    struct Term {
        Real c;
        Mono3 m;
    };
    std::array<std::vector<Term>, 3> terms_;
    int maxdeg_ = 0;
};

struct IntegratorOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    long max_steps = 50'000'000;
};

template <class Real>
struct IntegratorStats {
    long steps = 0;
    long rejected = 0;
    Real max_error = Real(0);  // largest accepted scaled error estimate
};

// One accepted step with its continuous extension (order 4).
template <class Real>
struct Step {
    Real t0, t1;
    Point3<Real> y0, y1;
    std::array<Point3<Real>, 5> rc;

    Point3<Real> at(Real t) const {
        Real h = t1 - t0;
        Real s = (t - t0) / h, s1 = Real(1) - s;
        Point3<Real> r;
        for (int i = 0; i < 3; ++i)
            r[i] = rc[0][i] + s * (rc[1][i] + s1 * (rc[2][i] + s * (rc[3][i] + s1 * rc[4][i])));
        return r;
    }
};

namespace detail {

inline void check_tolerances(const IntegratorOptions& o) {
    if (!(o.rel_tol > 0 && o.rel_tol <= 1e-2) || !(o.abs_tol > 0 && o.abs_tol <= 1e-2))
        throw UsageError("integration tolerances must lie in (0, 1e-2]");
}

}  // namespace detail

// Dormand-Prince 5(4) with standard step control. `observe(step)` runs after
// every accepted step and returns false to stop early. t1 < t0 integrates
// backward.
template <class Real, class Observer>
IntegratorStats<Real> dopri5(const CompiledField<Real>& f, Point3<Real> y, Real t, Real t_end,
                             const IntegratorOptions& opt, Observer&& observe) {
    detail::check_tolerances(opt);
    static const Real a21 = Real(1) / 5;
    static const Real a31 = Real(3) / 40, a32 = Real(9) / 40;
    static const Real a41 = Real(44) / 45, a42 = Real(-56) / 15, a43 = Real(32) / 9;
    static const Real a51 = Real(19372) / 6561, a52 = Real(-25360) / 2187, a53 = Real(64448) / 6561,
                      a54 = Real(-212) / 729;
    static const Real a61 = Real(9017) / 3168, a62 = Real(-355) / 33, a63 = Real(46732) / 5247, a64 = Real(49) / 176,
                      a65 = Real(-5103) / 18656;
    static const Real a71 = Real(35) / 384, a73 = Real(500) / 1113, a74 = Real(125) / 192, a75 = Real(-2187) / 6784,
                      a76 = Real(11) / 84;
    static const Real e1 = Real(71) / 57600, e3 = Real(-71) / 16695, e4 = Real(71) / 1920,
                      e5 = Real(-17253) / 339200, e6 = Real(22) / 525, e7 = Real(-1) / 40;
    static const Real d1 = Real(-12715105075.0L) / Real(11282082432.0L), d3 = Real(87487479700.0L) / Real(32700410799.0L),
                      d4 = Real(-10690763975.0L) / Real(1880347072.0L),
                      d5 = Real(701980252875.0L) / Real(199316789632.0L),
                      d6 = Real(-1453857185.0L) / Real(822651844.0L), d7 = Real(69997945.0L) / Real(29380423.0L);

    IntegratorStats<Real> st;
    const Real dir = t_end >= t ? Real(1) : Real(-1);
    const Real rtol = Real(opt.rel_tol), atol = Real(opt.abs_tol);
    const Real eps = std::numeric_limits<Real>::epsilon();
    if (t == t_end) return st;

    Point3<Real> k1 = f(y);
    // Initial step from the local scale of the solution and its derivative.
    Real d0 = 0, dd = 0;
    for (int i = 0; i < 3; ++i) {
        Real sc = atol + rtol * std::abs(y[i]);
        d0 = std::max(d0, std::abs(y[i]) / sc);
        dd = std::max(dd, std::abs(k1[i]) / sc);
    }
    Real h = (d0 < Real(1e-5) || dd < Real(1e-5)) ? Real(1e-6) : Real(0.01) * d0 / dd;
    h = std::min(h, std::abs(t_end - t));
    bool last_rejected = false;

    auto axpy = [](const Point3<Real>& a, std::initializer_list<std::pair<Real, const Point3<Real>*>> terms, Real hh) {
        Point3<Real> r = a;
        for (const auto& [c, k] : terms)
            for (int i = 0; i < 3; ++i) r[i] += hh * c * (*k)[i];
        return r;
    };

    while (dir * (t_end - t) > 0) {
        if (st.steps + st.rejected >= opt.max_steps) throw StiffnessFailure("step budget exhausted");
        if (h < Real(16) * eps * std::max(Real(1), std::abs(t))) throw StiffnessFailure("step size underflow");
        bool final_step = false;
        if (h >= std::abs(t_end - t)) {
            h = std::abs(t_end - t);
            final_step = true;
        }
        const Real hs = dir * h;
        Point3<Real> k2 = f(axpy(y, {{a21, &k1}}, hs));
        Point3<Real> k3 = f(axpy(y, {{a31, &k1}, {a32, &k2}}, hs));
        Point3<Real> k4 = f(axpy(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, hs));
        Point3<Real> k5 = f(axpy(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, hs));
        Point3<Real> k6 = f(axpy(y, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, hs));
        Point3<Real> y1 = axpy(y, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}}, hs);
        Point3<Real> k7 = f(y1);

        Real err = 0;
        for (int i = 0; i < 3; ++i) {
            Real ei = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            Real sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y1[i]));
            err += (ei / sc) * (ei / sc);
        }
        err = std::sqrt(err / 3);
        if (!std::isfinite(static_cast<double>(err))) {
            h /= 10;
            ++st.rejected;
            last_rejected = true;
            continue;
        }

        if (err <= Real(1)) {
            Step<Real> s;
            s.t0 = t;
            s.t1 = final_step ? t_end : t + hs;
            s.y0 = y;
            s.y1 = y1;
            for (int i = 0; i < 3; ++i) {
                s.rc[0][i] = y[i];
                s.rc[1][i] = y1[i] - y[i];
                s.rc[2][i] = hs * k1[i] - s.rc[1][i];
                s.rc[3][i] = s.rc[1][i] - hs * k7[i] - s.rc[2][i];
                s.rc[4][i] = hs * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
            }
            ++st.steps;
            st.max_error = std::max(st.max_error, err);
            t = s.t1;
            y = y1;
            k1 = k7;
            if (!observe(s)) break;
            Real fac = err == 0 ? Real(5) : std::min(Real(5), std::max(Real(0.2), Real(0.9) * std::pow(err, Real(-0.2))));
            if (last_rejected) fac = std::min(fac, Real(1));
            h *= fac;
            last_rejected = false;
        } else {
            h *= std::max(Real(0.2), Real(0.9) * std::pow(err, Real(-0.2)));
            ++st.rejected;
            last_rejected = true;
        }
    }
    return st;
}

template <class Real>
struct Trajectory {
    std::vector<Real> t;
    std::vector<Point3<Real>> x;
    IntegratorStats<Real> stats;
};

// Records every accepted step, or samples the dense output every `sample_dt`
// when it is positive.
template <class Real>
Trajectory<Real> integrate(const VectorField3<Real>& field, const Point3<Real>& x0, Real t0, Real t1,
                           const IntegratorOptions& opt = {}, Real sample_dt = Real(0)) {
    CompiledField<Real> f(field);
    Trajectory<Real> tr;
    tr.t.push_back(t0);
    tr.x.push_back(x0);
    const Real dir = t1 >= t0 ? Real(1) : Real(-1);
    long next = 1;
    tr.stats = dopri5(f, x0, t0, t1, opt, [&](const Step<Real>& s) {
        if (sample_dt > 0) {
            for (;;) {
                Real tk = t0 + dir * sample_dt * Real(next);
                if (dir * (tk - s.t1) > 0) break;
                tr.t.push_back(tk);
                tr.x.push_back(s.at(tk));
                ++next;
            }
            if (s.t1 == t1 && tr.t.back() != t1) {
                tr.t.push_back(t1);
                tr.x.push_back(s.y1);
            }
        } else {
            tr.t.push_back(s.t1);
            tr.x.push_back(s.y1);
        }
        return true;
    });
    return tr;
}

// Crossing of the half-plane {v = 0, u > 0}.
template <class Real>
struct Crossing {
    Real t;
    Point3<Real> x;
    Real residual;  // |v| at the located point
};

namespace detail {

// Root of v(t) inside an accepted step by safeguarded Newton on the dense
// output, with the field supplying dv/dt.
template <class Real>
Crossing<Real> locate_crossing(const Step<Real>& s, const CompiledField<Real>& f) {
    Real a = s.t0, b = s.t1;
    Real va = s.y0[1];
    Real t = a - va * (b - a) / (s.y1[1] - va);
    Point3<Real> x = s.at(t);
    for (int it = 0; it < 100; ++it) {
        Real g = x[1];
        if ((g < 0) == (va < 0)) {
            a = t;
            va = g;
        } else {
            b = t;
        }
        Real dg = f(x)[1];
        Real tn = t - g / dg;
        bool inside = (tn - a) * (tn - b) < 0;
        if (!inside || !std::isfinite(static_cast<double>(tn))) tn = (a + b) / 2;
        if (std::abs(tn - t) <= Real(4) * std::numeric_limits<Real>::epsilon() * std::max(Real(1), std::abs(t))) {
            t = tn;
            x = s.at(t);
            break;
        }
        t = tn;
        x = s.at(t);
    }
    return {t, x, std::abs(x[1])};
}

}  // namespace detail

// Crossings of {v = 0, u > 0} for t in [t0, t1], at most `max_count`.
template <class Real>
std::vector<Crossing<Real>> section_crossings(const VectorField3<Real>& field, const Point3<Real>& x0, Real t0,
                                              Real t1, const IntegratorOptions& opt, std::size_t max_count) {
    CompiledField<Real> f(field);
    std::vector<Crossing<Real>> out;
    dopri5(f, x0, t0, t1, opt, [&](const Step<Real>& s) {
        bool sign_change = (s.y0[1] < 0 && s.y1[1] >= 0) || (s.y0[1] > 0 && s.y1[1] <= 0);
        if (sign_change && s.y0[0] + s.y1[0] > 0 && s.t1 != t0) {
            if (s.y1[1] == 0) out.push_back({s.t1, s.y1, Real(0)});
            else out.push_back(detail::locate_crossing(s, f));
        }
        return out.size() < max_count;
    });
    return out;
}

template <class Real>
struct PeriodMeasurement {
    Real period;
    Real drift;  // change between the last two measured periods
    Real radius;
    int turns;
};

// Time between successive crossings of {v = 0, u > 0} once the transient in
// the hyperbolic direction has decayed.
template <class Real>
PeriodMeasurement<Real> measure_period(const NormalForm3<Real>& nf, Real rho0, Real settle_time,
                                       const IntegratorOptions& opt = {}, int turns = 3) {
    const Real horizon = settle_time + Real(20 * turns + 100) * Real(2 * std::numbers::pi);
    std::vector<Crossing<Real>> cr =
        section_crossings(nf.field, Point3<Real>{rho0, Real(0), Real(0)}, Real(0), horizon, opt, 100000);
    std::vector<Real> periods;
    for (std::size_t i = 1; i < cr.size(); ++i)
        if (cr[i - 1].t >= settle_time) {
            periods.push_back(cr[i].t - cr[i - 1].t);
            if (static_cast<int>(periods.size()) == turns) break;
        }
    if (static_cast<int>(periods.size()) < std::max(turns, 2)) throw NoReturn("orbit does not return to the section");
    PeriodMeasurement<Real> m;
    m.period = periods.back();
    m.drift = periods.back() - periods[periods.size() - 2];
    const auto& x = cr.back().x;
    m.radius = std::sqrt(x[0] * x[0] + x[1] * x[1]);
    m.turns = static_cast<int>(periods.size());
    return m;
}

template <class Real>
struct DisplacementSample {
    Real rho0;
    Real dbar;                // first-return radial change on the settled path
    Real omega;               // settled w/rho at the section
    Real omega_residual;      // last secant correction
    int crossings;            // returns computed while settling
    Real section_residual;    // |v| at the located crossing
};

// Reduced displacement: with w = rho * omega on {v = 0, u > 0}, solve for
// the omega whose first return has the same omega (secant iteration), then
// report the radial change of that return.
template <class Real>
DisplacementSample<Real> displacement(const NormalForm3<Real>& nf, Real rho0, const IntegratorOptions& opt = {},
                                      double omega_tol = 1e-10) {
    const Real horizon = Real(20 * 2 * std::numbers::pi);
    int count = 0;
    Real section_res = 0;
    auto first_return = [&](Real omega) {
        auto cr = section_crossings(nf.field, Point3<Real>{rho0, Real(0), rho0 * omega}, Real(0), horizon, opt, 1);
        ++count;
        if (cr.empty()) throw NoReturn("no first return to the section");
        section_res = std::max(section_res, cr[0].residual);
        return cr[0].x;
    };
    auto defect = [&](Real omega, Point3<Real>& x) {
        x = first_return(omega);
        Real r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
        return x[2] / r - omega;
    };
    Point3<Real> xa, xb;
    Real wa = 0, fa = defect(wa, xa);
    Real wb = wa - fa, fb = defect(wb, xb);
    Real step = wb - wa;
    for (int it = 0; it < 50 && std::abs(step) >= Real(omega_tol); ++it) {
        if (fb == fa) break;
        Real wn = wb - fb * (wb - wa) / (fb - fa);
        wa = wb;
        fa = fb;
        xa = xb;
        wb = wn;
        fb = defect(wb, xb);
        step = wb - wa;
    }
    if (std::abs(step) >= Real(omega_tol)) throw NonConvergence("omega settling did not converge");
    DisplacementSample<Real> d;
    d.rho0 = rho0;
    d.dbar = std::sqrt(xb[0] * xb[0] + xb[1] * xb[1]) - rho0;
    d.omega = wb;
    d.omega_residual = std::abs(step);
    d.crossings = count;
    d.section_residual = section_res;
    return d;
}

}  // namespace hopfcm
