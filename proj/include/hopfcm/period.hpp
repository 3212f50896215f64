#pragma once

#include "hopfcm/focus.hpp"
#include "hopfcm/format.hpp"
#include "hopfcm/normal_form.hpp"
#include "hopfcm/trig_poly.hpp"

#include <map>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

namespace hopfcm {

// With u = rho cos, v = rho sin, w = rho omega on the canonical form:
//   rho'/rho = A,  theta' = 1 + B,  omega' = lambda omega + Rh - omega A,
// A = cos P/rho + sin Q/rho, B = cos Q/rho - sin P/rho, Rh = R/rho.
// Each is stored as {(rho power, omega power) -> trig coefficient}.
template <class R>
struct PolarReduction {
    using Part = std::map<std::pair<int, int>, TrigPoly<R>>;
    R lambda;
    Part A, B, Rh;
};

template <class R>
PolarReduction<R> polar_reduce(const NormalForm3<R>& nf_in) {
    using T = TrigPoly<R>;
    using C = Gauss<R>;
    NormalForm3<R> nf = canonical(nf_in);
    PolarReduction<R> pr;
    pr.lambda = nf.lambda;
    std::vector<T> cpow{T::constant(C(R(1)))}, spow{T::constant(C(R(1)))};
    auto trig = [&](int i, int j) {
        while (static_cast<int>(cpow.size()) <= i) cpow.push_back(cpow.back() * T::cos());
        while (static_cast<int>(spow.size()) <= j) spow.push_back(spow.back() * T::sin());
        return cpow[i] * spow[j];
    };
    auto accumulate = [&](typename PolarReduction<R>::Part& part, const StatePoly<R>& p, const T& factor) {
        for (const auto& [m, c] : p.terms()) {
            std::pair<int, int> key{degree_of(m) - 1, m[2]};
            T t = C(c) * (trig(m[0], m[1]) * factor);
            auto [it, inserted] = part.try_emplace(key, t);
            if (!inserted) it->second += t;
        }
    };
    T one = T::constant(C(R(1)));
    accumulate(pr.A, nf.P(), T::cos());
    accumulate(pr.A, nf.Q(), T::sin());
    accumulate(pr.B, nf.Q(), T::cos());
    accumulate(pr.B, nf.P(), C(R(-1)) * T::sin());
    accumulate(pr.Rh, nf.R(), one);
    return pr;
}

// Power series in rho0 with trigonometric coefficients.
template <class R>
using TrigSeries = std::vector<TrigPoly<R>>;

namespace detail {

template <class R>
TrigSeries<R> series_mul(const TrigSeries<R>& a, const TrigSeries<R>& b, int order) {
    TrigSeries<R> r(order + 1);
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
}

// part(rho = rho0 S, omega = W) as a series through `order`.
template <class R>
TrigSeries<R> compose_part(const typename PolarReduction<R>::Part& part, const TrigSeries<R>& S,
                           const TrigSeries<R>& W, int order) {
    using C = Gauss<R>;
    TrigSeries<R> out(order + 1);
    std::vector<TrigSeries<R>> Spow, Wpow;
    TrigSeries<R> unit(order + 1);
    unit[0] = TrigPoly<R>::constant(C(R(1)));
    Spow.push_back(unit);
    Wpow.push_back(unit);
    for (const auto& [key, trig] : part) {
        auto [rp, wp] = key;
        if (rp > order) continue;
        while (static_cast<int>(Spow.size()) <= rp) Spow.push_back(series_mul(Spow.back(), S, order));
        while (static_cast<int>(Wpow.size()) <= wp) Wpow.push_back(series_mul(Wpow.back(), W, order));
        TrigSeries<R> sw = series_mul(Spow[rp], Wpow[wp], order - rp);
        for (int i = 0; i + rp <= order; ++i)
            if (!sw[i].is_zero()) out[i + rp] += trig * sw[i];
    }
    return out;
}

template <class R>
bool mean_vanishes(const Gauss<R>& m) {
    if constexpr (std::is_floating_point_v<R>) {
        return std::abs(m.re) <= R(1e-11) && std::abs(m.im) <= R(1e-11);
    } else {
        return scalar_is_zero(m);
    }
}

template <class R>
std::string exact_text(const R& x) {
    if constexpr (std::is_same_v<R, Rational>) return x.str();
    else if constexpr (std::is_floating_point_v<R>) return to_text(x);
    else return {};
}

}  // namespace detail

// Periodic solution on the center path: rho = rho0 S(theta), omega = W(theta)
// with S = 1 + sum S_i rho0^i, S_i(0) = 0, and W_i the periodic solutions of
// W_i' - lambda W_i = g_i. Also returns the series of theta'.
template <class R>
struct PeriodicSeries {
    TrigSeries<R> S, W, theta_dot;
};

template <class R>
PeriodicSeries<R> periodic_solution_series(const NormalForm3<R>& nf, int order) {
    using C = Gauss<R>;
    if (scalar_is_zero(nf.lambda)) throw DegenerateLambda("lambda = 0");
    PolarReduction<R> pr = polar_reduce(nf);
    PeriodicSeries<R> ps;
    ps.S.assign(order + 1, TrigPoly<R>());
    ps.W.assign(order + 1, TrigPoly<R>());
    ps.S[0] = TrigPoly<R>::constant(C(R(1)));
    TrigSeries<R> Sp(order + 1), Wp(order + 1);

    auto theta_dot = [&]() {
        TrigSeries<R> b = detail::compose_part<R>(pr.B, ps.S, ps.W, order);
        b[0] += TrigPoly<R>::constant(C(R(1)));
        return b;
    };
    for (int i = 1; i <= order; ++i) {
        TrigSeries<R> A = detail::compose_part<R>(pr.A, ps.S, ps.W, order);
        TrigSeries<R> Rh = detail::compose_part<R>(pr.Rh, ps.S, ps.W, order);
        TrigSeries<R> Td = theta_dot();
        TrigSeries<R> SA = detail::series_mul(ps.S, A, i);
        TrigSeries<R> WA = detail::series_mul(ps.W, A, i);

        TrigPoly<R> s_rhs = SA[i];
        TrigPoly<R> w_rhs = Rh[i] - WA[i];
        for (int j = 1; j < i; ++j) {
            s_rhs -= Sp[j] * Td[i - j];
            w_rhs -= Wp[j] * Td[i - j];
        }
        C mean = s_rhs.mean();
        if (!detail::mean_vanishes(mean)) {
            double v = 2 * std::numbers::pi * to_approx(mean.re);
            throw FocusObstruction(i, v, detail::exact_text(mean.re));
        }
        Sp[i] = s_rhs;
        ps.S[i] = s_rhs.integral();
        ps.W[i] = w_rhs.solve_linear(nf.lambda);
        Wp[i] = ps.W[i].derivative();
    }
    ps.theta_dot = theta_dot();
    return ps;
}

// T(rho0) = 2 pi (1 + sum_k T_k rho0^k) with T_k the mean of Psi_k in
// dt/dtheta = 1 + sum Psi_k rho0^k. T[k] holds T_k for k = 0..order.
template <class R>
struct PeriodExpansion {
    std::vector<R> T;
    std::vector<R> odd_residuals;
};

template <class R>
PeriodExpansion<R> isochronicity_constants(const NormalForm3<R>& nf, int order) {
    using C = Gauss<R>;
    PeriodicSeries<R> ps = periodic_solution_series(nf, order);
    const TrigSeries<R>& Td = ps.theta_dot;
    TrigSeries<R> psi(order + 1);
    psi[0] = TrigPoly<R>::constant(C(R(1)));
    for (int k = 1; k <= order; ++k) {
        TrigPoly<R> acc;
        for (int j = 1; j <= k; ++j) acc -= Td[j] * psi[k - j];
        psi[k] = acc;
    }
    PeriodExpansion<R> pe;
    for (int k = 0; k <= order; ++k) {
        C m = psi[k].mean();
        if (!detail::negligible(m.im, m.re)) throw std::logic_error("period coefficient with imaginary part");
        pe.T.push_back(m.re);
        if (k % 2 == 1) pe.odd_residuals.push_back(m.re);
    }
    return pe;
}

}  // namespace hopfcm
