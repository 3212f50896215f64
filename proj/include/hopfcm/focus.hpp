#pragma once

#include "hopfcm/gauss.hpp"
#include "hopfcm/normal_form.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace hopfcm {

// x' = i x + X[0], y' = -i y + X[1], z' = lambda z + X[2] in x = u + i v,
// y = u - i v, z = w. X holds the a_jkl, b_jkl, c_jkl (degree >= 2).
template <class R>
struct ComplexSystem {
    using C = Gauss<R>;
    R lambda;
    std::array<StatePoly<C>, 3> X;
};

template <class R>
struct FocusReport {
    std::vector<R> L;  // L[0] = L_1
    StatePoly<Gauss<R>> psi;
    int degree = 0;  // Psi is computed through this total degree
    std::string normalization =
        "d_kk0 = 0; X Psi = sum_j L_{j-1} (xy)^j with Psi = xy + ...; rotation u'=-v, v'=u";
};

namespace detail {

template <class R>
bool negligible(const R& x, const R& ref) {
    if constexpr (std::is_floating_point_v<R>) {
        return std::abs(x) <= R(1e-9) * std::max(R(1), std::abs(ref));
    } else {
        (void)ref;
        return scalar_is_zero(x);
    }
}

template <class R>
bool negligible(const Gauss<R>& x, const Gauss<R>& ref) {
    if constexpr (std::is_floating_point_v<R>) {
        R scale = std::max(std::abs(ref.re), std::abs(ref.im));
        return negligible(x.re, scale) && negligible(x.im, scale);
    } else {
        (void)ref;
        return scalar_is_zero(x);
    }
}

}  // namespace detail

// b_jkl = conj(a_kjl) and c_jkl = conj(c_kjl).
template <class R>
void check_reality(const ComplexSystem<R>& cs) {
    auto check = [](const StatePoly<Gauss<R>>& p, const StatePoly<Gauss<R>>& q, const char* what) {
        for (const auto& [m, c] : p.terms()) {
            Gauss<R> other = q.coeff({m[1], m[0], m[2]});
            if (!detail::negligible(other - conj(c), c)) throw NotRealSystem(what);
        }
    };
    check(cs.X[0], cs.X[1], "b_jkl != conj(a_kjl)");
    check(cs.X[1], cs.X[0], "a_jkl != conj(b_kjl)");
    check(cs.X[2], cs.X[2], "c_jkl != conj(c_kjl)");
}

template <class R>
ComplexSystem<R> complexify(const NormalForm3<R>& nf_in) {
    using C = Gauss<R>;
    NormalForm3<R> nf = canonical(nf_in);
    auto lift = [](const StatePoly<R>& p) { return p.map([](const R& c) { return C(c); }); };
    C half(R(1) / R(2));
    C ihalf(R(0), R(1) / R(2));
    // u = (x + y)/2, v = -i (x - y)/2
    StatePoly<C> u = half * StatePoly<C>::variable(0) + half * StatePoly<C>::variable(1);
    StatePoly<C> v = (-ihalf) * StatePoly<C>::variable(0) + ihalf * StatePoly<C>::variable(1);
    std::array<StatePoly<C>, 3> images{u, v, StatePoly<C>::variable(2)};
    StatePoly<C> P = lift(nf.P()).compose(images);
    StatePoly<C> Q = lift(nf.Q()).compose(images);
    StatePoly<C> Rz = lift(nf.R()).compose(images);
    ComplexSystem<R> cs;
    cs.lambda = nf.lambda;
    cs.X[0] = P + C::i() * Q;
    cs.X[1] = P - C::i() * Q;
    cs.X[2] = Rz;
    check_reality(cs);
    return cs;
}

// Degree-by-degree solution of X Psi = sum L_{j-1} (xy)^j through degree
// 2n+2. d_{k1k2k3} = -G / (i(k1-k2) + lambda k3), and at (k,k,0) the residual
// G is L_{k-1}.
template <class R>
FocusReport<R> focus_quantities(const ComplexSystem<R>& cs, int n) {
    using C = Gauss<R>;
    if (n < 1) throw UsageError("focus order must be >= 1");
    if (scalar_is_zero(cs.lambda)) throw DegenerateLambda("lambda = 0");
    check_reality(cs);
    const int top = 2 * n + 2;

    std::vector<std::map<Mono3, C>> psi(top + 1);
    psi[2][{1, 1, 0}] = C(R(1));

    // Nonlinear terms grouped by degree, with the variable they multiply.
    struct XTerm {
        int var;
        Mono3 m;
        C c;
        int deg;
    };
    std::vector<XTerm> xterms;
    for (int i = 0; i < 3; ++i)
        for (const auto& [m, c] : cs.X[i].terms()) xterms.push_back({i, m, c, degree_of(m)});

    FocusReport<R> rep;
    rep.degree = top;
    for (int s = 3; s <= top; ++s) {
        std::map<Mono3, C> G;
        for (const auto& xt : xterms) {
            int nd = s - xt.deg + 1;
            if (nd < 2 || nd >= s) continue;
            for (const auto& [m, d] : psi[nd]) {
                int e = m[xt.var];
                if (e == 0) continue;
                Mono3 t{m[0] + xt.m[0], m[1] + xt.m[1], m[2] + xt.m[2]};
                t[xt.var] -= 1;
                C contrib = xt.c * d;
                if (e != 1) contrib = contrib * C(R(e));
                auto [it, inserted] = G.try_emplace(t, contrib);
                if (!inserted) it->second += contrib;
            }
        }
        for (auto& [m, g] : G) {
            if (m[0] == m[1] && m[2] == 0) {
                if (!detail::negligible(g.im, g.re)) throw std::logic_error("focus quantity with nonzero imaginary part");
                rep.L.push_back(g.re);
                continue;
            }
            if (scalar_is_zero(g)) continue;
            C D(cs.lambda * R(m[2]), R(m[0] - m[1]));
            psi[s][m] = -(g / D);
        }
        if (s % 2 == 0 && static_cast<int>(rep.L.size()) < s / 2 - 1) rep.L.push_back(R(0));
    }
    for (int s = 2; s <= top; ++s)
        for (const auto& [m, d] : psi[s]) rep.psi.add_term(m, d);
    return rep;
}

// Terms of X Psi - sum L_{j-1} (xy)^j of total degree <= 2n+2.
template <class R>
StatePoly<Gauss<R>> focus_residual(const ComplexSystem<R>& cs, const FocusReport<R>& rep) {
    using C = Gauss<R>;
    std::array<StatePoly<C>, 3> field;
    field[0] = C::i() * StatePoly<C>::variable(0) + cs.X[0];
    field[1] = C(R(0), R(-1)) * StatePoly<C>::variable(1) + cs.X[1];
    field[2] = C(cs.lambda) * StatePoly<C>::variable(2) + cs.X[2];
    StatePoly<C> r;
    for (int i = 0; i < 3; ++i) r += rep.psi.derivative(i) * field[i];
    for (std::size_t j = 0; j < rep.L.size(); ++j) {
        int k = static_cast<int>(j) + 2;
        r -= StatePoly<C>::monomial({k, k, 0}, C(rep.L[j]));
    }
    StatePoly<C> low;
    for (const auto& [m, c] : r.terms())
        if (degree_of(m) <= rep.degree) low.add_term(m, c);
    return low;
}

template <class S>
bool verify_first_integral(const VectorField3<S>& f, const StatePoly<S>& H) {
    if (H.degree() <= 0) throw NotAFirstIntegralCandidate("H is constant");
    return lie_derivative(f, H).is_zero();
}

template <class R>
FocusReport<R> focus_quantities(const NormalForm3<R>& nf, int n) {
    return focus_quantities(complexify(nf), n);
}

// Substitute parameter values into an exact normal form and test whether
// L_1..L_n vanish identically. Poles raise PoleAtPoint.
inline ParamExpr substitute_params(const ParamExpr& e, const std::vector<std::string>& params,
                                   const std::map<std::string, ParamExpr>& sub) {
    std::vector<ParamExpr> images;
    for (std::size_t i = 0; i < params.size(); ++i) {
        auto it = sub.find(params[i]);
        images.push_back(it == sub.end() ? ParamExpr::variable(static_cast<int>(i)) : it->second);
    }
    return e.substitute(images);
}

inline bool verify_center_conditions(const VectorField3<ParamExpr>& normal_form,
                                     const std::map<std::string, ParamExpr>& sub, int n) {
    for (const auto& [name, v] : sub) {
        (void)v;
        if (std::find(normal_form.params.begin(), normal_form.params.end(), name) == normal_form.params.end())
            throw UsageError("unknown parameter " + name);
    }
    auto g = normal_form.map([&](const ParamExpr& c) { return substitute_params(c, normal_form.params, sub); });
    auto nf = as_normal_form(g);
    auto rep = focus_quantities(nf, n);
    for (const auto& l : rep.L)
        if (!l.is_zero()) return false;
    return true;
}

}  // namespace hopfcm
