#pragma once

#include "hopfcm/gauss.hpp"

#include <map>

namespace hopfcm {

// sum_n c_n e^{i n theta}. Real-valued inputs keep c_{-n} = conj(c_n).
template <class R>
class TrigPoly {
public:
    using C = Gauss<R>;
    using Coeffs = std::map<int, C>;

    TrigPoly() = default;
    static TrigPoly constant(const C& c) {
        TrigPoly t;
        t.add(0, c);
        return t;
    }
    static TrigPoly cos() {
        TrigPoly t;
        C h(R(1) / R(2));
        t.add(1, h);
        t.add(-1, h);
        return t;
    }
    static TrigPoly sin() {
        TrigPoly t;
        t.add(1, C(R(0), R(-1) / R(2)));
        t.add(-1, C(R(0), R(1) / R(2)));
        return t;
    }

    const Coeffs& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    C coeff(int n) const {
        auto it = c_.find(n);
        return it == c_.end() ? C(R(0)) : it->second;
    }
    C mean() const { return coeff(0); }

    void add(int n, const C& v) {
        if (scalar_is_zero(v)) return;
        auto [it, inserted] = c_.try_emplace(n, v);
        if (!inserted) {
            it->second += v;
            if (scalar_is_zero(it->second)) c_.erase(it);
        }
    }

    TrigPoly& operator+=(const TrigPoly& o) {
        for (const auto& [n, v] : o.c_) add(n, v);
        return *this;
    }
    TrigPoly& operator-=(const TrigPoly& o) {
        for (const auto& [n, v] : o.c_) add(n, -v);
        return *this;
    }
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
        TrigPoly r;
        for (const auto& [n, u] : a.c_)
            for (const auto& [m, v] : b.c_) r.add(n + m, u * v);
        return r;
    }
    friend TrigPoly operator*(const C& s, const TrigPoly& a) {
        TrigPoly r;
        if (scalar_is_zero(s)) return r;
        for (const auto& [n, v] : a.c_) r.add(n, s * v);
        return r;
    }

    TrigPoly derivative() const {
        TrigPoly r;
        for (const auto& [n, v] : c_) r.add(n, C(R(0), R(n)) * v);
        return r;
    }
    // Antiderivative vanishing at theta = 0; requires zero mean.
    TrigPoly integral() const {
        TrigPoly r;
        C at0(R(0));
        for (const auto& [n, v] : c_) {
            if (n == 0) continue;
            C a = v / C(R(0), R(n));
            r.add(n, a);
            at0 += a;
        }
        r.add(0, -at0);
        return r;
    }
    // Unique periodic solution of y' = lambda y + this.
    TrigPoly solve_linear(const R& lambda) const {
        TrigPoly r;
        for (const auto& [n, v] : c_) r.add(n, v / C(-lambda, R(n)));
        return r;
    }

private:
    Coeffs c_;
};

}  // namespace hopfcm
