#pragma once

#include "hopfcm/scalar.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfcm {

using Mono3 = std::array<int, 3>;

inline int degree_of(const Mono3& m) { return m[0] + m[1] + m[2]; }

// Polynomial in the three state variables with coefficients in S.
// Zero coefficients are never stored.
template <class S>
class StatePoly {
public:
    using Terms = std::map<Mono3, S>;

    StatePoly() = default;

    static StatePoly constant(const S& c) {
        StatePoly p;
        p.add_term({0, 0, 0}, c);
        return p;
    }
    static StatePoly variable(int i) {
        StatePoly p;
        Mono3 m{0, 0, 0};
        m[i] = 1;
        p.add_term(m, S(1));
        return p;
    }
    static StatePoly monomial(const Mono3& m, const S& c) {
        StatePoly p;
        p.add_term(m, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    S coeff(const Mono3& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? S(0) : it->second;
    }

    void add_term(const Mono3& m, const S& c) {
        if (m[0] < 0 || m[1] < 0 || m[2] < 0) throw std::invalid_argument("negative exponent");
        if (scalar_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }
    void set_term(const Mono3& m, const S& c) {
        terms_.erase(m);
        add_term(m, c);
    }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
        return d;
    }
    int min_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = d < 0 ? degree_of(m) : std::min(d, degree_of(m));
        return d;
    }

    StatePoly homogeneous(int deg) const {
        StatePoly r;
        for (const auto& [m, c] : terms_)
            if (degree_of(m) == deg) r.terms_.emplace(m, c);
        return r;
    }
    // Terms of degree >= deg.
    StatePoly tail(int deg) const {
        StatePoly r;
        for (const auto& [m, c] : terms_)
            if (degree_of(m) >= deg) r.terms_.emplace(m, c);
        return r;
    }

    StatePoly& operator+=(const StatePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    StatePoly& operator-=(const StatePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend StatePoly operator+(StatePoly a, const StatePoly& b) { return a += b; }
    friend StatePoly operator-(StatePoly a, const StatePoly& b) { return a -= b; }
    friend StatePoly operator-(const StatePoly& a) {
        StatePoly r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend StatePoly operator*(const StatePoly& a, const StatePoly& b) {
        StatePoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
        return r;
    }
    friend StatePoly operator*(const S& s, const StatePoly& a) {
        StatePoly r;
        if (scalar_is_zero(s)) return r;
        for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
        return r;
    }
    friend bool operator==(const StatePoly& a, const StatePoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const StatePoly& a, const StatePoly& b) { return !(a == b); }

    StatePoly pow(int e) const {
        StatePoly r = constant(S(1));
        for (int k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    StatePoly derivative(int var) const {
        StatePoly r;
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Mono3 n = m;
            --n[var];
            r.add_term(n, S(m[var]) * c);
        }
        return r;
    }

    template <class V>
    V evaluate(const std::array<V, 3>& x) const {
        V s(0);
        for (const auto& [m, c] : terms_) {
            V t = V(c);
            for (int i = 0; i < 3; ++i)
                for (int p = 0; p < m[i]; ++p) t = t * x[i];
            s += t;
        }
        return s;
    }

    // Replace x_i by images[i].
    StatePoly compose(const std::array<StatePoly, 3>& images) const {
        StatePoly r;
        std::array<std::vector<StatePoly>, 3> powers;
        for (const auto& [m, c] : terms_) {
            StatePoly t = constant(c);
            for (int i = 0; i < 3; ++i) {
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(constant(S(1)));
                while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * images[i]);
                if (m[i]) t = t * pw[m[i]];
            }
            r += t;
        }
        return r;
    }

    template <class F>
    auto map(F&& f) const {
        using T = decltype(f(std::declval<const S&>()));
        StatePoly<T> r;
        for (const auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

private:
    Terms terms_;
};

inline std::string monomial_string(const Mono3& m, const std::array<std::string, 3>& vars) {
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace hopfcm
