#include "hopfcm/param_poly.hpp"

#include "hopfcm/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hopfcm {

int total_degree(const Exponent& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

ParamPoly::ParamPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

ParamPoly ParamPoly::variable(int index) {
    if (index < 0 || index >= kMaxParams) throw std::out_of_range("parameter index");
    Exponent e{};
    e[index] = 1;
    return monomial(e, Rational(1));
}

ParamPoly ParamPoly::monomial(const Exponent& e, const Rational& c) {
    ParamPoly p;
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational ParamPoly::constant_term() const {
    auto it = terms_.find(Exponent{});
    return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::degree() const {
    return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

int ParamPoly::degree_in(int var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[var]);
    return d;
}

int ParamPoly::first_variable() const {
    int v = kMaxParams;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < v; ++i)
            if (e[i]) { v = i; break; }
    return v == kMaxParams ? -1 : v;
}

int ParamPoly::num_variables_used() const {
    int n = 0;
    for (int i = 0; i < kMaxParams; ++i)
        if (degree_in(i) > 0) n = i + 1;
    return n;
}

void ParamPoly::add_term(const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e;
            for (int i = 0; i < kMaxParams; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            auto [it, inserted] = r.terms_.try_emplace(e);
            addmul(it->second, ca, cb);
        }
    }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

ParamPoly operator-(const ParamPoly& a) {
    ParamPoly r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
    ParamPoly result(1), base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

ParamPoly ParamPoly::derivative(int var) const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        --f[var];
        r.add_term(f, c * Rational(static_cast<int>(e[var])));
    }
    return r;
}

Rational ParamPoly::evaluate(const std::vector<Rational>& point) const {
    Rational s;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < kMaxParams; ++i) {
            if (!e[i]) continue;
            if (i >= static_cast<int>(point.size())) throw std::out_of_range("assignment too short");
            t *= hopfcm::pow(point[i], e[i]);
        }
        s += t;
    }
    return s;
}

double ParamPoly::evaluate(const std::vector<double>& point) const {
    double s = 0;
    for (const auto& [e, c] : terms_) {
        double t = c.to_double();
        for (int i = 0; i < kMaxParams; ++i) {
            if (!e[i]) continue;
            if (i >= static_cast<int>(point.size())) throw std::out_of_range("assignment too short");
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        }
        s += t;
    }
    return s;
}

ParamPoly ParamPoly::substitute(const std::vector<ParamPoly>& images) const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) {
        ParamPoly t(c);
        for (int i = 0; i < kMaxParams; ++i) {
            if (!e[i]) continue;
            if (i >= static_cast<int>(images.size())) throw std::out_of_range("substitution too short");
            t = t * images[i].pow(e[i]);
        }
        r += t;
    }
    return r;
}

std::string ParamPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool constant = total_degree(e) == 0;
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (constant || !mag.is_one()) {
            os << mag;
            wrote = true;
        }
        for (int i = 0; i < kMaxParams; ++i) {
            if (!e[i]) continue;
            if (wrote) os << "*";
            os << (i < static_cast<int>(names.size()) ? names[i] : "p" + std::to_string(i));
            if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
            wrote = true;
        }
    }
    return os.str();
}

ParamPoly divide_exact(const ParamPoly& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    ParamPoly r = a;
    r *= Rational(1) / b;
    return r;
}

ParamPoly divide_exact(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (b.is_constant()) return divide_exact(a, b.constant_term());
    ParamPoly q, r = a;
    const Exponent& lb = b.leading_exponent();
    const Rational lcb = b.leading_coefficient();
    while (!r.is_zero()) {
        Exponent lr = r.leading_exponent();
        Exponent e;
        for (int i = 0; i < kMaxParams; ++i) {
            if (lr[i] < lb[i]) throw NotDivisible("polynomial is not an exact multiple");
            e[i] = static_cast<std::uint8_t>(lr[i] - lb[i]);
        }
        Rational c = r.leading_coefficient() / lcb;
        q.add_term(e, c);
        for (const auto& [eb, cb] : b.terms()) {
            Exponent f;
            for (int i = 0; i < kMaxParams; ++i) f[i] = static_cast<std::uint8_t>(eb[i] + e[i]);
            r.add_term(f, -(c * cb));
        }
    }
    return q;
}

ParamPoly make_monic(const ParamPoly& p) {
    if (p.is_zero()) return p;
    return divide_exact(p, p.leading_coefficient());
}

namespace {

using Uni = std::vector<ParamPoly>;

Uni to_uni(const ParamPoly& p, int v) {
    Uni u(static_cast<std::size_t>(std::max(p.degree_in(v), 0)) + 1);
    for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        f[v] = 0;
        u[e[v]].add_term(f, c);
    }
    return u;
}

ParamPoly from_uni(const Uni& u, int v) {
    ParamPoly p;
    for (std::size_t k = 0; k < u.size(); ++k) {
        for (const auto& [e, c] : u[k].terms()) {
            Exponent f = e;
            f[v] = static_cast<std::uint8_t>(k);
            p.add_term(f, c);
        }
    }
    return p;
}

void trim(Uni& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

ParamPoly uni_content(const Uni& u) {
    ParamPoly g;
    for (const auto& c : u) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) return ParamPoly(1);
    }
    return g;
}

Uni uni_divide(const Uni& u, const ParamPoly& c) {
    Uni r(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) r[k] = divide_exact(u[k], c);
    return r;
}

// Pseudo-remainder of a by b as polynomials in the main variable.
Uni prem(Uni a, const Uni& b) {
    const ParamPoly& lb = b.back();
    std::size_t db = b.size() - 1;
    trim(a);
    while (!a.empty() && a.size() - 1 >= db) {
        ParamPoly la = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c = c * lb;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= la * b[k];
        trim(a);
    }
    return a;
}

ParamPoly monomial_gcd(const ParamPoly& mono, const ParamPoly& other) {
    Exponent e = mono.leading_exponent();
    for (const auto& [f, c] : other.terms())
        for (int i = 0; i < kMaxParams; ++i) e[i] = std::min(e[i], f[i]);
    return ParamPoly::monomial(e, Rational(1));
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return ParamPoly(1);
    if (a.size() == 1) return monomial_gcd(a, b);
    if (b.size() == 1) return monomial_gcd(b, a);
    if (a == b) return make_monic(a);

    int va = a.first_variable(), vb = b.first_variable();
    int v = std::min(va, vb);
    Uni ua = to_uni(a, v), ub = to_uni(b, v);
    if (ua.size() == 1) return gcd(a, uni_content(ub));
    if (ub.size() == 1) return gcd(b, uni_content(ua));

    ParamPoly ca = uni_content(ua), cb = uni_content(ub);
    ParamPoly c = gcd(ca, cb);
    Uni pa = uni_divide(ua, ca), pb = uni_divide(ub, cb);
    if (pa.size() < pb.size()) std::swap(pa, pb);
    while (true) {
        Uni r = prem(pa, pb);
        if (r.empty()) break;
        if (r.size() == 1) return make_monic(c);
        pa = std::move(pb);
        pb = uni_divide(r, uni_content(r));
    }
    ParamPoly g = from_uni(pb, v);
    return make_monic(c * g);
}

}  // namespace hopfcm
