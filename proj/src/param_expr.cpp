#include "hopfcm/param_expr.hpp"

#include "hopfcm/errors.hpp"

namespace hopfcm {

ParamExpr::ParamExpr(const ParamPoly& num, const ParamPoly& den) : num_(num), den_(den) {
    canonicalize();
}

ParamExpr normalize(const ParamPoly& num, const ParamPoly& den) { return ParamExpr(num, den); }

void ParamExpr::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        ParamPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        num_ = divide_exact(num_, lc);
        den_ = divide_exact(den_, lc);
    }
}

Rational ParamExpr::constant_value() const {
    if (!is_constant()) throw std::logic_error("expression is not constant");
    return num_.constant_term() / den_.constant_term();
}

ParamExpr& ParamExpr::operator+=(const ParamExpr& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        canonicalize();
        return *this;
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        // Both denominators are 1 after canonicalization.
        num_ += o.num_;
        return *this;
    }
    ParamPoly g = gcd(den_, o.den_);
    ParamPoly a = divide_exact(o.den_, g);
    ParamPoly b = divide_exact(den_, g);
    num_ = num_ * a + o.num_ * b;
    den_ = den_ * a;
    canonicalize();
    return *this;
}

ParamExpr& ParamExpr::operator-=(const ParamExpr& o) { return *this += -o; }

ParamExpr& ParamExpr::operator*=(const ParamExpr& o) {
    if (is_zero() || o.is_zero()) return *this = ParamExpr();
    ParamPoly g1 = gcd(num_, o.den_);
    ParamPoly g2 = gcd(o.num_, den_);
    ParamPoly n = divide_exact(num_, g1) * divide_exact(o.num_, g2);
    ParamPoly d = divide_exact(den_, g2) * divide_exact(o.den_, g1);
    num_ = std::move(n);
    den_ = std::move(d);
    Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        num_ = divide_exact(num_, lc);
        den_ = divide_exact(den_, lc);
    }
    return *this;
}

ParamExpr& ParamExpr::operator/=(const ParamExpr& o) {
    if (o.is_zero()) throw DivisionByZero("division by the zero expression");
    ParamExpr inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    Rational lc = inv.den_.leading_coefficient();
    inv.num_ = divide_exact(inv.num_, lc);
    inv.den_ = divide_exact(inv.den_, lc);
    return *this *= inv;
}

ParamExpr operator-(const ParamExpr& a) {
    ParamExpr r = a;
    r.num_ = -r.num_;
    return r;
}

ParamExpr ParamExpr::pow(unsigned e) const {
    ParamExpr r;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    return r;
}

Rational ParamExpr::evaluate(const std::vector<Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

double ParamExpr::evaluate(const std::vector<double>& point) const {
    double d = den_.evaluate(point);
    if (d == 0.0) throw PoleAtPoint("denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

ParamExpr ParamExpr::differentiate(int var) const {
    ParamPoly dn = num_.derivative(var);
    ParamPoly dd = den_.derivative(var);
    if (dd.is_zero()) return ParamExpr(dn, den_);
    return ParamExpr(dn * den_ - num_ * dd, den_ * den_);
}

ParamExpr ParamExpr::substitute(const std::vector<ParamExpr>& images) const {
    auto sub = [&](const ParamPoly& p) {
        ParamExpr r;
        for (const auto& [e, c] : p.terms()) {
            ParamExpr t(c);
            for (int i = 0; i < kMaxParams; ++i) {
                if (!e[i]) continue;
                if (i >= static_cast<int>(images.size()))
                    throw std::out_of_range("substitution too short");
                t *= images[i].pow(e[i]);
            }
            r += t;
        }
        return r;
    };
    ParamExpr d = sub(den_);
    if (d.is_zero()) throw PoleAtPoint("substitution makes the denominator vanish");
    return sub(num_) / d;
}

std::string ParamExpr::str(const std::vector<std::string>& names) const {
    if (den_.is_constant()) return num_.str(names);
    auto wrap = [&](const ParamPoly& p) {
        std::string s = p.str(names);
        return p.size() > 1 || s.find_first_of("*^") != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

}  // namespace hopfcm
