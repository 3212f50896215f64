#pragma once

#include "hopfcm/param_poly.hpp"

#include <string>
#include <vector>

namespace hopfcm {

// Element of Q(p1,...,pn): numerator/denominator with gcd removed and a
// monic denominator (leading grlex coefficient 1), so equal field elements
// share one representation.
class ParamExpr {
public:
    ParamExpr() : den_(1) {}
    ParamExpr(int c) : num_(c), den_(1) {}               // NOLINT(implicit)
    ParamExpr(const Rational& c) : num_(c), den_(1) {}   // NOLINT(implicit)
    ParamExpr(const ParamPoly& p) : num_(p), den_(1) {}  // NOLINT(implicit)
    ParamExpr(const ParamPoly& num, const ParamPoly& den);

    static ParamExpr variable(int index) { return ParamExpr(ParamPoly::variable(index)); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;  // requires is_constant()

    ParamExpr& operator+=(const ParamExpr& o);
    ParamExpr& operator-=(const ParamExpr& o);
    ParamExpr& operator*=(const ParamExpr& o);
    ParamExpr& operator/=(const ParamExpr& o);
    friend ParamExpr operator+(ParamExpr a, const ParamExpr& b) { return a += b; }
    friend ParamExpr operator-(ParamExpr a, const ParamExpr& b) { return a -= b; }
    friend ParamExpr operator*(ParamExpr a, const ParamExpr& b) { return a *= b; }
    friend ParamExpr operator/(ParamExpr a, const ParamExpr& b) { return a /= b; }
    friend ParamExpr operator-(const ParamExpr& a);
    friend bool operator==(const ParamExpr& a, const ParamExpr& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ParamExpr& a, const ParamExpr& b) { return !(a == b); }

    ParamExpr pow(unsigned e) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    double evaluate(const std::vector<double>& point) const;
    ParamExpr differentiate(int var) const;
    ParamExpr substitute(const std::vector<ParamExpr>& images) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    void canonicalize();
    ParamPoly num_, den_;
};

// Canonical representative of num/den.
ParamExpr normalize(const ParamPoly& num, const ParamPoly& den);

inline bool is_zero(const ParamExpr& x) { return x.is_zero(); }

}  // namespace hopfcm
