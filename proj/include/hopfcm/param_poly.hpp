#pragma once

#include "hopfcm/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hopfcm {

inline constexpr int kMaxParams = 8;

using Exponent = std::array<std::uint8_t, kMaxParams>;

int total_degree(const Exponent& e);

// Graded lexicographic order, largest monomial first.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse multivariate polynomial over Q in at most kMaxParams parameters.
// Variables are positional; names live with the owning parameter space.
class ParamPoly {
public:
    using Terms = std::map<Exponent, Rational, GrlexGreater>;

    ParamPoly() = default;
    ParamPoly(const Rational& c);  // NOLINT(implicit)
    ParamPoly(int c) : ParamPoly(Rational(c)) {}  // NOLINT(implicit)

    static ParamPoly variable(int index);
    static ParamPoly monomial(const Exponent& e, const Rational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    // Leading term under grlex; the polynomial must be nonzero.
    const Exponent& leading_exponent() const { return terms_.begin()->first; }
    const Rational& leading_coefficient() const { return terms_.begin()->second; }
    std::size_t size() const { return terms_.size(); }

    int degree() const;
    int degree_in(int var) const;
    // Lowest variable index that occurs, or -1 for a constant.
    int first_variable() const;
    int num_variables_used() const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const Rational& c);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
    friend ParamPoly operator-(const ParamPoly& a);
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    ParamPoly pow(unsigned e) const;
    ParamPoly derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    double evaluate(const std::vector<double>& point) const;
    // Replace variable i by images[i] (a polynomial in possibly other variables).
    ParamPoly substitute(const std::vector<ParamPoly>& images) const;

    std::string str(const std::vector<std::string>& names) const;

    void add_term(const Exponent& e, const Rational& c);

private:
    Terms terms_;
};

// Exact quotient a/b; throws NotDivisible when b does not divide a.
ParamPoly divide_exact(const ParamPoly& a, const ParamPoly& b);
ParamPoly divide_exact(const ParamPoly& a, const Rational& b);
// Greatest common divisor, normalized to leading coefficient 1 (0 if both zero).
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);
// Scale so the grlex leading coefficient is 1.
ParamPoly make_monic(const ParamPoly& p);

}  // namespace hopfcm
