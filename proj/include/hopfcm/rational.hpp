#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace hopfcm {

// Arbitrary precision rational kept in lowest terms with a positive
// denominator (the GMP canonical form).
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}                 // NOLINT(implicit)
    Rational(long v) : v_(v) {}                // NOLINT(implicit)
    Rational(long long v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
    Rational(const mpz_class& n) : v_(n) {}    // NOLINT(implicit)
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    Rational(long n, long d);

    // Accepts "p", "p/q", "-p/q" and plain decimals such as "0.25".
    static Rational parse(const std::string& s);
    // Exact value of a finite double.
    static Rational from_double(double x);

    const mpq_class& mpq() const { return v_; }
    mpq_class& mpq() { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }
    long double to_long_double() const;
    std::string str() const { return v_.get_str(); }
    std::size_t hash() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // r += a*b without building temporaries in the caller.
    friend void addmul(Rational& r, const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

Rational pow(const Rational& base, unsigned e);
Rational abs(const Rational& x);
bool is_perfect_square(const Rational& x);
Rational rational_sqrt(const Rational& x);  // requires is_perfect_square

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline double to_double(const Rational& x) { return x.to_double(); }

}  // namespace hopfcm

template <>
struct std::hash<hopfcm::Rational> {
    std::size_t operator()(const hopfcm::Rational& r) const { return r.hash(); }
};
