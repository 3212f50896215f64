#include "hopfcm/rational.hpp"

#include "hopfcm/errors.hpp"

#include <cmath>
#include <ostream>

namespace hopfcm {

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
        if (q.get_den() == 0) throw DivisionByZero("rational literal with zero denominator");
        q.canonicalize();
        return Rational(q);
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    mpz_class n;
    if (digits.empty() || digits == "-" || n.set_str(digits, 10) != 0)
        throw std::invalid_argument("not a decimal: " + s);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac);
    return Rational(n, d);
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    Rational r;
    r.v_ = mpq_class(x);
    return r;
}

long double Rational::to_long_double() const {
    // Scale to keep 64 significant bits before the final division.
    mpz_class n = v_.get_num(), d = v_.get_den();
    long en = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    long ed = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    long shift_n = en > 70 ? en - 70 : 0;
    long shift_d = ed > 70 ? ed - 70 : 0;
    mpz_class n2 = n >> shift_n;
    mpz_class d2 = d >> shift_d;
    auto to_ld = [](const mpz_class& z) {
        long double r = 0;
        mpz_class a = abs(z);
        std::size_t limbs = mpz_size(a.get_mpz_t());
        for (std::size_t i = limbs; i-- > 0;) {
            r = r * 18446744073709551616.0L +
                static_cast<long double>(mpz_getlimbn(a.get_mpz_t(), i));
        }
        return sgn(z) < 0 ? -r : r;
    };
    return std::ldexp(to_ld(n2) / to_ld(d2), static_cast<int>(shift_n - shift_d));
}

std::size_t Rational::hash() const {
    std::size_t h = mpz_get_ui(v_.get_num_mpz_t()) * 1000003u;
    h ^= mpz_get_ui(v_.get_den_mpz_t()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    if (sgn(v_) < 0) h = ~h;
    return h;
}

void addmul(Rational& r, const Rational& a, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_add(r.v_.get_mpq_t(), r.v_.get_mpq_t(), tmp.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.mpq().get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.mpq().get_den_mpz_t(), e);
    return Rational(n, d);
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

bool is_perfect_square(const Rational& x) {
    if (x.sign() < 0) return false;
    return mpz_perfect_square_p(x.mpq().get_num_mpz_t()) &&
           mpz_perfect_square_p(x.mpq().get_den_mpz_t());
}

Rational rational_sqrt(const Rational& x) {
    if (!is_perfect_square(x)) throw std::invalid_argument("not a rational square");
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), x.mpq().get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.mpq().get_den_mpz_t());
    return Rational(n, d);
}

}  // namespace hopfcm
