#include <doctest.h>

#include "hopfcm/expr.hpp"
#include "hopfcm/gauss.hpp"
#include "hopfcm/jet.hpp"
#include "hopfcm/param_expr.hpp"

#include <cmath>
#include <random>

using namespace hopfcm;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
    return Rational(num(rng), den(rng));
}

// Random element of Q[p0,p1,p2] with small degree.
ParamPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> e(0, 2), count(1, 4);
    auto ex = [&] { return static_cast<std::uint8_t>(e(rng)); };
    ParamPoly p;
    for (int n = count(rng); n > 0; --n) {
        Rational c = random_rational(rng);
        p += ParamPoly::monomial(Exponent{ex(), ex(), ex()}, c);
    }
    return p;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("2.5") == Rational(5, 2));
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(10, 5).is_integer());
    CHECK(is_perfect_square(Rational(49, 16)));
    CHECK(rational_sqrt(Rational(49, 16)) == Rational(7, 4));
    CHECK_FALSE(is_perfect_square(Rational(2)));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational field identities on random samples") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(std::abs((a * b).to_double() - a.to_double() * b.to_double()) < 1e-12);
    }
}

TEST_CASE("parameter fractions evaluate as a ring homomorphism") {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
        ParamExpr a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        std::vector<Rational> x{random_rational(rng), random_rational(rng), random_rational(rng)};
        Rational bx = b.evaluate(x);
        CHECK((a + b).evaluate(x) == a.evaluate(x) + bx);
        CHECK((a * b).evaluate(x) == a.evaluate(x) * bx);
        if (!bx.is_zero()) CHECK((a / b).evaluate(x) == a.evaluate(x) / bx);
    }
}

TEST_CASE("parameter fractions have a canonical form") {
    ParamExpr x = ParamExpr::variable(0), one(1);
    CHECK((x * x - one) / (x - one) == x + one);
    CHECK((x / (Rational(2) * x)) == ParamExpr(Rational(1, 2)));
    CHECK((one / x + one / x) == ParamExpr(2) / x);
    CHECK(((x + one) / (x - one)).str({"d"}) == "(d + 1)/(d - 1)");
    CHECK((x * x).differentiate(0) == ParamExpr(2) * x);
}

TEST_CASE("gaussian numbers") {
    using G = Gauss<Rational>;
    CHECK(G::i() * G::i() == G(-1));
    G z(Rational(3), Rational(4));
    CHECK(z * conj(z) == G(25));
    CHECK((z / z) == G(1));
}

TEST_CASE("expression grammar") {
    Expr e = Expr::parse("2*x^2 - 3/4*y + (x - y)^3");
    auto at = [](const std::string& s) { return s == "x" ? Rational(1, 2) : Rational(-1); };
    CHECK(e.evaluate<Rational>(at) == Rational(1, 2) + Rational(3, 4) + Rational(27, 8));
    Expr r = Expr::parse("sqrt(h^4 - 4*c^2)");
    CHECK(r.uses_sqrt());
    double v = r.evaluate<double>([](const std::string& s) { return s == "h" ? 2.0 : 0.25; });
    CHECK(v == doctest::Approx(std::sqrt(15.75)));
    CHECK_THROWS(Expr::parse("2*(x"));
}

TEST_CASE("jets multiply like truncated polynomials") {
    auto L = JetLayout::make({"e1", "e2"}, 4);
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        RJet a(L, random_rational(rng)), b(L, random_rational(rng));
        for (int k = 1; k < L->size(); ++k)
            if (L->total_degree(k) <= 2) {
                a.coeff(k) = random_rational(rng);
                b.coeff(k) = random_rational(rng);
            }
        std::vector<Rational> x{random_rational(rng), random_rational(rng)};
        // degree 2 times degree 2 fits in degree 4: no truncation
        CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
        if (!a.constant().is_zero()) CHECK(a * a.inverse() == RJet(L, Rational(1)));
    }
}

TEST_CASE("jet helpers") {
    auto L = JetLayout::make({"k", "c"}, 2);
    RJet k = RJet::variable(L, 0, Rational(1));
    RJet c = RJet::variable(L, 1);
    RJet q = k * k + Rational(3) * c - k * c;
    CHECK(q.constant() == Rational(1));
    CHECK(q.linear_part() == std::vector<Rational>{Rational(2), Rational(2)});
    CHECK(q.homogeneous(2).evaluate({Rational(1), Rational(1)}) == Rational(0));
    CHECK_THROWS_AS(q.homogeneous(3), TruncationTooLow);
    CHECK(L->index_of({1, 1}) >= 0);
    CHECK(L->variable_index("c") == 1);
    RJet e1 = RJet::variable(L, 0), e2 = RJet::variable(L, 1);
    RJet swapped = (q - RJet(L, q.constant())).compose({e2, e1});
    CHECK(swapped.linear_part() == std::vector<Rational>{Rational(2), Rational(2)});
    CHECK_THROWS(q.compose({k, c}));
}
