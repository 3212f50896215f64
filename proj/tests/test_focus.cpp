#include <doctest.h>

#include "hopfcm/catalog.hpp"
#include "hopfcm/cyclicity.hpp"
#include "hopfcm/focus.hpp"

#include <random>

using namespace hopfcm;

namespace {

using P = StatePoly<Rational>;

// u' = -v + f(u,v), v' = u + g(u,v), w' = -w: the center manifold is w = 0.
NormalForm3<Rational> planar(const P& f, const P& g) {
    VectorField3<Rational> F;
    F[0] = -P::variable(1) + f;
    F[1] = P::variable(0) + g;
    F[2] = -P::variable(2);
    return as_normal_form(F);
}

Rational d(const P& p, int i, int j) {
    P q = p;
    for (int a = 0; a < i; ++a) q = q.derivative(0);
    for (int a = 0; a < j; ++a) q = q.derivative(1);
    return q.evaluate(std::array<Rational, 3>{Rational(0), Rational(0), Rational(0)});
}

// Classical planar first Lyapunov coefficient for x' = -y + f, y' = x + g.
Rational lyapunov_a(const P& f, const P& g) {
    Rational s = d(f, 3, 0) + d(f, 1, 2) + d(g, 2, 1) + d(g, 0, 3);
    Rational t = d(f, 1, 1) * (d(f, 2, 0) + d(f, 0, 2)) - d(g, 1, 1) * (d(g, 2, 0) + d(g, 0, 2)) -
                 d(f, 2, 0) * d(g, 2, 0) + d(f, 0, 2) * d(g, 0, 2);
    return (s + t) / Rational(16);
}

P random_planar(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-4, 4);
    P p;
    for (int deg = 2; deg <= 3; ++deg)
        for (int i = 0; i <= deg; ++i) p.add_term({i, deg - i, 0}, Rational(c(rng), 2));
    return p;
}

}  // namespace

TEST_CASE("L1 is a fixed positive multiple of the classical planar coefficient") {
    std::mt19937 rng(17);
    std::optional<Rational> scale;
    int compared = 0;
    for (int s = 0; s < 25; ++s) {
        P f = random_planar(rng), g = random_planar(rng);
        Rational a = lyapunov_a(f, g);
        Rational L1 = focus_quantities(planar(f, g), 1).L.at(0);
        CHECK(L1.sign() == a.sign());
        if (a.is_zero()) continue;
        Rational r = L1 / a;
        if (!scale) scale = r;
        CHECK(r == *scale);
        ++compared;
    }
    CHECK(compared > 15);
    CHECK(scale->sign() > 0);
}

TEST_CASE("Hamiltonian planar center has vanishing focus quantities") {
    // H = (u^2+v^2)/2 + u^3/3 + u v^2
    P u = P::variable(0), v = P::variable(1);
    P f = Rational(-2) * u * v;
    P g = u * u + v * v;
    auto rep = focus_quantities(planar(f, g), 4);
    for (const auto& L : rep.L) CHECK(L.is_zero());
}

TEST_CASE("defining identity holds through degree 2n+2") {
    auto f = build_rational(catalog_system("e1-normal"), {{"c", "1/3"}, {"d", "1"}, {"k", "2"}});
    auto cs = complexify(as_normal_form(f));
    auto rep = focus_quantities(cs, 3);
    CHECK(rep.degree >= 8);
    CHECK(focus_residual(cs, rep).is_zero());
}

TEST_CASE("e1-center: focus quantities and first integral") {
    auto f = build_exact(catalog_system("e1-center"));
    auto nf = as_normal_form(f);
    for (const auto& L : focus_quantities(nf, 3).L) CHECK(L.is_zero());
    P H = P::variable(0) * P::variable(0) + P::variable(1) * P::variable(1);
    CHECK(verify_first_integral(nf.field, H.map([](const Rational& c) { return ParamExpr(c); })));
    CHECK_THROWS_AS(verify_first_integral(nf.field, StatePoly<ParamExpr>::constant(ParamExpr(1))),
                    NotAFirstIntegralCandidate);
}

TEST_CASE("e1-normal off the center conditions is not a center") {
    auto f = build_exact(catalog_system("e1-normal"), {{"k", "2"}, {"c", "0"}, {"d", "1"}});
    auto rep = focus_quantities(as_normal_form(f), 1);
    CHECK_FALSE(rep.L[0].is_zero());
}

TEST_CASE("float and exact backends agree on e4-normal") {
    auto def = catalog_system("e4-normal");
    Assignment at{{"c", "1/4"}, {"h", "2"}};
    double L1 = focus_quantities(as_normal_form(build_float<double>(def, at)), 1).L.at(0);
    CHECK(L1 < 0);
    CHECK(L1 == doctest::Approx(-0.0027620502363).epsilon(1e-9));
}

TEST_CASE("reference L1 derivative") {
    ParamExpr c = ParamExpr::variable(0), d = ParamExpr::variable(1), k = ParamExpr::variable(2);
    std::map<std::string, ParamExpr> env{{"c", c}, {"d", d}, {"k", k}};
    ParamExpr L1 = Expr::parse("d*(k^2+4*c^2-1)+2*(k^2+1)*c+2*c*(2*c^2-1)*d^2")
                       .evaluate<ParamExpr>([&](const std::string& s) { return env.at(s); });
    CHECK(L1.differentiate(2) == ParamExpr(2) * d * k + ParamExpr(4) * c * k);
    CHECK(ParamExpr(5).differentiate(0).is_zero());
    CHECK((ParamExpr(1) / d).differentiate(1) == -(ParamExpr(1) / (d * d)));
}

TEST_CASE("jet focus quantities match derivatives of the symbolic L1") {
    auto def = catalog_system("e1-normal");
    auto f = build_exact(def, {{"d", "1"}});
    ParamExpr L1 = focus_quantities(as_normal_form(f), 1).L.at(0);
    auto qs = jet_focus_quantities(def, {"k", "c"}, {{"k", Rational(1)}, {"c", Rational(0)}}, 1, 1, {{"d", "1"}});
    std::vector<Rational> base;
    for (const auto& p : f.params) base.push_back(p == "k" ? Rational(1) : Rational(0));
    auto idx = [&](const std::string& n) {
        return static_cast<int>(std::find(f.params.begin(), f.params.end(), n) - f.params.begin());
    };
    CHECK(qs.at(0).constant() == L1.evaluate(base));
    CHECK(qs.at(0).linear_part()[0] == L1.differentiate(idx("k")).evaluate(base));
    CHECK(qs.at(0).linear_part()[1] == L1.differentiate(idx("c")).evaluate(base));
}
