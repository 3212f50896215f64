#include <doctest.h>

#include "hopfcm/catalog.hpp"
#include "hopfcm/period.hpp"
#include "hopfcm/simulate.hpp"

#include <numbers>

using namespace hopfcm;

TEST_CASE("Duffing oscillator period expansion") {
    // u'' + u + u^3 = 0 with amplitude rho0: T/2pi = 1 - 3/8 rho0^2 + 57/256 rho0^4 + ...
    using P = StatePoly<Rational>;
    VectorField3<Rational> f;
    P u = P::variable(0);
    f[0] = -P::variable(1);
    f[1] = u + u * u * u;
    f[2] = -P::variable(2);
    auto pe = isochronicity_constants(as_normal_form(f), 4);
    CHECK(pe.T[1].is_zero());
    CHECK(pe.T[2] == Rational(-3, 8));
    CHECK(pe.T[3].is_zero());
    CHECK(pe.T[4] == Rational(57, 256));
}

TEST_CASE("e1-center isochronicity constants in symbolic d") {
    auto f = build_exact(catalog_system("e1-center"));
    auto pe = isochronicity_constants(as_normal_form(f), 4);
    ParamExpr d = ParamExpr::variable(0);
    CHECK(pe.T[2].is_zero());
    ParamExpr d4 = d.pow(4);
    ParamExpr expected = d4 / (ParamExpr(8) * (d4 + ParamExpr(4)));
    CHECK((pe.T[4] == expected || pe.T[4] == -expected));
    for (const auto& r : pe.odd_residuals) CHECK(r.is_zero());
}

TEST_CASE("period expansion agrees with the integrated period at d = 2") {
    auto fe = build_exact(catalog_system("e1-center"), {{"d", "2"}});
    auto pe = isochronicity_constants(as_normal_form(fe), 4);
    double T4 = pe.T[4].constant_value().to_double();
    auto nf = as_normal_form(build_float<double>(catalog_system("e1-center"), {{"d", "2"}}));
    IntegratorOptions opt;
    opt.rel_tol = 1e-12;
    opt.abs_tol = 1e-14;
    const double rho = 0.2;
    auto m = measure_period(nf, rho, 20.0, opt);
    double q = (m.period / (2 * std::numbers::pi) - 1) / std::pow(rho, 4);
    CHECK(std::abs(q - T4) < 0.1 * std::abs(T4));
}

TEST_CASE("a focus has no periodic series") {
    auto f = build_exact(catalog_system("e1-normal"), {{"k", "2"}, {"c", "0"}, {"d", "1"}});
    auto nf = as_normal_form(f);
    Rational L1 = focus_quantities(nf, 1).L.at(0).constant_value();
    try {
        isochronicity_constants(nf, 4);
        FAIL("expected FocusObstruction");
    } catch (const FocusObstruction& e) {
        CHECK(e.order >= 1);
        CHECK((e.value > 0) == (L1.sign() > 0));
    }
}
