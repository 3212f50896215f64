#include <doctest.h>

#include "hopfcm/catalog.hpp"
#include "hopfcm/hopf.hpp"
#include "hopfcm/normal_form.hpp"

#include <random>
#include <set>

using namespace hopfcm;

namespace {

// (c, d, k) as variables 0, 1, 2 and b from the k-reparametrization.
VectorField3<ParamExpr> khaled_on_hopf_set() {
    ParamExpr c = ParamExpr::variable(0), d = ParamExpr::variable(1), k = ParamExpr::variable(2), one(1);
    ParamExpr b = (one + c * d - c * c * d * d - k * k) / (d * (one + c * d));
    std::map<std::string, ParamExpr> env{{"a", c}, {"b", b}, {"c", c}, {"d", d}};
    auto f = build_field<ParamExpr>(catalog_system("khaled-original"),
                                    [&](const std::string& s) { return env.at(s); });
    f.params = {"c", "d", "k"};
    return f;
}

Rational eval_named(const ParamExpr& e, const std::vector<std::string>& params,
                    const std::map<std::string, Rational>& at) {
    std::vector<Rational> x;
    for (const auto& p : params) x.push_back(at.at(p));
    return e.evaluate(x);
}

}  // namespace

TEST_CASE("catalog lists the built-in systems") {
    auto list = catalog();
    CHECK(list.size() >= 8);
    for (const char* name : {"khaled-original", "e1-normal", "e1-center", "e1-center-perturbed", "e4-normal",
                             "e5-normal", "e1-normal-trace"})
        CHECK(in_catalog(name));
    CHECK_THROWS(catalog_system("no-such-system"));
    CHECK(perturbation_names().size() == 18);
    CHECK(perturbation_names().front() == "a200");
}

TEST_CASE("system documents are validated") {
    Json doc = Json::parse(R"({"backend":"exact","params":{"c":null},"state_vars":["x","y","z"],
        "equations":[[{"exp":[0,1,0],"coeff":"-1"}],[{"exp":[1,0,0],"coeff":"1"}],[{"exp":[0,0,1],"coeff":"-c"}]]})");
    SystemDef def = parse_system(doc);
    auto f = build_exact(def, {{"c", "2"}});
    CHECK(f[2].coeff({0, 0, 1}) == ParamExpr(-2));

    Json empty = doc;
    empty["equations"] = Json::array();
    CHECK_THROWS_AS(parse_system(empty), SchemaError);

    Json radical = doc;
    radical["equations"][2][0]["coeff"] = "sqrt(c)";
    CHECK_THROWS_AS(parse_system(radical), SchemaError);
    radical["backend"] = "float";
    auto g = build_float<double>(parse_system(radical), {{"c", "4"}});
    CHECK(g[2].coeff({0, 0, 1}) == doctest::Approx(2.0));
}

TEST_CASE("khaled-original field values") {
    auto f = build_rational(catalog_system("khaled-original"), {{"a", "1"}, {"b", "0"}, {"c", "1"}, {"d", "1"}});
    auto at_e1 = evaluate_field(f, e1_point(Rational(1)));
    CHECK(at_e1 == Point3<Rational>{Rational(0), Rational(0), Rational(0)});
    auto at_111 = evaluate_field(f, Point3<Rational>{Rational(1), Rational(1), Rational(1)});
    CHECK(at_111 == Point3<Rational>{Rational(1), Rational(0), Rational(1)});
}

TEST_CASE("Jacobian and characteristic polynomial at E1") {
    auto f = build_exact(catalog_system("khaled-original"));
    auto idx = [&](const std::string& n) {
        return static_cast<int>(std::find(f.params.begin(), f.params.end(), n) - f.params.begin());
    };
    ParamExpr a = ParamExpr::variable(idx("a")), c = ParamExpr::variable(idx("c")), d = ParamExpr::variable(idx("d"));
    Point3<ParamExpr> e1{ParamExpr(0), ParamExpr(0), ParamExpr(1) / d};
    auto J = jacobian_at(f, e1);
    CHECK(J(0, 1) == a + ParamExpr(1) / d);
    CHECK(J(2, 2) == -d);
    CHECK(char_cubic(J).alpha == a - c + d);

    Mat3<Rational> I = Mat3<Rational>::Identity();
    auto p = char_cubic(I);
    CHECK(p.alpha == Rational(-3));
    CHECK(p.beta == Rational(3));
    CHECK(p.gamma == Rational(-1));
}

TEST_CASE("Hopf test at E1") {
    auto def = catalog_system("khaled-original");
    auto f = build_rational(def, {{"a", "1"}, {"b", "0"}, {"c", "1"}, {"d", "1"}});
    auto rep = hopf_test(char_cubic(jacobian_at(f, e1_point(Rational(1)))));
    CHECK(rep.is_hopf());
    CHECK(rep.beta == Rational(1));
    CHECK(rep.lambda3 == Rational(-1));

    auto g = build_rational(def, {{"a", "2"}, {"b", "0"}, {"c", "1"}, {"d", "1"}});
    CHECK(hopf_test(char_cubic(jacobian_at(g, e1_point(Rational(1))))).verdict == Verdict::No);

    // (1+cd)(1-bd) - c^2 d^2 = 0 gives beta = 0
    auto h = build_rational(def, {{"a", "1"}, {"b", "1/2"}, {"c", "1"}, {"d", "1"}});
    auto r0 = hopf_test(char_cubic(jacobian_at(h, e1_point(Rational(1)))));
    CHECK(r0.verdict == Verdict::No);
    CHECK(r0.beta == Rational(0));
}

TEST_CASE("reparametrized b") {
    auto bexpr = [](Rational c, Rational d, Rational k) {
        return (Rational(1) + c * d - c * c * d * d - k * k) / (d * (Rational(1) + c * d));
    };
    CHECK(bexpr(Rational(0), Rational(1), Rational(1)) == Rational(0));
    CHECK(bexpr(Rational(1), Rational(1), Rational(1)) == Rational(0));
    ParamExpr c = ParamExpr::variable(0), d = ParamExpr::variable(1), one(1);
    ParamExpr e = one / (one + c * d);
    CHECK_THROWS_AS(e.evaluate({Rational(-1), Rational(1)}), PoleAtPoint);
}

TEST_CASE("equilibria for d = 0") {
    auto pts = khaled_equilibria(-0.25, 73.0 / 32, 0.25, 0);
    auto p = khaled_e45("E4-", -0.25, 73.0 / 32, 0.25);
    CHECK(p[0] == doctest::Approx(-2.828427).epsilon(1e-6));
    CHECK(p[1] == doctest::Approx(0.353553).epsilon(1e-6));
    CHECK(p[2] == doctest::Approx(2.25));
    CHECK(pts.size() >= 2);
    CHECK(e1_point(Rational(4))[2] == Rational(1, 4));

    auto f = build_float<double>(catalog_system("khaled-original"), {{"a", "1"}, {"b", "0"}, {"c", "1"}, {"d", "1"}});
    auto x = newton_equilibrium(f, Point3<double>{0, 0, 1.01});
    CHECK(std::abs(x[2] - 1) < 1e-12);
    CHECK(std::abs(x[0]) < 1e-12);
}

TEST_CASE("parameter regions") {
    CHECK(in_region(Region::W3, Rational(1), Rational(-8), Rational(3)));
    CHECK_FALSE(in_region(Region::W1, Rational(1), Rational(-8), Rational(3)));
    // (a+b)^2 + 4ac = 0
    CHECK_THROWS_AS(in_region(Region::W1, Rational(1), Rational(-3), Rational(-1)), RegionUndefined);
    CHECK(e4_hopf_conditions(Rational(-1, 4), Rational(73, 32), Rational(1, 4)));
    CHECK_FALSE(e5_hopf_conditions(Rational(-1, 4), Rational(73, 32), Rational(1, 4)));
}

TEST_CASE("E1 translation and the reference change of coordinates give e1-normal") {
    auto f = khaled_on_hopf_set();
    ParamExpr c = ParamExpr::variable(0), d = ParamExpr::variable(1), k = ParamExpr::variable(2), one(1);
    Point3<ParamExpr> e1{ParamExpr(0), ParamExpr(0), one / d};

    // translated field has the reference right-hand side of x'
    auto t = translate(f, e1);
    CHECK(t[0].coeff({1, 0, 0}) == -c);
    CHECK(t[0].coeff({0, 1, 0}) == c + one / d);
    CHECK(t[0].coeff({0, 1, 1}) == one);
    CHECK(t[2].coeff({0, 0, 1}) == -d);

    ParamExpr den = c * c * d * d + k * k;
    Mat3<ParamExpr> M = Mat3<ParamExpr>::Zero();
    M(0, 0) = (c * d * k + k) / den;
    M(0, 1) = c * d * (c * d + one) / den;
    M(1, 1) = one;
    M(2, 2) = one;
    auto nf = to_normal_form(f, e1, M, k / d);
    CHECK(nf.orientation == -1);
    CHECK(nf.lambda == -(d * d) / k);

    auto ref = build_exact(catalog_system("e1-normal"));
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(1, 9), den_d(1, 5);
    for (int s = 0; s < 10; ++s) {
        std::map<std::string, Rational> at{{"c", Rational(num(rng) - 5, den_d(rng))},
                                           {"d", Rational(num(rng), den_d(rng))},
                                           {"k", Rational(num(rng), den_d(rng))}};
        if ((Rational(1) + at["c"] * at["d"]).is_zero()) continue;
        for (int i = 0; i < 3; ++i) {
            std::set<Mono3> monos;
            for (const auto& [m, v] : nf.field[i].terms()) monos.insert(m);
            for (const auto& [m, v] : ref[i].terms()) monos.insert(m);
            for (const auto& m : monos)
                CHECK(eval_named(nf.field[i].coeff(m), f.params, at) == eval_named(ref[i].coeff(m), ref.params, at));
        }
    }
    // uw coefficient of u' at (c,d,k) = (1,1,1)
    CHECK(eval_named(nf.field[0].coeff({1, 0, 1}), f.params, {{"c", 1}, {"d", 1}, {"k", 1}}) == Rational(1));
}

TEST_CASE("e1-normal restricted to k = 1, c = 0 is e1-center") {
    auto f = build_exact(catalog_system("e1-normal"), {{"k", "1"}, {"c", "0"}});
    auto g = build_exact(catalog_system("e1-center"));
    REQUIRE(f.params == g.params);
    CHECK(f == g);
}

TEST_CASE("identity transform leaves a field unchanged") {
    auto f = build_rational(catalog_system("khaled-original"), {{"a", "1"}, {"b", "2"}, {"c", "3"}, {"d", "1/2"}});
    const Mat3<Rational> I = Mat3<Rational>::Identity();
    auto g = transform(f, Point3<Rational>{Rational(0), Rational(0), Rational(0)}, I, Rational(1));
    CHECK(f == g);
}

TEST_CASE("numeric normal form at E4- has rotation block and lambda = 2c") {
    auto f = build_float<double>(catalog_system("khaled-original"),
                                 {{"a", "-1/4"}, {"b", "73/32"}, {"c", "1/4"}, {"d", "0"}});
    auto eq = khaled_e45("E4-", -0.25, 73.0 / 32, 0.25);
    auto nf = to_normal_form_numeric(f, eq);
    auto L = linear_part(nf.field);
    CHECK(L(0, 1) == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(L(1, 0) == doctest::Approx(1.0).epsilon(1e-10));
    // lambda is measured in the rescaled time
    auto rep = hopf_test(char_cubic(jacobian_at(f, eq)));
    CHECK(nf.lambda * rep.omega == doctest::Approx(0.5).epsilon(1e-9));
}
