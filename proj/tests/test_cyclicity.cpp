#include <doctest.h>

#include "hopfcm/catalog.hpp"
#include "hopfcm/cyclicity.hpp"
#include "hopfcm/focus.hpp"

using namespace hopfcm;

namespace {

struct Vars {
    JetLayoutPtr L = JetLayout::make({"x", "y", "z"}, 2);
    RJet x = RJet::variable(L, 0), y = RJet::variable(L, 1), z = RJet::variable(L, 2);
};

}  // namespace

TEST_CASE("exact Jacobian rank of linear parts") {
    Vars v;
    auto rep = jacobian_rank({v.x + v.y * v.y, Rational(2) * v.x + v.z, v.x + v.z * v.y});
    CHECK(rep.rank == 2);
    CHECK(rep.matrix(1, 2) == Rational(1));
    CHECK(rep.params == std::vector<std::string>{"x", "y", "z"});
    CHECK(leading_rank({v.x, Rational(2) * v.x, v.y}) == 1);
    CHECK(leading_rank({v.x, v.y, v.x - v.y, v.z}) == 2);
}

TEST_CASE("reduction removes the pivot directions") {
    Vars v;
    RJet L1 = v.x + v.y * v.y;
    RJet L2 = Rational(3) * v.x + v.z * v.z;
    auto red = reduce_quantities({L1, L2}, {"x"});
    REQUIRE(red.k == 1);
    CHECK(red.combos.at(0) == std::vector<Rational>{Rational(3)});
    // x = -y^2 on {L1 = 0}: L2 - 3 L1 = z^2 - 3 y^2
    RJet h = homogeneous_part(red.reduced.at(0), 2);
    CHECK(h == v.z * v.z - Rational(3) * v.y * v.y);
    auto line = evaluate_on_line(h, {{"y", Rational(1)}, {"z", Rational(1)}});
    CHECK(line.coeffs.size() == 1);
    CHECK(line.coeffs.at(2) == Rational(-2));
    CHECK_THROWS_AS(homogeneous_part(h, 3), TruncationTooLow);
}

TEST_CASE("bad pivots are rejected") {
    Vars v;
    CHECK_THROWS_AS(reduce_quantities({v.x + v.y * v.y, Rational(3) * v.x}, {"y"}), BadPivots);
    CHECK_THROWS_AS(reduce_quantities({v.x, v.y}, {"x"}), BadPivots);
}

TEST_CASE("gradient rank at a point") {
    Vars v;
    std::map<std::string, Rational> p{{"y", Rational(1)}, {"z", Rational(0)}};
    CHECK(gradient_rank({v.y * v.y}, p, {"y", "z"}) == 1);
    CHECK(gradient_rank({v.y * v.y, v.y * v.z}, p, {"y", "z"}) == 2);
    CHECK(gradient_rank({v.z * v.z}, p, {"y", "z"}) == 0);
}

TEST_CASE("Jacobian rows match the symbolic gradient of L1 on e1-normal-trace") {
    auto cfg = teo4_config(Rational(2));
    auto qs = jet_focus_quantities(catalog_system(cfg.system), cfg.jet_params, cfg.base, 1, 1);
    auto f = build_exact(catalog_system("e1-normal"));
    ParamExpr L1 = focus_quantities(as_normal_form(f), 1).L.at(0);
    std::vector<Rational> at;
    for (const auto& p : f.params) at.push_back(p == "k" ? Rational(1) : p == "c" ? Rational(0) : Rational(2));
    auto lin = qs.at(0).linear_part();
    for (std::size_t j = 0; j < cfg.jet_params.size(); ++j) {
        int idx = static_cast<int>(std::find(f.params.begin(), f.params.end(), cfg.jet_params[j]) - f.params.begin());
        CHECK(lin[j] == L1.differentiate(idx).evaluate(at));
    }
}

TEST_CASE("d is tangent to the center set of e1-normal-trace") {
    for (const auto& d0 : {Rational(1, 2), Rational(1), Rational(2)}) {
        auto rep = cyclicity_bound(teo4_config(d0));
        for (Eigen::Index i = 0; i < rep.jacobian.matrix.rows(); ++i) CHECK(rep.jacobian.matrix(i, 2).is_zero());
        CHECK(rep.trace_bonus);
    }
}

TEST_CASE("custom configuration documents") {
    Json doc = Json::parse(R"({"system":"e1-normal-trace","jet_params":["k","c"],
                               "base":{"k":"1","c":"0"},"params":"d=1,sigma=0","order":2})");
    auto cfg = parse_cyclicity_config(doc);
    CHECK(cfg.jet_params.size() == 2);
    CHECK(cfg.base.at("k") == Rational(1));
    auto rep = cyclicity_bound(cfg);
    CHECK(rep.jacobian.rank >= 1);
    CHECK_THROWS_AS(parse_cyclicity_config(Json::parse(R"({"jet_params":["k"]})")), SchemaError);
    Json off = doc;
    off["base"]["k"] = "2";
    CHECK_THROWS_AS(cyclicity_bound(parse_cyclicity_config(off)), DomainError);
}
