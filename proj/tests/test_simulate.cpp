#include <doctest.h>

#include "hopfcm/catalog.hpp"
#include "hopfcm/export.hpp"
#include "hopfcm/focus.hpp"
#include "hopfcm/simulate.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

using namespace hopfcm;

namespace {

VectorField3<double> rotation_with_decay() {
    using P = StatePoly<double>;
    VectorField3<double> f;
    f[0] = -P::variable(1);
    f[1] = P::variable(0);
    f[2] = -1.0 * P::variable(2);
    return f;
}

int lines_in(const std::filesystem::path& p) {
    std::ifstream is(p);
    int n = 0;
    std::string s;
    while (std::getline(is, s)) ++n;
    return n;
}

double drift(double tol) {
    auto f = build_float<double>(catalog_system("e1-center"), {{"d", "1"}});
    IntegratorOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol * 1e-2;
    auto tr = integrate(f, Point3<double>{0.5, -0.75, 0.1}, 0.0, 100.0, opt);
    double worst = 0;
    for (const auto& x : tr.x) worst = std::max(worst, std::abs(x[0] * x[0] + x[1] * x[1] - 0.8125));
    return worst;
}

}  // namespace

TEST_CASE("linear flow against the closed-form solution") {
    auto tr = integrate(rotation_with_decay(), Point3<double>{1, 0, 1}, 0.0, 10.0);
    const auto& x = tr.x.back();
    CHECK(tr.t.back() == doctest::Approx(10.0));
    CHECK(std::abs(x[0] - std::cos(10.0)) < 1e-8);
    CHECK(std::abs(x[1] - std::sin(10.0)) < 1e-8);
    CHECK(std::abs(x[2] - std::exp(-10.0)) < 1e-9);
    CHECK(tr.stats.steps > 10);
}

TEST_CASE("dense output sampling") {
    auto tr = integrate(rotation_with_decay(), Point3<double>{1, 0, 0}, 0.0, 1.0, {}, 0.25);
    REQUIRE(tr.t.size() == 5);
    for (std::size_t i = 0; i < tr.t.size(); ++i) {
        CHECK(tr.t[i] == doctest::Approx(0.25 * i));
        CHECK(std::abs(tr.x[i][0] - std::cos(tr.t[i])) < 1e-8);
    }
}

TEST_CASE("tolerances are validated") {
    IntegratorOptions bad;
    bad.rel_tol = 0;
    CHECK_THROWS_AS(integrate(rotation_with_decay(), Point3<double>{1, 0, 0}, 0.0, 1.0, bad), UsageError);
    bad.rel_tol = 0.1;
    CHECK_THROWS_AS(integrate(rotation_with_decay(), Point3<double>{1, 0, 0}, 0.0, 1.0, bad), UsageError);
}

TEST_CASE("forward then backward returns to the start on a center") {
    auto f = build_float<double>(catalog_system("e1-center"), {{"d", "1"}});
    Point3<double> x0{0.3, 0.1, 0.0};
    auto fw = integrate(f, x0, 0.0, 5.0);
    auto bw = integrate(f, fw.x.back(), 5.0, 0.0);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(bw.x.back()[i] - x0[i]) < 1e-9);
}

TEST_CASE("first integral drift shrinks with the tolerance") {
    double coarse = drift(1e-8), fine = drift(1e-10);
    CHECK(fine < 1e-8 * 0.8125);
    CHECK(coarse >= 4 * fine);
}

TEST_CASE("section crossings of a rotation are 2 pi apart") {
    auto cr = section_crossings(rotation_with_decay(), Point3<double>{1, 0, 0.5}, 0.0, 20.0, {}, 3);
    REQUIRE(cr.size() == 3);
    CHECK(cr[1].t - cr[0].t == doctest::Approx(2 * std::numbers::pi).epsilon(1e-10));
    CHECK(cr[0].residual < 1e-12);
}

TEST_CASE("displacement sign on the E5 normal form") {
    auto def = catalog_system("e5-normal", {{"c", "-1"}, {"h", "2"}});
    auto nf = as_normal_form(build_float<double>(def));
    double L1 = focus_quantities(nf, 1).L.at(0);
    auto s = displacement(nf, 0.05);
    CHECK(L1 > 0);
    CHECK((s.dbar > 0) == (L1 > 0));
}

TEST_CASE("displacement cubic coefficient is stable under refinement") {
    auto nf = as_normal_form(build_float<double>(catalog_system("e4-normal"), {{"c", "1/4"}, {"h", "2"}}));
    auto a = displacement(nf, 0.05), b = displacement(nf, 0.025);
    double ca = a.dbar / std::pow(0.05, 3), cb = b.dbar / std::pow(0.025, 3);
    CHECK(std::abs(ca - cb) < 0.1 * std::abs(cb));
}

TEST_CASE("CSV and plot-script export") {
    auto dir = std::filesystem::temp_directory_path() / "hopfcm_export_test";
    std::filesystem::remove_all(dir);
    Trajectory<double> tr;
    tr.t = {0, 0.5, 1};
    tr.x = {{1, 0, 0}, {0.5, 0.5, 0.1}, {0, 1, 0.2}};
    write_trajectory_csv(dir / "t.csv", tr);
    CHECK(lines_in(dir / "t.csv") == 4);
    std::ifstream is(dir / "t.csv");
    std::string header;
    std::getline(is, header);
    CHECK(header == "t,u,v,w");
    auto files = write_series_csv(dir / "fig2", tr);
    REQUIRE(files.size() == 3);
    CHECK(files[0].filename() == "fig2_u.csv");
    CHECK(lines_in(files[2]) == 4);
    std::vector<DisplacementSample<double>> sweep{{0.01, -1e-7, 0, 0, 3, 0}, {0.02, -8e-7, 0, 0, 3, 0}};
    write_sweep_csv(dir / "sweep.csv", sweep);
    CHECK(lines_in(dir / "sweep.csv") == 3);
    write_plot_script(dir / "plot.py", {dir / "t.csv"}, "test");
    CHECK(std::filesystem::file_size(dir / "plot.py") > 0);
    std::filesystem::remove_all(dir);
}
