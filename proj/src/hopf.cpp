#include "hopfcm/hopf.hpp"

#include <cmath>

namespace hopfcm {

namespace {

// Equilibria off the z-axis satisfy y = r x with c r^2 + (a+b) r - a = 0,
// z = b + c r and x^2 r = d z - 1.
struct Branch {
    double r, z;
};

Branch branch(double a, double b, double c, double sqrt_delta, int sign) {
    double r = (-(a + b) + sign * sqrt_delta) / (2 * c);
    return {r, b + c * r};
}

void push_pair(std::vector<LabeledPoint>& out, const std::string& name, const Branch& br, double d) {
    if (br.r == 0) return;
    double x2 = (d * br.z - 1) / br.r;
    if (!(x2 > 0)) return;
    double x = std::sqrt(x2);
    out.push_back({name + "+", {x, br.r * x, br.z}});
    out.push_back({name + "-", {-x, -br.r * x, br.z}});
}

}  // namespace

std::vector<LabeledPoint> khaled_equilibria(double a, double b, double c, double d) {
    std::vector<LabeledPoint> out;
    double delta = (a + b) * (a + b) + 4 * a * c;
    if (d != 0) {
        out.push_back({"E1", {0, 0, 1 / d}});
        if (delta > 0 && a * c != 0) {
            double s = std::sqrt(delta);
            push_pair(out, "E2", branch(a, b, c, s, -1), d);
            push_pair(out, "E3", branch(a, b, c, s, +1), d);
        }
        return out;
    }
    if (delta > 0 && a != 0 && c != 0) {
        double s = std::sqrt(delta);
        push_pair(out, "E4", branch(a, b, c, s, +1), 0);
        push_pair(out, "E5", branch(a, b, c, s, -1), 0);
    }
    return out;
}

Point3<Rational> e1_point(const Rational& d) {
    if (d.is_zero()) throw DomainError("E1 requires d != 0");
    return {Rational(0), Rational(0), Rational(1) / d};
}

Point3<double> khaled_e45(const std::string& label, double a, double b, double c) {
    for (const auto& p : khaled_equilibria(a, b, c, 0))
        if (p.label == label) return p.x;
    throw DomainError(label + " does not exist at these parameters");
}

Region parse_region(const std::string& s) {
    if (s == "W1") return Region::W1;
    if (s == "W2") return Region::W2;
    if (s == "W3") return Region::W3;
    if (s == "W4") return Region::W4;
    throw UsageError("unknown region " + s);
}

bool in_region(Region w, const Rational& a, const Rational& b, const Rational& c) {
    Rational s = a + b;
    Rational delta = s * s + Rational(4) * a * c;
    if (delta.sign() <= 0) throw RegionUndefined("Delta <= 0");
    if (c.is_zero()) return false;
    // s < -sqrt(D)  <=>  s < 0 and s^2 > D
    bool below_minus = s.sign() < 0 && s * s > delta;
    // s > -sqrt(D)  <=>  not below and s != -sqrt(D); s^2 == D cannot hold as D - s^2 = 4ac != 0
    bool above_minus = !below_minus;
    // s < sqrt(D)   <=>  s < 0 or s^2 < D
    bool below_plus = s.sign() < 0 || s * s < delta;
    bool above_plus = !below_plus;
    switch (w) {
        case Region::W1: return a.sign() > 0 && below_minus;
        case Region::W2: return a.sign() < 0 && above_minus;
        case Region::W3: return a.sign() > 0 && below_plus;
        case Region::W4: return a.sign() < 0 && above_plus;
    }
    return false;
}

bool e4_hopf_conditions(const Rational& a, const Rational& b, const Rational& c) {
    return a == -c && c.sign() > 0 && b > Rational(3) * c;
}

bool e5_hopf_conditions(const Rational& a, const Rational& b, const Rational& c) {
    return a == -c && c.sign() < 0 && b < Rational(3) * c;
}

}  // namespace hopfcm
