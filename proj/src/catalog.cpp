#include "hopfcm/catalog.hpp"

#include "hopfcm/hopf.hpp"
#include "hopfcm/normal_form.hpp"

#include <fstream>
#include <sstream>

namespace hopfcm {

namespace {

struct Builder {
    SystemDef def;

    Builder(std::string name, std::string tag, std::string description, Backend backend = Backend::Exact) {
        def.name = std::move(name);
        def.tag = std::move(tag);
        def.description = std::move(description);
        def.backend = backend;
    }
    Builder& param(const std::string& n, std::optional<std::string> v = std::nullopt) {
        def.param_names.push_back(n);
        def.param_values[n] = std::move(v);
        return *this;
    }
    Builder& vars(std::array<std::string, 3> v) {
        def.state_vars = std::move(v);
        return *this;
    }
    Builder& term(int eq, Mono3 m, const std::string& coeff) {
        SystemTerm t;
        t.exp = m;
        t.coeff = coeff;
        t.expr = Expr::parse(coeff);
        def.equations[eq].push_back(std::move(t));
        return *this;
    }
};

const std::array<std::string, 3> kUVW{"u", "v", "w"};

const char* kA = "c*d^2*(c*d+1)/(c^2*d^2*k+k^3)";
const char* kB = "d*(2*c^4*d^4+2*c^3*d^3+2*c^2*d^2*k^2+c^2*d^2+k^4)/(k^2*(c*d+1)*(c^2*d^2+k^2))";
const char* kC = "d*(c*d+1)/(c^2*d^2+k^2)";
const char* kD = "c*d^2*(c*d+1)/(k*(c^2*d^2+k^2))";

SystemDef khaled_original() {
    Builder b("khaled-original", "four-wing system", "x'=a(y-x)+yz, y'=bx+cy-xz, z'=-dz+xy+1");
    b.param("a").param("b").param("c").param("d");
    b.term(0, {1, 0, 0}, "-a").term(0, {0, 1, 0}, "a").term(0, {0, 1, 1}, "1");
    b.term(1, {1, 0, 0}, "b").term(1, {0, 1, 0}, "c").term(1, {1, 0, 1}, "-1");
    b.term(2, {0, 0, 1}, "-d").term(2, {1, 1, 0}, "1").term(2, {0, 0, 0}, "1");
    return b.def;
}

SystemDef e1_shifted() {
    Builder b("e1-shifted", "E1 at the origin",
              "four-wing system translated to E1 with a=c and b=(1+cd-c^2d^2-k^2)/(d(1+cd))");
    b.param("c").param("d").param("k");
    b.term(0, {1, 0, 0}, "-c").term(0, {0, 1, 0}, "c+1/d").term(0, {0, 1, 1}, "1");
    b.term(1, {1, 0, 0}, "(-c^2*d^2-k^2+c*d+1)/(c*d^2+d)-1/d").term(1, {0, 1, 0}, "c").term(1, {1, 0, 1}, "-1");
    b.term(2, {1, 1, 0}, "1").term(2, {0, 0, 1}, "-d");
    return b.def;
}

void e1_normal_terms(Builder& b) {
    b.term(0, {0, 1, 0}, "1").term(0, {1, 0, 1}, kA).term(0, {0, 1, 1}, kB);
    b.term(1, {1, 0, 0}, "-1").term(1, {1, 0, 1}, std::string("-(") + kC + ")").term(1, {0, 1, 1},
                                                                                 std::string("-(") + kD + ")");
    b.term(2, {0, 0, 1}, "-d^2/k").term(2, {1, 1, 0}, kC).term(2, {0, 2, 0}, kD);
}

SystemDef e1_normal() {
    Builder b("e1-normal", "E1 normal form", "E1 after the eigenvector change of coordinates and tau=(k/d)t");
    b.param("c").param("d").param("k").vars(kUVW);
    e1_normal_terms(b);
    return b.def;
}

SystemDef e1_normal_trace() {
    Builder b("e1-normal-trace", "E1 normal form with trace", "e1-normal plus sigma*u in u' and sigma*v in v'");
    b.param("c").param("d").param("k").param("sigma", "0").vars(kUVW);
    e1_normal_terms(b);
    b.term(0, {1, 0, 0}, "sigma").term(1, {0, 1, 0}, "sigma");
    b.def.trace_param = "sigma";
    return b.def;
}

SystemDef e1_center() {
    Builder b("e1-center", "E1 center (k=1, c=0)", "u'=v+dvw, v'=-u-duw, w'=-d^2w+duv");
    b.param("d").vars(kUVW);
    b.term(0, {0, 1, 0}, "1").term(0, {0, 1, 1}, "d");
    b.term(1, {1, 0, 0}, "-1").term(1, {1, 0, 1}, "-d");
    b.term(2, {0, 0, 1}, "-d^2").term(2, {1, 1, 0}, "d");
    return b.def;
}

const std::array<Mono3, 6> kQuadratic{Mono3{2, 0, 0}, Mono3{1, 1, 0}, Mono3{1, 0, 1},
                                      Mono3{0, 2, 0}, Mono3{0, 1, 1}, Mono3{0, 0, 2}};

std::string mono_suffix(const Mono3& m) {
    return std::to_string(m[0]) + std::to_string(m[1]) + std::to_string(m[2]);
}

SystemDef e1_center_perturbed() {
    Builder b("e1-center-perturbed", "E1 center with quadratic perturbation",
              "e1-center at d=1 plus all 18 quadratic terms a_jkl, b_jkl, c_jkl");
    b.vars(kUVW);
    for (const auto& n : perturbation_names()) b.param(n, "0");
    b.term(0, {0, 1, 0}, "1").term(0, {0, 1, 1}, "1");
    b.term(1, {1, 0, 0}, "-1").term(1, {1, 0, 1}, "-1");
    b.term(2, {0, 0, 1}, "-1").term(2, {1, 1, 0}, "1");
    const char letters[3] = {'a', 'b', 'c'};
    for (int eq = 0; eq < 3; ++eq)
        for (const auto& m : kQuadratic) b.term(eq, m, std::string(1, letters[eq]) + mono_suffix(m));
    b.def.small_params = perturbation_names();
    return b.def;
}

// Reference E4 normal form with S = sqrt(h^4-4c^2) and N = 8c^3h^2-4c^2+h^4.
// The v^2 coefficient of w' carries the sign obtained by applying the
// reference change of coordinates; the reference display has the opposite sign.
SystemDef e4_normal() {
    Builder b("e4-normal", "E4- normal form", "four-wing system at E4- with a=-c, d=0, b=(4c^2+2ch^2+h^4)/(2h^2)",
              Backend::Float);
    b.param("c", "1/4").param("h", "2").vars(kUVW);
    const std::string S = "sqrt(h^4-4*c^2)";
    const std::string N = "(8*c^3*h^2-4*c^2+h^4)";
    const std::string K = "(4*c^2+h^4)";
    const std::string rc = "sqrt(c)";
    const std::string common = "(2*c-h^2)*(2*c+h^2)*(4*c^3+h^2)*(c*h^2-1)";
    b.term(0, {0, 1, 0}, "1");
    b.term(0, {0, 1, 1}, "h*" + K + "/(sqrt(2)*" + rc + "*(4*c^2-h^4))");
    b.term(0, {0, 2, 0}, "-c*" + K + "^2/((4*c^2-h^4)*" + N + ")");
    b.term(0, {1, 1, 0}, "2*sqrt(2)*c*" + rc + "*h*(-4*c^3+c*h^4-2*h^2)/(" + S + "*" + N + ")");

    b.term(1, {1, 0, 0}, "-1");
    b.term(1, {0, 0, 2}, "h^3/(sqrt(2)*" + rc + "*" + S + ")");
    b.term(1, {1, 1, 0}, "-c*" + K + "^2/" + N + "^2");
    b.term(1, {1, 0, 1}, "h*" + K + "/(sqrt(2)*" + rc + "*" + N + ")");
    b.term(1, {0, 1, 1}, "-2*c*(4*c^2*h^2+h^6)/(" + S + "*" + N + ")");
    b.term(1, {2, 0, 0}, "2*sqrt(2)*c*" + rc + "*h*" + common + "/(" + S + "*" + N + "^2)");
    b.term(1, {0, 2, 0}, "sqrt(2)*c^2*" + rc + "*h*" + K + "^2/(" + S + "*" + N + "^2)");

    b.term(2, {0, 0, 1}, "2*sqrt(2)*c*" + rc + "*h/" + S);
    b.term(2, {2, 0, 0}, "4*c^3*" + common + "*" + K + "/(" + S + "*" + N + "^3)");
    b.term(2, {0, 2, 0},
           "-2*c^3*" + K +
               "*(64*c^6*h^2-48*c^5-16*c^4*h^6+40*c^3*h^4-16*c^2*h^2-3*c*h^8+4*h^6)/(" + S + "*" + N + "^3)");
    b.term(2, {0, 0, 2}, "c*h^2*" + K + "/(" + S + "*" + N + ")");
    b.term(2, {0, 1, 1}, "4*sqrt(2)*c*" + rc + "*h*" + common + "/(" + S + "*" + N + "^2)");
    b.term(2, {1, 1, 0},
           "sqrt(2)*c*" + rc + "*" + K +
               "*(-16*c^5-8*c^2*(1+4*c^4)*h^2+8*c^3*(1+8*c^4)*h^4+2*(1+4*c^4)*h^6-c*h^8)/(h*" + N + "^3)");
    b.term(2, {1, 0, 1}, "c*" + K + "^2/" + N + "^2");
    return b.def;
}

double constant_double(const std::string& text) {
    return Expr::parse(text).evaluate<double>(
        [](const std::string& s) -> double { throw SchemaError("unexpected symbol " + s); });
}

// Normal form at E5- computed from eigenvectors of the four-wing system with
// a=-c, d=0, b=(-4c^2+2ch^2-h^4)/(2h^2).
SystemDef e5_normal(const Assignment& overrides) {
    std::string cs = "-1", hs = "2";
    for (const auto& [k, v] : overrides) {
        if (k == "c") cs = v;
        else if (k == "h") hs = v;
        else throw UsageError("e5-normal has no parameter " + k);
    }
    double c = constant_double(cs), h = constant_double(hs);
    if (!(c < 0) || !(h > 0) || !(h * h * h * h - 4 * c * c > 0))
        throw DomainError("e5-normal requires c<0, h>0 and h^4-4c^2>0");
    double a = -c;
    double b = (-4 * c * c + 2 * c * h * h - h * h * h * h) / (2 * h * h);
    SystemDef base = khaled_original();
    auto f = build_float<double>(base, {{"a", Rational::from_double(a).str()},
                                        {"b", Rational::from_double(b).str()},
                                        {"c", Rational::from_double(c).str()},
                                        {"d", "0"}});
    Point3<double> eq = khaled_e45("E5-", a, b, c);
    eq = newton_equilibrium(f, eq);
    auto nf = to_normal_form_numeric(f, eq);

    Builder out("e5-normal", "E5- normal form",
                "four-wing system at E5- with a=-c, d=0, b=(-4c^2+2ch^2-h^4)/(2h^2); numeric eigenvector transform",
                Backend::Float);
    out.param("c", cs).param("h", hs).vars(kUVW);
    double scale = 0;
    for (int i = 0; i < 3; ++i)
        for (const auto& [m, v] : nf.field[i].terms()) scale = std::max(scale, std::abs(v));
    for (int i = 0; i < 3; ++i)
        for (const auto& [m, v] : nf.field[i].terms())
            if (std::abs(v) > 1e-15 * scale) out.term(i, m, Rational::from_double(v).str());
    return out.def;
}

struct Entry {
    CatalogInfo info;
    SystemDef (*make)();
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> list = [] {
        const std::string sym = "(x,y,z) -> (-x,-y,z)";
        std::vector<Entry> v;
        auto add = [&](SystemDef (*mk)(), const std::string& symmetry) {
            SystemDef d = mk();
            v.push_back({{d.name, d.tag, d.description, symmetry, d.backend}, mk});
        };
        add(khaled_original, sym);
        add(e1_shifted, "");
        add(e1_normal, "");
        add(e1_normal_trace, "");
        add(e1_center, "");
        add(e1_center_perturbed, "");
        add(e4_normal, "");
        v.push_back({{"e5-normal", "E5- normal form",
                      "four-wing system at E5- with a=-c, d=0; numeric eigenvector transform", "", Backend::Float},
                     nullptr});
        return v;
    }();
    return list;
}

}  // namespace

std::vector<std::string> perturbation_names() {
    std::vector<std::string> names;
    for (char l : {'a', 'b', 'c'})
        for (const auto& m : kQuadratic) names.push_back(std::string(1, l) + mono_suffix(m));
    return names;
}

std::vector<CatalogInfo> catalog() {
    std::vector<CatalogInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
}

bool in_catalog(const std::string& name) {
    for (const auto& e : entries())
        if (e.info.name == name) return true;
    return false;
}

SystemDef catalog_system(const std::string& name, const Assignment& overrides) {
    if (name == "e5-normal") return e5_normal(overrides);
    for (const auto& e : entries()) {
        if (e.info.name != name) continue;
        SystemDef def = e.make();
        auto values = effective_values(def, overrides);
        def.param_values = values;
        return def;
    }
    throw UsageError("unknown system " + name);
}

SystemDef load_system(const std::string& ref, const Assignment& overrides) {
    if (in_catalog(ref)) return catalog_system(ref, overrides);
    std::ifstream in(ref);
    if (!in) throw UsageError("no built-in system or readable file named " + ref);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    SystemDef def = parse_system(doc);
    def.param_values = effective_values(def, overrides);
    return def;
}

}  // namespace hopfcm
