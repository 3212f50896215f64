#include "hopfcm/cli.hpp"

#include "hopfcm/catalog.hpp"
#include "hopfcm/claims.hpp"
#include "hopfcm/cyclicity.hpp"
#include "hopfcm/export.hpp"
#include "hopfcm/focus.hpp"
#include "hopfcm/format.hpp"
#include "hopfcm/hopf.hpp"
#include "hopfcm/normal_form.hpp"
#include "hopfcm/period.hpp"
#include "hopfcm/simulate.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace hopfcm::cli {

namespace {

bool extended_precision() {
    const char* p = std::getenv("HF_PRECISION");
    if (!p || std::string(p).empty() || std::string(p) == "double") return false;
    if (std::string(p) == "extended") return true;
    throw UsageError("HF_PRECISION must be double or extended");
}

// Runs fn with a value of the floating type selected by HF_PRECISION.
template <class F>
Json with_real(F&& fn) {
    if (extended_precision()) return fn(static_cast<long double>(0));
    return fn(0.0);
}

struct Fmt {
    std::vector<std::string> names;
    std::string operator()(double x) const { return to_text(x); }
    std::string operator()(long double x) const { return to_text(x); }
    std::string operator()(const Rational& x) const { return x.str(); }
    std::string operator()(const ParamExpr& x) const { return x.str(names); }
};

template <class S>
std::string poly_text(const StatePoly<S>& p, const std::array<std::string, 3>& vars, const Fmt& fmt) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + fmt(c) + ")";
        for (int i = 0; i < 3; ++i) {
            if (m[i] == 0) continue;
            out += "*" + vars[i];
            if (m[i] > 1) out += "^" + std::to_string(m[i]);
        }
    }
    return out;
}

template <class S>
Json field_json(const VectorField3<S>& f, const std::array<std::string, 3>& vars, const Fmt& fmt) {
    Json j = Json::array();
    for (int i = 0; i < 3; ++i) j.push_back(vars[i] + "' = " + poly_text(f[i], vars, fmt));
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw UsageError("cannot open " + path);
    try {
        return Json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

// ---------------------------------------------------------------- system loading

struct SysArgs {
    std::string system = "khaled-original";
    std::string params;
    std::string point;
    std::string transform;
    bool force_float = false;
};

void add_system_options(CLI::App* sub, SysArgs& a, bool with_point = true) {
    sub->add_option("--system", a.system, "catalog name or JSON system file")->capture_default_str();
    sub->add_option("--params", a.params, "parameter values, e.g. a=1,c=1,b=0,d=1");
    if (with_point) {
        sub->add_option("--point", a.point, "equilibrium: E1..E5 label or comma-separated expressions");
        sub->add_option("--transform", a.transform, "JSON file with a 3x3 matrix of expressions");
    }
    sub->add_flag("--float", a.force_float, "use the floating-point backend for an exact system");
}

struct Loaded {
    SystemDef def;
    Assignment as;
    bool exact = true;
};

Loaded load(const SysArgs& a) {
    Loaded l;
    l.as = parse_assignment(a.params);
    l.def = load_system(a.system, l.as);
    l.exact = l.def.backend == Backend::Exact && !a.force_float;
    return l;
}

// Parameter lookup for expressions in points and transforms; unassigned
// parameters of an exact field stay symbolic.
template <class S>
std::function<S(const std::string&)> param_lookup(const Loaded& l, const std::vector<std::string>& symbolic) {
    auto values = effective_values(l.def, l.as);
    return [values, symbolic](const std::string& name) -> S {
        auto it = values.find(name);
        if (it == values.end()) throw UsageError("unknown parameter " + name);
        if (it->second)
            return Expr::parse(*it->second).template evaluate<S>([](const std::string& s) -> S {
                throw SchemaError("parameter values cannot reference " + s);
            });
        if constexpr (std::is_same_v<S, ParamExpr>) {
            auto pos = std::find(symbolic.begin(), symbolic.end(), name);
            if (pos != symbolic.end()) return ParamExpr::variable(static_cast<int>(pos - symbolic.begin()));
        }
        throw UsageError("parameter " + name + " needs a value");
    };
}

template <class S>
Point3<S> parse_point(const std::string& spec, const Loaded& l, const std::vector<std::string>& symbolic) {
    if (spec.empty() || spec == "origin") return {S(0), S(0), S(0)};
    std::string text = spec;
    if (spec.size() >= 2 && spec[0] == 'E') {
        if (l.def.name != "khaled-original") throw UsageError("equilibrium labels apply to khaled-original");
        if (spec == "E1") {
            text = "0,0,1/d";
        } else if constexpr (std::is_floating_point_v<S>) {
            auto lookup = param_lookup<double>(l, {});
            auto pts = khaled_equilibria(lookup("a"), lookup("b"), lookup("c"), lookup("d"));
            for (const auto& p : pts)
                if (p.label == spec) return {S(p.x[0]), S(p.x[1]), S(p.x[2])};
            throw DomainError(spec + " does not exist at these parameters");
        } else {
            throw UsageError(spec + " has radical coordinates; use --float");
        }
    }
    auto parts = split(text, ',');
    if (parts.size() != 3) throw UsageError("a point needs three coordinates: " + spec);
    auto lookup = param_lookup<S>(l, symbolic);
    Point3<S> p;
    for (int i = 0; i < 3; ++i) p[i] = Expr::parse(parts[i]).template evaluate<S>(lookup);
    return p;
}

template <class S>
NormalForm3<S> obtain_normal_form(const VectorField3<S>& f, const SysArgs& a, const Loaded& l) {
    if (!a.transform.empty()) {
        Json doc = read_json_file(a.transform);
        const Json& mat = doc.is_array() ? doc : doc.at("matrix");
        auto lookup = param_lookup<S>(l, f.params);
        Mat3<S> M;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                M(i, j) = Expr::parse(mat.at(i).at(j).get<std::string>()).template evaluate<S>(lookup);
        S tau(1);
        std::string point = a.point;
        if (doc.is_object()) {
            if (doc.contains("time_scale"))
                tau = Expr::parse(doc["time_scale"].get<std::string>()).template evaluate<S>(lookup);
            if (point.empty() && doc.contains("point")) {
                for (const auto& x : doc["point"]) point += (point.empty() ? "" : ",") + x.get<std::string>();
            }
        }
        return to_normal_form(f, parse_point<S>(point, l, f.params), M, tau);
    }
    if (!a.point.empty()) {
        if constexpr (std::is_floating_point_v<S>)
            return to_normal_form_numeric(f, parse_point<S>(a.point, l, f.params));
        else
            throw UsageError("exact normalization at a point needs --transform (or use --float)");
    }
    return as_normal_form(f);
}

template <class S>
Json normal_form_json(const NormalForm3<S>& nf, const Fmt& fmt) {
    Json j;
    j["orientation"] = nf.orientation;
    j["lambda"] = fmt(nf.lambda);
    j["time_scale"] = fmt(nf.time_scale);
    Json shift = Json::array(), transform = Json::array();
    for (int i = 0; i < 3; ++i) {
        shift.push_back(fmt(nf.shift[i]));
        Json row = Json::array();
        for (int k = 0; k < 3; ++k) row.push_back(fmt(nf.transform(i, k)));
        transform.push_back(row);
    }
    j["shift"] = shift;
    j["transform"] = transform;
    j["field"] = field_json(nf.field, {"u", "v", "w"}, fmt);
    return j;
}

Json header(const Loaded& l, const std::string& backend) {
    Json j;
    j["system"] = l.def.name;
    if (!l.def.tag.empty()) j["tag"] = l.def.tag;
    j["backend"] = backend;
    Json params = Json::object();
    for (const auto& [name, v] : effective_values(l.def, l.as)) params[name] = v ? Json(*v) : Json(nullptr);
    j["params"] = params;
    return j;
}

std::string float_backend_name() { return extended_precision() ? "float (extended)" : "float (double)"; }

// ---------------------------------------------------------------- subcommands

Json cmd_catalog() {
    Json out = Json::array();
    for (const auto& info : catalog()) {
        Json j;
        j["name"] = info.name;
        j["tag"] = info.tag;
        j["backend"] = info.backend == Backend::Exact ? "exact" : "float";
        j["description"] = info.description;
        if (!info.symmetry.empty()) j["symmetry"] = info.symmetry;
        SystemDef def = catalog_system(info.name);
        Json params = Json::object();
        for (const auto& name : def.param_names) {
            auto v = def.param_values.at(name);
            params[name] = v ? Json(*v) : Json(nullptr);
        }
        j["params"] = params;
        out.push_back(j);
    }
    Json r;
    r["systems"] = out;
    return r;
}

template <class S>
Json hopf_json(const VectorField3<S>& f, const Point3<S>& p, const Fmt& fmt, int& code) {
    auto rep = hopf_test(char_cubic(jacobian_at(f, p)));
    Json j;
    j["point"] = Json::array({fmt(p[0]), fmt(p[1]), fmt(p[2])});
    j["verdict"] = verdict_name(rep.verdict);
    j["is_hopf"] = rep.is_hopf();
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    j["omega_squared"] = fmt(rep.beta);
    j["lambda3"] = fmt(rep.lambda3);
    j["gamma_minus_alpha_beta"] = fmt(rep.residual);
    if (rep.is_hopf()) {
        std::string w = rep.omega_exact ? fmt(*rep.omega_exact) : to_text(rep.omega);
        j["omega"] = rep.omega;
        j["eigenvalues"] = Json::array({"+" + w + "*i", "-" + w + "*i", fmt(rep.lambda3)});
    }
    code = rep.verdict == Verdict::No ? 2 : 0;
    return j;
}

Json cmd_hopf(const SysArgs& a, int& code) {
    Loaded l = load(a);
    std::string point = a.point.empty() ? "origin" : a.point;
    if (l.exact) {
        auto f = build_exact(l.def, l.as);
        Json j = header(l, "exact");
        j.update(hopf_json(f, parse_point<ParamExpr>(point, l, f.params), Fmt{f.params}, code));
        return j;
    }
    return with_real([&](auto tag) {
        using R = decltype(tag);
        auto f = build_float<R>(l.def, l.as);
        Json j = header(l, float_backend_name());
        j.update(hopf_json(f, parse_point<R>(point, l, {}), Fmt{}, code));
        return j;
    });
}

Json cmd_normalize(const SysArgs& a) {
    Loaded l = load(a);
    if (l.exact) {
        auto f = build_exact(l.def, l.as);
        Json j = header(l, "exact");
        j.update(normal_form_json(obtain_normal_form(f, a, l), Fmt{f.params}));
        return j;
    }
    return with_real([&](auto tag) {
        using R = decltype(tag);
        auto f = build_float<R>(l.def, l.as);
        Json j = header(l, float_backend_name());
        j.update(normal_form_json(obtain_normal_form(f, a, l), Fmt{}));
        return j;
    });
}

struct FocusArgs {
    int order = 3;
    int jet_degree = 0;
    std::string small;
    bool require_center = false;
};

template <class S>
Json focus_json(const NormalForm3<S>& nf, int order, const Fmt& fmt, bool& all_zero) {
    auto rep = focus_quantities(nf, order);
    Json j;
    j["orientation"] = nf.orientation;
    j["lambda"] = fmt(nf.lambda);
    j["normalization"] = rep.normalization;
    Json L = Json::array();
    all_zero = true;
    for (std::size_t k = 0; k < rep.L.size(); ++k) {
        Json q;
        q["k"] = k + 1;
        q["value"] = fmt(rep.L[k]);
        if constexpr (std::is_floating_point_v<S>) {
            q["approx"] = static_cast<double>(rep.L[k]);
            all_zero = false;
        } else {
            double v = to_approx(rep.L[k]);
            if (!std::isnan(v)) q["approx"] = v;
            all_zero = all_zero && rep.L[k].is_zero();
        }
        L.push_back(q);
    }
    j["L"] = L;
    if constexpr (!std::is_floating_point_v<S>) j["all_zero"] = all_zero;
    return j;
}

Json cmd_focus(const SysArgs& a, const FocusArgs& fa, int& code) {
    if (fa.order < 1) throw UsageError("--order must be positive");
    Loaded l = load(a);
    if (fa.jet_degree > 0 || !fa.small.empty()) {
        if (fa.small.empty() || fa.jet_degree < 1) throw UsageError("jet mode needs --jet-degree D and --small p1,p2,...");
        auto names = split(fa.small, ',');
        auto values = effective_values(l.def, l.as);
        std::map<std::string, Rational> base;
        Assignment rest = l.as;
        for (const auto& n : names) {
            auto it = values.find(n);
            if (it == values.end()) throw UsageError("unknown parameter " + n);
            base[n] = it->second ? Expr::parse(*it->second).evaluate<Rational>([](const std::string& s) -> Rational {
                throw SchemaError("parameter values cannot reference " + s);
            })
                                 : Rational(0);
            rest.erase(n);
        }
        auto qs = jet_focus_quantities(l.def, names, base, fa.jet_degree, fa.order, rest);
        Json j = header(l, "exact jets");
        j["jet_params"] = names;
        Json b = Json::object();
        for (const auto& [n, v] : base) b[n] = v.str();
        j["base"] = b;
        j["jet_degree"] = fa.jet_degree;
        Json L = Json::array();
        for (std::size_t k = 0; k < qs.size(); ++k) L.push_back({{"k", k + 1}, {"value", to_text(qs[k])}});
        j["L"] = L;
        j["linear_rank"] = jacobian_rank(qs).rank;
        return j;
    }
    bool all_zero = false;
    Json j;
    if (l.exact) {
        auto f = build_exact(l.def, l.as);
        j = header(l, "exact");
        j.update(focus_json(obtain_normal_form(f, a, l), fa.order, Fmt{f.params}, all_zero));
    } else {
        if (fa.require_center) throw UsageError("--require-center needs the exact backend");
        j = with_real([&](auto tag) {
            using R = decltype(tag);
            auto f = build_float<R>(l.def, l.as);
            Json r = header(l, float_backend_name());
            r.update(focus_json(obtain_normal_form(f, a, l), fa.order, Fmt{}, all_zero));
            return r;
        });
    }
    if (fa.require_center && !all_zero) code = 2;
    return j;
}

template <class S>
Json period_json(const NormalForm3<S>& nf, int order, const Fmt& fmt) {
    auto pe = isochronicity_constants(nf, order);
    Json j;
    j["convention"] = "T(rho0) = 2*pi*(1 + sum_k T_k rho0^k), T the positive minimal period";
    Json T = Json::object();
    for (std::size_t k = 2; k < pe.T.size(); k += 2) T["T" + std::to_string(k)] = fmt(pe.T[k]);
    j["T"] = T;
    bool odd = true;
    for (const auto& r : pe.odd_residuals) odd = odd && scalar_is_zero(r);
    if constexpr (!std::is_floating_point_v<S>) j["odd_orders_vanish"] = odd;
    return j;
}

Json cmd_period(const SysArgs& a, int order) {
    if (order < 2) throw UsageError("--order must be at least 2");
    Loaded l = load(a);
    if (l.exact) {
        auto f = build_exact(l.def, l.as);
        Json j = header(l, "exact");
        j.update(period_json(obtain_normal_form(f, a, l), order, Fmt{f.params}));
        return j;
    }
    return with_real([&](auto tag) {
        using R = decltype(tag);
        auto f = build_float<R>(l.def, l.as);
        Json j = header(l, float_backend_name());
        j.update(period_json(obtain_normal_form(f, a, l), order, Fmt{}));
        return j;
    });
}

Json cyclicity_json(const CyclicityReport& r) {
    Json j;
    j["mode"] = r.mode;
    j["system"] = r.system;
    j["k"] = r.k;
    j["l"] = r.l;
    j["trace_bonus"] = r.trace_bonus;
    j["bound"] = r.total;
    Json jac;
    jac["params"] = r.jacobian.params;
    Json point = Json::object();
    for (const auto& [n, v] : r.jacobian.point) point[n] = v.str();
    jac["point"] = point;
    jac["rank"] = r.jacobian.rank;
    jac["pivots"] = r.jacobian.pivots;
    jac["quantities"] = r.rank_order;
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < r.jacobian.matrix.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < r.jacobian.matrix.cols(); ++k) row.push_back(r.jacobian.matrix(i, k).str());
        rows.push_back(row);
    }
    jac["matrix"] = rows;
    j["jacobian"] = jac;
    if (!r.reduction.pivots.empty()) {
        Json red;
        red["pivots"] = r.reduction.pivots;
        Json combos = Json::array();
        for (const auto& c : r.reduction.combos) {
            Json row = Json::array();
            for (const auto& x : c) row.push_back(x.str());
            combos.push_back(row);
        }
        red["combos"] = combos;
        j["reduction"] = red;
        Json line = Json::object();
        for (const auto& [n, v] : r.line) line[n] = v.str();
        j["line"] = line;
        Json h = Json::array();
        for (const auto& p : r.h_on_line) h.push_back(p.str("t"));
        j["h_on_line"] = h;
        j["transversal"] = r.transversal;
    }
    j["notes"] = r.notes;
    return j;
}

Json cmd_cyclicity(const std::string& mode, const std::string& config, const std::string& d0) {
    CyclicityConfig cfg;
    if (mode == "teo4") cfg = teo4_config(Rational::parse(d0));
    else if (mode == "teo5") cfg = teo5_config();
    else if (mode == "custom") {
        if (config.empty()) throw UsageError("custom mode needs --config");
        cfg = parse_cyclicity_config(read_json_file(config));
    } else {
        throw UsageError("unknown mode " + mode);
    }
    return cyclicity_json(cyclicity_bound(cfg));
}

struct SimArgs {
    std::string x0;
    double tmax = 100;
    double tol = 1e-10;
    double sample_dt = 0;
    bool backward = false;
    bool plot_script = false;
    bool series = false;
    std::string csv = "trajectory.csv";
};

IntegratorOptions tolerances(double tol) {
    IntegratorOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol * 1e-2;
    return opt;
}

template <class R>
Trajectory<double> to_double(const Trajectory<R>& tr) {
    Trajectory<double> out;
    for (std::size_t i = 0; i < tr.t.size(); ++i) {
        out.t.push_back(static_cast<double>(tr.t[i]));
        out.x.push_back({static_cast<double>(tr.x[i][0]), static_cast<double>(tr.x[i][1]),
                         static_cast<double>(tr.x[i][2])});
    }
    out.stats.steps = tr.stats.steps;
    out.stats.rejected = tr.stats.rejected;
    out.stats.max_error = static_cast<double>(tr.stats.max_error);
    return out;
}

Json cmd_simulate(const SysArgs& a, const SimArgs& s) {
    if (s.x0.empty()) throw UsageError("--x0 is required");
    if (!(s.tmax > 0)) throw UsageError("--tmax must be positive");
    Loaded l = load(a);
    return with_real([&](auto tag) {
        using R = decltype(tag);
        auto f = build_float<R>(l.def, l.as);
        Point3<R> x0 = parse_point<R>(s.x0, l, {});
        R t1 = s.backward ? R(-s.tmax) : R(s.tmax);
        auto tr = to_double(integrate(f, x0, R(0), t1, tolerances(s.tol), R(s.sample_dt)));
        std::filesystem::path csv = s.csv;
        write_trajectory_csv(csv, tr, l.def.state_vars);
        Json files = Json::array({csv.string()});
        if (s.series)
            for (const auto& p : write_series_csv(csv.parent_path() / csv.stem(), tr, l.def.state_vars))
                files.push_back(p.string());
        if (s.plot_script) {
            auto py = std::filesystem::path(csv).replace_extension(".py");
            write_plot_script(py, {csv}, l.def.name + " from (" + s.x0 + ")", l.def.state_vars);
            files.push_back(py.string());
        }
        Json j = header(l, float_backend_name());
        j["t_end"] = tr.t.back();
        j["samples"] = tr.t.size();
        j["steps"] = tr.stats.steps;
        j["rejected"] = tr.stats.rejected;
        j["final"] = Json::array({tr.x.back()[0], tr.x.back()[1], tr.x.back()[2]});
        j["files"] = files;
        return j;
    });
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    auto range = split(text, ':');
    if (range.size() == 3) {
        double lo = std::stod(range[0]), hi = std::stod(range[1]);
        int n = std::stoi(range[2]);
        if (n < 1) throw UsageError("grid needs at least one point");
        for (int i = 0; i < n; ++i) out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    } else {
        for (const auto& p : split(text, ',')) out.push_back(std::stod(p));
    }
    for (double r : out)
        if (!(r > 0)) throw UsageError("rho0 values must be positive");
    return out;
}

Json cmd_displacement(const SysArgs& a, const std::string& grid_text, double tol, const std::string& csv) {
    std::vector<double> grid;
    try {
        grid = parse_grid(grid_text);
    } catch (const std::logic_error&) {
        throw UsageError("bad --rho0-grid " + grid_text);
    }
    Loaded l = load(a);
    return with_real([&](auto tag) {
        using R = decltype(tag);
        auto nf = obtain_normal_form(build_float<R>(l.def, l.as), a, l);
        double L1 = static_cast<double>(focus_quantities(nf, 1).L.at(0));
        std::vector<DisplacementSample<double>> samples;
        Json rows = Json::array();
        for (double rho : grid) {
            auto s = displacement(nf, R(rho), tolerances(tol));
            DisplacementSample<double> d{static_cast<double>(s.rho0),          static_cast<double>(s.dbar),
                                         static_cast<double>(s.omega),         static_cast<double>(s.omega_residual),
                                         s.crossings, static_cast<double>(s.section_residual)};
            samples.push_back(d);
            double c3 = d.dbar / (rho * rho * rho);
            rows.push_back({{"rho0", rho},
                            {"dbar", d.dbar},
                            {"dbar_over_rho0_cubed", c3},
                            {"ratio_to_pi_L1", c3 / (std::numbers::pi * L1)},
                            {"omega", d.omega},
                            {"returns", d.crossings},
                            {"section_residual", d.section_residual}});
        }
        Json j = header(l, float_backend_name());
        j["L1"] = L1;
        j["pi_L1"] = std::numbers::pi * L1;
        j["samples"] = rows;
        if (!csv.empty()) {
            write_sweep_csv(csv, samples);
            j["files"] = Json::array({csv});
        }
        return j;
    });
}

Json cmd_verify(const std::vector<std::string>& ids, const std::string& out_dir, bool list, int& code) {
    Json r;
    if (list) {
        Json claims = Json::array();
        for (const auto& c : claim_list())
            claims.push_back({{"id", c.id}, {"criterion", c.criterion}, {"title", c.title}});
        r["claims"] = claims;
        return r;
    }
    if (ids.empty()) throw UsageError("--claim is required (an id, a criterion number, or all)");
    std::vector<std::string> run;
    for (const auto& id : ids) {
        if (id == "all")
            for (const auto& c : claim_list()) run.push_back(c.id);
        else
            run.push_back(id);
    }
    ClaimOptions opt;
    opt.out_dir = out_dir;
    Json results = Json::array();
    for (const auto& id : run) {
        ClaimResult c = verify_claim(id, opt);
        Json checks = Json::array();
        for (const auto& k : c.checks) checks.push_back({{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}});
        results.push_back({{"id", c.id},
                           {"criterion", c.criterion},
                           {"title", c.title},
                           {"pass", c.pass()},
                           {"seconds", c.seconds},
                           {"checks", checks}});
        if (!c.pass()) code = 2;
    }
    r["results"] = results;
    return r;
}

// ---------------------------------------------------------------- output

void render_text(std::ostream& os, const Json& j, int indent) {
    const std::string pad(indent, ' ');
    auto scalar = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    auto flat = [](const Json& x) {
        if (!x.is_array()) return false;
        for (const auto& e : x)
            if (e.is_structured()) return false;
        return true;
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && v.empty()) {
                os << pad << k << ": " << (v.is_object() ? "{}" : "[]") << "\n";
            } else if (v.is_structured() && !flat(v)) {
                os << pad << k << ":\n";
                render_text(os, v, indent + 2);
            } else if (v.is_array()) {
                os << pad << k << ": [";
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
                os << "]\n";
            } else {
                os << pad << k << ": " << scalar(v) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (flat(v)) {
                os << pad << "- [";
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
                os << "]\n";
            } else if (v.is_structured()) {
                os << pad << "-\n";
                render_text(os, v, indent + 2);
            } else {
                os << pad << "- " << scalar(v) << "\n";
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

void render_verify(std::ostream& os, const Json& r) {
    if (!r.contains("results")) return render_text(os, r, 0);
    for (const auto& c : r["results"]) {
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f", c["seconds"].get<double>());
        os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["id"].get<std::string>() << " (criterion "
           << c["criterion"].get<int>() << ", " << secs << " s): " << c["title"].get<std::string>() << "\n";
        for (const auto& k : c["checks"])
            os << "  [" << (k["pass"].get<bool>() ? "ok" : "failed") << "] " << k["name"].get<std::string>() << "\n      "
               << k["detail"].get<std::string>() << "\n";
    }
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Center/focus analysis on center manifolds of 3D polynomial Hopf systems"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    std::string out_file;
    app.add_flag("--json", json, "print the report as JSON");
    app.add_option("--out", out_file, "also write the JSON report to this file");

    auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in systems");

    SysArgs hopf_args;
    auto* hopf_cmd = app.add_subcommand("hopf", "Hopf test at an equilibrium");
    add_system_options(hopf_cmd, hopf_args);

    SysArgs nf_args;
    auto* nf_cmd = app.add_subcommand("normalize", "bring a field to the normal form at a Hopf point");
    add_system_options(nf_cmd, nf_args);

    SysArgs focus_args;
    FocusArgs fa;
    auto* focus_cmd = app.add_subcommand("focus", "focus quantities L_1..L_n");
    add_system_options(focus_cmd, focus_args);
    focus_cmd->add_option("--order", fa.order, "number of focus quantities")->capture_default_str();
    focus_cmd->add_option("--jet-degree", fa.jet_degree, "truncation degree of the parameter jets");
    focus_cmd->add_option("--small", fa.small, "parameters expanded as jets about their values (0 if unset)");
    focus_cmd->add_flag("--require-center", fa.require_center, "exit 2 unless every computed L_k vanishes");

    SysArgs period_args;
    int period_order = 4;
    auto* period_cmd = app.add_subcommand("period", "isochronicity constants of a center");
    add_system_options(period_cmd, period_args);
    period_cmd->add_option("--order", period_order, "highest power of rho0")->capture_default_str();

    std::string cyc_mode = "teo5", cyc_config, cyc_d0 = "1";
    std::string cyc_system;
    auto* cyc_cmd = app.add_subcommand("cyclicity", "lower bound on limit cycles bifurcating from a center");
    cyc_cmd->add_option("--mode", cyc_mode, "teo4, teo5 or custom")->capture_default_str();
    cyc_cmd->add_option("--config", cyc_config, "JSON configuration for custom mode");
    cyc_cmd->add_option("--d0", cyc_d0, "base value of d in teo4 mode")->capture_default_str();
    cyc_cmd->add_option("--system", cyc_system, "accepted for symmetry; the mode selects the system");

    SysArgs sim_args;
    SimArgs sa;
    auto* sim_cmd = app.add_subcommand("simulate", "integrate a trajectory and write CSV");
    add_system_options(sim_cmd, sim_args, false);
    sim_cmd->add_option("--x0", sa.x0, "initial point u,v,w")->required();
    sim_cmd->add_option("--tmax", sa.tmax, "integration length")->capture_default_str();
    sim_cmd->add_option("--tol", sa.tol, "relative tolerance (absolute is 1e-2 of it)")->capture_default_str();
    sim_cmd->add_option("--sample-dt", sa.sample_dt, "dense-output sampling step (0: accepted steps)");
    sim_cmd->add_flag("--backward", sa.backward, "integrate backwards in time");
    sim_cmd->add_flag("--plot-script", sa.plot_script, "write a matplotlib script next to the CSV");
    sim_cmd->add_flag("--series", sa.series, "also write one t,<var> file per state variable");
    sim_cmd->add_option("--csv", sa.csv, "trajectory CSV path")->capture_default_str();

    SysArgs disp_args;
    std::string grid = "0.025,0.05", disp_csv;
    double disp_tol = 1e-10;
    auto* disp_cmd = app.add_subcommand("displacement", "reduced displacement sweep on a normal form");
    add_system_options(disp_cmd, disp_args);
    disp_cmd->add_option("--rho0-grid", grid, "comma list or lo:hi:n")->capture_default_str();
    disp_cmd->add_option("--tol", disp_tol, "relative tolerance")->capture_default_str();
    disp_cmd->add_option("--csv", disp_csv, "write the rho0,dbar sweep here");

    std::vector<std::string> claim_ids;
    std::string claim_dir = "figures";
    bool claim_list_flag = false;
    auto* verify_cmd = app.add_subcommand("verify", "run acceptance claims");
    verify_cmd->add_option("--claim", claim_ids, "claim id, criterion number, or all");
    verify_cmd->add_option("--out-dir", claim_dir, "directory for CSV and plot outputs")->capture_default_str();
    verify_cmd->add_flag("--list", claim_list_flag, "list the claims");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    int code = 0;
    try {
        Json report;
        if (catalog_cmd->parsed()) report = cmd_catalog();
        else if (hopf_cmd->parsed()) report = cmd_hopf(hopf_args, code);
        else if (nf_cmd->parsed()) report = cmd_normalize(nf_args);
        else if (focus_cmd->parsed()) report = cmd_focus(focus_args, fa, code);
        else if (period_cmd->parsed()) report = cmd_period(period_args, period_order);
        else if (cyc_cmd->parsed()) report = cmd_cyclicity(cyc_mode, cyc_config, cyc_d0);
        else if (sim_cmd->parsed()) report = cmd_simulate(sim_args, sa);
        else if (disp_cmd->parsed()) report = cmd_displacement(disp_args, grid, disp_tol, disp_csv);
        else if (verify_cmd->parsed()) report = cmd_verify(claim_ids, claim_dir, claim_list_flag, code);

        if (json) std::cout << report.dump(2) << "\n";
        else if (verify_cmd->parsed()) render_verify(std::cout, report);
        else render_text(std::cout, report, 0);
        if (!out_file.empty()) {
            std::ofstream os(out_file);
            if (!os) throw UsageError("cannot write " + out_file);
            os << report.dump(2) << "\n";
        }
    } catch (const FocusObstruction& e) {
        std::cerr << "error: " << e.what() << " (2*pi*mean = " << e.value
                  << (e.exact_value.empty() ? "" : ", exact mean " + e.exact_value) << ")\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}

}  // namespace hopfcm::cli
