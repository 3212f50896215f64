#include "hopfcm/cyclicity.hpp"

#include "hopfcm/catalog.hpp"
#include "hopfcm/focus.hpp"
#include "hopfcm/linalg.hpp"

#include <algorithm>

namespace hopfcm {

namespace {

JetLayoutPtr common_layout(const std::vector<RJet>& qs) {
    JetLayoutPtr L;
    for (const auto& q : qs) {
        if (!q.layout()) continue;
        if (L && L != q.layout()) throw std::invalid_argument("quantities over different jet layouts");
        L = q.layout();
    }
    return L;
}

MatX<Rational> linear_rows(const std::vector<RJet>& qs, int nvars) {
    MatX<Rational> m(static_cast<Eigen::Index>(qs.size()), nvars);
    for (std::size_t i = 0; i < qs.size(); ++i) {
        auto lin = qs[i].linear_part();
        for (int j = 0; j < nvars; ++j)
            m(static_cast<Eigen::Index>(i), j) = lin.empty() ? Rational(0) : lin[j];
    }
    return m;
}

int index_of(const JetLayout& L, const std::string& name) {
    int idx = L.variable_index(name);
    if (idx < 0) throw UsageError("unknown jet parameter " + name);
    return idx;
}

std::vector<Rational> point_vector(const JetLayout& L, const std::map<std::string, Rational>& p) {
    std::vector<Rational> v(L.nvars(), Rational(0));
    for (const auto& [name, val] : p) v[index_of(L, name)] = val;
    return v;
}

std::map<std::string, Rational> parse_rational_map(const Json& j) {
    std::map<std::string, Rational> m;
    for (const auto& [k, v] : j.items()) m[k] = Rational::parse(v.is_string() ? v.get<std::string>() : v.dump());
    return m;
}

}  // namespace

JacobianReport jacobian_rank(const std::vector<RJet>& quantities, const std::map<std::string, Rational>& point) {
    JacobianReport rep;
    rep.point = point;
    JetLayoutPtr L = common_layout(quantities);
    if (!L) return rep;
    rep.params = L->names();
    rep.matrix = linear_rows(quantities, L->nvars());
    Echelon<Rational> e = row_reduce(rep.matrix);
    rep.rank = e.rank();
    for (int p : e.pivots) rep.pivots.push_back(rep.params[p]);
    return rep;
}

int leading_rank(const std::vector<RJet>& quantities) {
    JetLayoutPtr L = common_layout(quantities);
    if (!L) return 0;
    int k = 0;
    for (std::size_t n = 1; n <= quantities.size(); ++n) {
        std::vector<RJet> head(quantities.begin(), quantities.begin() + static_cast<long>(n));
        if (exact_rank(linear_rows(head, L->nvars())) != static_cast<int>(n)) break;
        k = static_cast<int>(n);
    }
    return k;
}

Reduction reduce_quantities(const std::vector<RJet>& quantities, const std::vector<std::string>& pivots) {
    Reduction red;
    red.k = static_cast<int>(pivots.size());
    red.pivots = pivots;
    const int k = red.k;
    if (k > static_cast<int>(quantities.size())) throw BadPivots("more pivots than quantities");
    if (k == 0) {
        red.reduced = quantities;
        red.combos.assign(quantities.size(), {});
        return red;
    }
    JetLayoutPtr L = common_layout(quantities);
    if (!L) throw BadPivots("quantities carry no jet parameters");
    const int n = L->nvars();

    std::vector<int> piv;
    for (const auto& p : pivots) piv.push_back(index_of(*L, p));
    MatX<Rational> lin = linear_rows(quantities, n);
    MatX<Rational> head = lin.topRows(k);

    // A p + B r = 0 for the linear parts of L_1..L_k, A on the pivot columns.
    MatX<Rational> A(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) A(i, j) = head(i, piv[j]);
    auto Ainv = exact_inverse(A);
    if (!Ainv) throw BadPivots("linear parts of the leading quantities are singular on the pivot parameters");

    // Images of each layout variable when u_1..u_k = 0: pivots become
    // -A^{-1} B r, the remaining parameters stay.
    std::vector<RJet> images;
    for (int v = 0; v < n; ++v) images.push_back(RJet::variable(L, v));
    for (int j = 0; j < k; ++j) {
        RJet img(L, Rational(0));
        for (int v = 0; v < n; ++v) {
            if (std::find(piv.begin(), piv.end(), v) != piv.end()) continue;
            Rational c(0);
            for (int i = 0; i < k; ++i) c -= (*Ainv)(j, i) * head(i, v);
            if (!c.is_zero()) img.coeff(1 + v) = c;
        }
        images[piv[j]] = img;
    }

    for (std::size_t i = static_cast<std::size_t>(k); i < quantities.size(); ++i) {
        std::vector<Rational> target(n);
        for (int v = 0; v < n; ++v) target[v] = lin(static_cast<Eigen::Index>(i), v);
        auto a = row_combination(head, target);
        if (!a) throw BadPivots("linear part of L_" + std::to_string(i + 1) + " is independent of the leading ones");
        RJet bar = quantities[i];
        for (int j = 0; j < k; ++j)
            if (!(*a)[j].is_zero()) bar -= RJet((*a)[j]) * quantities[j];
        red.combos.push_back(*a);
        red.reduced.push_back(bar.compose(images));
    }
    return red;
}

RJet homogeneous_part(const RJet& q, int degree) {
    if (!q.layout()) {
        if (degree > 0) throw TruncationTooLow("constant quantity has no jet degree");
        return q;
    }
    return q.homogeneous(degree);
}

std::string LinePolynomial::str(const std::string& var) const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : coeffs) {
        std::string cs = c.str();
        bool neg = cs[0] == '-';
        if (neg) cs.erase(0, 1);
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        out += cs;
        if (m > 0) out += "*" + var + (m > 1 ? "^" + std::to_string(m) : "");
    }
    return out;
}

LinePolynomial evaluate_on_line(const RJet& q, const std::map<std::string, Rational>& direction) {
    LinePolynomial lp;
    if (!q.layout()) {
        if (!q.constant().is_zero()) lp.coeffs[0] = q.constant();
        return lp;
    }
    const JetLayout& L = *q.layout();
    std::vector<Rational> dir = point_vector(L, direction);
    for (int m = 0; m <= L.degree(); ++m) {
        Rational v = q.homogeneous(m).evaluate(dir);
        if (!v.is_zero()) lp.coeffs[m] = v;
    }
    return lp;
}

int gradient_rank(const std::vector<RJet>& hs, const std::map<std::string, Rational>& point,
                  const std::vector<std::string>& vars) {
    JetLayoutPtr L = common_layout(hs);
    if (!L || hs.empty()) return 0;
    std::vector<Rational> x = point_vector(*L, point);
    MatX<Rational> g(static_cast<Eigen::Index>(hs.size()), static_cast<Eigen::Index>(vars.size()));
    for (std::size_t r = 0; r < hs.size(); ++r) {
        for (std::size_t c = 0; c < vars.size(); ++c) {
            int v = index_of(*L, vars[c]);
            Rational s(0);
            for (int idx = 0; idx < hs[r].size(); ++idx) {
                const Rational& coef = hs[r].coeff(idx);
                const auto& e = L->exponent(idx);
                if (coef.is_zero() || e[v] == 0) continue;
                Rational t = coef * Rational(e[v]);
                for (int i = 0; i < L->nvars(); ++i) {
                    int p = e[i] - (i == v ? 1 : 0);
                    for (int q = 0; q < p; ++q) t *= x[i];
                }
                s += t;
            }
            g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = s;
        }
    }
    return exact_rank(g);
}

std::vector<RJet> jet_focus_quantities(const SystemDef& def, const std::vector<std::string>& jet_params,
                                       const std::map<std::string, Rational>& base, int degree, int order,
                                       const Assignment& overrides) {
    JetExpansion jx{JetLayout::make(jet_params, degree), base};
    auto f = build_jet(def, jx, overrides);
    auto nf = as_normal_form(f);
    return focus_quantities(nf, order).L;
}

CyclicityReport cyclicity_bound(const CyclicityConfig& cfg) {
    CyclicityReport rep;
    rep.mode = cfg.mode;
    rep.system = cfg.system;
    rep.line = cfg.line;
    SystemDef def = load_system(cfg.system, cfg.overrides);
    rep.trace_bonus = def.trace_param.has_value();

    const int rank_order = cfg.rank_order > 0 ? cfg.rank_order : cfg.order;
    rep.rank_order = rank_order;
    std::vector<RJet> lin = jet_focus_quantities(def, cfg.jet_params, cfg.base, 1, rank_order, cfg.overrides);
    for (std::size_t i = 0; i < lin.size(); ++i)
        if (!lin[i].constant().is_zero())
            throw DomainError("base point is not a center: L_" + std::to_string(i + 1) + " = " +
                              lin[i].constant().str());
    rep.jacobian = jacobian_rank(lin, cfg.base);
    rep.k = leading_rank(lin);
    if (rep.k != rep.jacobian.rank)
        rep.notes.push_back("leading quantities do not span the linear parts; higher-order analysis skipped");

    if (!cfg.pivots.empty() && rep.k == rep.jacobian.rank) {
        if (static_cast<int>(cfg.pivots.size()) != rep.k) throw BadPivots("number of pivots differs from the rank");
        if (cfg.jet_degree < 2) throw TruncationTooLow("higher-order analysis needs jets of degree >= 2");
        for (const auto& [name, v] : cfg.line) {
            (void)v;
            if (std::find(cfg.pivots.begin(), cfg.pivots.end(), name) != cfg.pivots.end())
                throw UsageError("line assigns pivot parameter " + name);
        }
        std::vector<RJet> quad =
            jet_focus_quantities(def, cfg.jet_params, cfg.base, cfg.jet_degree, cfg.order, cfg.overrides);
        rep.reduction = reduce_quantities(quad, cfg.pivots);
        std::vector<std::string> rest;
        for (const auto& p : cfg.jet_params)
            if (std::find(cfg.pivots.begin(), cfg.pivots.end(), p) == cfg.pivots.end()) rest.push_back(p);

        std::vector<RJet> hs;
        for (const auto& r : rep.reduction.reduced) hs.push_back(homogeneous_part(r, 2));
        for (const auto& h : hs) rep.h_on_line.push_back(evaluate_on_line(h, cfg.line));

        // l = index of the first h that does not vanish on the line, provided
        // the vanishing ones meet transversally there.
        int first = -1;
        for (std::size_t i = 0; i < hs.size(); ++i)
            if (!rep.h_on_line[i].is_zero()) {
                first = static_cast<int>(i);
                break;
            }
        if (first >= 0) {
            std::vector<RJet> zeros(hs.begin(), hs.begin() + first);
            rep.transversal = gradient_rank(zeros, cfg.line, rest) == first;
            if (rep.transversal) rep.l = first + 1;
            else rep.notes.push_back("hypersurfaces h_i = 0 are not transversal along the line");
        } else {
            rep.notes.push_back("every h_i vanishes on the line");
        }
        std::vector<std::string> unassigned;
        for (const auto& p : rest)
            if (!cfg.line.count(p)) unassigned.push_back(p);
        if (!unassigned.empty()) {
            std::string s = "line leaves";
            for (const auto& p : unassigned) s += " " + p;
            rep.notes.push_back(s + " unassigned; they are set to 0");
        }
    }
    rep.total = rep.k + rep.l + (rep.trace_bonus && rep.k == 0 ? 1 : 0);
    return rep;
}

CyclicityConfig teo4_config(const Rational& d0) {
    CyclicityConfig c;
    c.mode = "teo4";
    c.system = "e1-normal-trace";
    c.jet_params = {"k", "c", "d"};
    c.base = {{"k", Rational(1)}, {"c", Rational(0)}, {"d", d0}};
    c.order = 3;
    c.jet_degree = 1;
    return c;
}

CyclicityConfig teo5_config() {
    CyclicityConfig c;
    c.mode = "teo5";
    c.system = "e1-center-perturbed";
    c.jet_params = perturbation_names();
    c.order = 5;
    c.jet_degree = 2;
    c.rank_order = 9;
    c.pivots = {"a011", "a101", "b011"};
    c.line = {{"b200", Rational(1)}, {"c101", Rational(-252889) / Rational(66891)}};
    return c;
}

CyclicityConfig parse_cyclicity_config(const Json& doc) {
    if (!doc.is_object()) throw SchemaError("cyclicity config must be an object");
    CyclicityConfig c;
    c.mode = "custom";
    if (!doc.contains("system") || !doc["system"].is_string()) throw SchemaError("config needs a system name");
    c.system = doc["system"].get<std::string>();
    if (doc.contains("params")) c.overrides = parse_assignment(doc["params"].get<std::string>());
    if (!doc.contains("jet_params") || !doc["jet_params"].is_array()) throw SchemaError("config needs jet_params");
    c.jet_params = doc["jet_params"].get<std::vector<std::string>>();
    if (doc.contains("base")) c.base = parse_rational_map(doc["base"]);
    c.order = doc.value("order", 3);
    c.jet_degree = doc.value("jet_degree", 1);
    c.rank_order = doc.value("rank_order", 0);
    if (doc.contains("pivots")) c.pivots = doc["pivots"].get<std::vector<std::string>>();
    if (doc.contains("line")) c.line = parse_rational_map(doc["line"]);
    if (c.order < 1 || c.jet_degree < 1) throw SchemaError("order and jet_degree must be positive");
    return c;
}

}  // namespace hopfcm
