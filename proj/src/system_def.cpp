#include "hopfcm/system_def.hpp"

#include <algorithm>
#include <sstream>

namespace hopfcm {

namespace {

std::string value_text(const Json& v, const std::string& name) {
    if (v.is_null()) return {};
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_float()) return Rational::from_double(v.get<double>()).str();
    throw SchemaError("parameter " + name + " must be a string, number or null");
}

void check_expr(const Expr& e, const SystemDef& def, const std::string& where) {
    if (def.backend == Backend::Exact && e.uses_sqrt())
        throw SchemaError(where + ": sqrt is not accepted by the exact backend");
    for (const auto& s : e.symbols())
        if (!def.param_values.count(s)) throw SchemaError(where + ": unknown parameter " + s);
}

}  // namespace

SystemDef parse_system(const Json& doc) {
    if (!doc.is_object()) throw SchemaError("system document must be an object");
    SystemDef def;
    def.name = doc.value("name", std::string("custom"));
    def.tag = doc.value("tag", std::string());
    def.description = doc.value("description", std::string());

    std::string backend = doc.value("backend", std::string("exact"));
    if (backend == "exact") def.backend = Backend::Exact;
    else if (backend == "float") def.backend = Backend::Float;
    else throw SchemaError("backend must be \"exact\" or \"float\"");

    if (doc.contains("params")) {
        const Json& p = doc.at("params");
        if (!p.is_object()) throw SchemaError("params must be an object");
        for (auto it = p.begin(); it != p.end(); ++it) {
            const std::string& name = it.key();
            if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
                throw SchemaError("bad parameter name \"" + name + "\"");
            def.param_names.push_back(name);
            std::string v = value_text(it.value(), name);
            def.param_values[name] = v.empty() ? std::nullopt : std::optional<std::string>(v);
        }
    }
    for (const auto& [name, v] : def.param_values) {
        if (!v) continue;
        Expr e = Expr::parse(*v);
        if (!e.symbols().empty()) throw SchemaError("value of " + name + " must be a constant expression");
        if (def.backend == Backend::Exact && e.uses_sqrt())
            throw SchemaError("value of " + name + ": sqrt is not accepted by the exact backend");
    }

    if (doc.contains("state_vars")) {
        const Json& sv = doc.at("state_vars");
        if (!sv.is_array() || sv.size() != 3) throw SchemaError("state_vars must list three names");
        for (int i = 0; i < 3; ++i) def.state_vars[i] = sv.at(i).get<std::string>();
    }

    if (!doc.contains("equations")) throw SchemaError("missing equations");
    const Json& eqs = doc.at("equations");
    if (!eqs.is_array() || eqs.size() != 3) throw SchemaError("equations must be an array of three term lists");
    for (int i = 0; i < 3; ++i) {
        const Json& terms = eqs.at(i);
        if (!terms.is_array()) throw SchemaError("equation " + std::to_string(i) + " must be an array");
        for (const Json& t : terms) {
            if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
                throw SchemaError("term needs \"exp\" and \"coeff\"");
            const Json& e = t.at("exp");
            if (!e.is_array() || e.size() != 3) throw SchemaError("malformed monomial: exp needs three entries");
            SystemTerm term;
            for (int k = 0; k < 3; ++k) {
                if (!e.at(k).is_number_integer() || e.at(k).get<int>() < 0)
                    throw SchemaError("malformed monomial: exponents must be nonnegative integers");
                term.exp[k] = e.at(k).get<int>();
            }
            if (t.at("coeff").is_string()) term.coeff = t.at("coeff").get<std::string>();
            else term.coeff = value_text(t.at("coeff"), "coeff");
            term.expr = Expr::parse(term.coeff);
            check_expr(term.expr, def, "equation " + std::to_string(i));
            def.equations[i].push_back(std::move(term));
        }
    }

    if (doc.contains("trace_param")) def.trace_param = doc.at("trace_param").get<std::string>();
    if (doc.contains("small_params"))
        def.small_params = doc.at("small_params").get<std::vector<std::string>>();
    return def;
}

Json to_json(const SystemDef& def) {
    Json doc;
    doc["name"] = def.name;
    if (!def.tag.empty()) doc["tag"] = def.tag;
    if (!def.description.empty()) doc["description"] = def.description;
    doc["backend"] = def.backend == Backend::Exact ? "exact" : "float";
    Json params = Json::object();
    for (const auto& name : def.param_names) {
        const auto& v = def.param_values.at(name);
        params[name] = v ? Json(*v) : Json(nullptr);
    }
    doc["params"] = params;
    doc["state_vars"] = def.state_vars;
    Json eqs = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json terms = Json::array();
        for (const auto& t : def.equations[i]) terms.push_back({{"exp", t.exp}, {"coeff", t.coeff}});
        eqs.push_back(terms);
    }
    doc["equations"] = eqs;
    if (def.trace_param) doc["trace_param"] = *def.trace_param;
    if (!def.small_params.empty()) doc["small_params"] = def.small_params;
    return doc;
}

Assignment parse_assignment(const std::string& text) {
    Assignment a;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("expected name=value, got \"" + item + "\"");
        a[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return a;
}

std::map<std::string, std::optional<std::string>> effective_values(const SystemDef& def,
                                                                   const Assignment& overrides) {
    auto values = def.param_values;
    for (const auto& [name, v] : overrides) {
        if (!values.count(name)) throw UsageError("system has no parameter " + name);
        values[name] = v;
    }
    return values;
}

namespace {

Rational constant_value(const std::string& text) {
    Expr e = Expr::parse(text);
    if (e.uses_sqrt()) throw SchemaError("exact value expected for " + text);
    return e.evaluate<Rational>([](const std::string& s) -> Rational {
        throw SchemaError("parameter values cannot reference " + s);
    });
}

}  // namespace

VectorField3<ParamExpr> build_exact(const SystemDef& def, const Assignment& overrides) {
    auto values = effective_values(def, overrides);
    std::vector<std::string> symbolic;
    std::map<std::string, ParamExpr> env;
    for (const auto& name : def.param_names) {
        const auto& v = values.at(name);
        if (v) {
            env[name] = ParamExpr(constant_value(*v));
        } else {
            if (static_cast<int>(symbolic.size()) >= kMaxParams)
                throw UsageError("too many symbolic parameters for the exact backend");
            env[name] = ParamExpr::variable(static_cast<int>(symbolic.size()));
            symbolic.push_back(name);
        }
    }
    for (int i = 0; i < 3; ++i)
        for (const auto& t : def.equations[i])
            if (t.expr.uses_sqrt()) throw SchemaError("sqrt coefficient under the exact backend");
    auto f = build_field<ParamExpr>(def, [&](const std::string& s) { return env.at(s); });
    f.params = symbolic;
    return f;
}

VectorField3<Rational> build_rational(const SystemDef& def, const Assignment& overrides) {
    auto values = effective_values(def, overrides);
    std::map<std::string, Rational> env;
    for (const auto& [name, v] : values) {
        if (!v) throw UsageError("parameter " + name + " needs a rational value");
        env[name] = constant_value(*v);
    }
    return build_field<Rational>(def, [&](const std::string& s) { return env.at(s); });
}

VectorField3<RJet> build_jet(const SystemDef& def, const JetExpansion& jx, const Assignment& overrides) {
    auto values = effective_values(def, overrides);
    std::map<std::string, RJet> env;
    for (const auto& [name, v] : values) {
        int idx = jx.layout->variable_index(name);
        if (idx >= 0) {
            auto it = jx.base.find(name);
            Rational b = it == jx.base.end() ? Rational(0) : it->second;
            env[name] = RJet::variable(jx.layout, idx, b);
        } else {
            if (!v) throw UsageError("parameter " + name + " needs a value or a jet expansion");
            env[name] = RJet(constant_value(*v));
        }
    }
    for (const auto& n : jx.layout->names())
        if (!values.count(n)) throw UsageError("jet variable " + n + " is not a system parameter");
    auto f = build_field<RJet>(def, [&](const std::string& s) { return env.at(s); });
    f.params = jx.layout->names();
    return f;
}

}  // namespace hopfcm
