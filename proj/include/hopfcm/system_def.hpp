#pragma once

#include "hopfcm/expr.hpp"
#include "hopfcm/jet.hpp"
#include "hopfcm/param_expr.hpp"
#include "hopfcm/vector_field.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hopfcm {

using Json = nlohmann::ordered_json;

struct SystemTerm {
    Mono3 exp{0, 0, 0};
    std::string coeff;
    Expr expr;
};

// Parsed system-definition document:
// { "backend": "exact"|"float", "params": {name: value-or-null},
//   "state_vars": [s1,s2,s3],
//   "equations": [[{"exp":[i,j,k], "coeff": "<expr>"}, ...] x 3] }
struct SystemDef {
    std::string name;
    Backend backend = Backend::Exact;
    std::vector<std::string> param_names;
    std::map<std::string, std::optional<std::string>> param_values;
    std::array<std::string, 3> state_vars{"x", "y", "z"};
    std::array<std::vector<SystemTerm>, 3> equations;

    // Catalog metadata, optional in documents.
    std::string tag;
    std::string description;
    std::optional<std::string> trace_param;
    std::vector<std::string> small_params;
};

// Parameter values supplied on top of the document, e.g. from the CLI.
using Assignment = std::map<std::string, std::string>;

SystemDef parse_system(const Json& doc);
Json to_json(const SystemDef& def);
// "a=1,b=-1/2" -> {a:"1", b:"-1/2"}
Assignment parse_assignment(const std::string& text);

// Effective value text of each parameter after applying overrides; nullopt
// for parameters left symbolic.
std::map<std::string, std::optional<std::string>> effective_values(const SystemDef& def,
                                                                   const Assignment& overrides);

template <class S>
VectorField3<S> build_field(const SystemDef& def, const std::function<S(const std::string&)>& lookup) {
    VectorField3<S> f;
    f.vars = def.state_vars;
    for (int i = 0; i < 3; ++i)
        for (const auto& t : def.equations[i]) f[i].add_term(t.exp, t.expr.template evaluate<S>(lookup));
    return f;
}

// Exact field over Q(symbolic params); assigned parameters are substituted.
VectorField3<ParamExpr> build_exact(const SystemDef& def, const Assignment& overrides = {});
// Exact field with every parameter assigned to a rational value.
VectorField3<Rational> build_rational(const SystemDef& def, const Assignment& overrides = {});

// Every parameter must carry a value; sqrt allowed.
template <class Real>
VectorField3<Real> build_float(const SystemDef& def, const Assignment& overrides = {}) {
    auto values = effective_values(def, overrides);
    std::map<std::string, Real> num;
    for (const auto& [name, v] : values) {
        if (!v) throw UsageError("parameter " + name + " needs a value for the float backend");
        num[name] = Expr::parse(*v).template evaluate<Real>([](const std::string& s) -> Real {
            throw SchemaError("parameter values cannot reference " + s);
        });
    }
    return build_field<Real>(def, [&](const std::string& s) { return num.at(s); });
}

// Parameters named in the layout become base + eps_i; all others need a
// rational value.
struct JetExpansion {
    JetLayoutPtr layout;
    std::map<std::string, Rational> base;
};
VectorField3<RJet> build_jet(const SystemDef& def, const JetExpansion& jx, const Assignment& overrides = {});

}  // namespace hopfcm
