#pragma once

#include "hopfcm/eigen_support.hpp"
#include "hopfcm/jet.hpp"
#include "hopfcm/system_def.hpp"

#include <map>
#include <string>
#include <vector>

namespace hopfcm {

// Linear parts of jet-valued quantities at the jet base point.
struct JacobianReport {
    std::vector<std::string> params;
    std::map<std::string, Rational> point;
    MatX<Rational> matrix;            // rows: quantities, columns: params
    int rank = 0;
    std::vector<std::string> pivots;  // pivot parameters of the row space
};

JacobianReport jacobian_rank(const std::vector<RJet>& quantities, const std::map<std::string, Rational>& point = {});

// Largest k such that the first k quantities have independent linear parts.
int leading_rank(const std::vector<RJet>& quantities);

// Quantities after the parameter change L_j = u_j (j <= k, u_j replacing the
// pivot parameters) and the two subtraction steps. `combos[i]` holds the
// a^i_j with linpart(L_i) = sum_j a^i_j linpart(L_j); `reduced[i]` is the
// reduced L_{k+1+i} with u_1..u_k set to zero, expressed in the remaining
// parameters. Pivot slots in the layout stay zero.
struct Reduction {
    int k = 0;
    std::vector<std::string> pivots;
    std::vector<std::vector<Rational>> combos;
    std::vector<RJet> reduced;
};

Reduction reduce_quantities(const std::vector<RJet>& quantities, const std::vector<std::string>& pivots);

// Degree-m homogeneous part; TruncationTooLow when m exceeds the jet degree.
RJet homogeneous_part(const RJet& q, int degree);

// q restricted to the line p = t * direction, as coefficients of t^m.
struct LinePolynomial {
    std::map<int, Rational> coeffs;
    bool is_zero() const { return coeffs.empty(); }
    std::string str(const std::string& var = "t") const;
};

LinePolynomial evaluate_on_line(const RJet& q, const std::map<std::string, Rational>& direction);

// Rank of the gradients of `hs` at the point, with respect to `vars`.
int gradient_rank(const std::vector<RJet>& hs, const std::map<std::string, Rational>& point,
                  const std::vector<std::string>& vars);

struct CyclicityConfig {
    std::string mode = "custom";
    std::string system;
    Assignment overrides;
    std::vector<std::string> jet_params;
    std::map<std::string, Rational> base;
    int order = 3;       // focus quantities used for the h analysis
    int jet_degree = 1;
    int rank_order = 0;  // quantities for the rank test (degree-1 jets); 0 = order
    std::vector<std::string> pivots;
    std::map<std::string, Rational> line;
};

struct CyclicityReport {
    std::string mode;
    std::string system;
    int k = 0;
    int l = 0;
    bool trace_bonus = false;
    int total = 0;
    JacobianReport jacobian;
    int rank_order = 0;
    Reduction reduction;
    std::map<std::string, Rational> line;
    std::vector<LinePolynomial> h_on_line;  // h_{k+1}, h_{k+2}, ...
    bool transversal = false;
    std::vector<std::string> notes;
};

// Focus quantities of a catalog or file system with the named parameters
// expanded as jets about `base`.
std::vector<RJet> jet_focus_quantities(const SystemDef& def, const std::vector<std::string>& jet_params,
                                       const std::map<std::string, Rational>& base, int degree, int order,
                                       const Assignment& overrides = {});

CyclicityReport cyclicity_bound(const CyclicityConfig& cfg);

// (k, c, d) about (1, 0, d0) on e1-normal-trace.
CyclicityConfig teo4_config(const Rational& d0 = Rational(1));
// 18 quadratic perturbations of e1-center-perturbed, pivots (a011, a101, b011).
CyclicityConfig teo5_config();
CyclicityConfig parse_cyclicity_config(const Json& doc);

}  // namespace hopfcm
