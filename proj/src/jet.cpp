#include "hopfcm/jet.hpp"
#include "hopfcm/format.hpp"

#include <algorithm>
#include <numeric>

namespace hopfcm {

namespace {

void enumerate(int n, int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.push_back(e);
        enumerate(n, remaining - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::shared_ptr<const JetLayout> JetLayout::make(std::vector<std::string> names, int degree) {
    if (degree < 0) throw std::invalid_argument("negative jet degree");
    auto L = std::make_shared<JetLayout>();
    L->names_ = std::move(names);
    L->degree_ = degree;
    const int n = L->nvars();
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    enumerate(n, degree, cur, all);
    auto deg = [](const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); };
    std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
        int da = deg(a), db = deg(b);
        if (da != db) return da < db;
        return a > b;
    });
    L->exps_ = std::move(all);
    for (std::size_t k = 0; k < L->exps_.size(); ++k) {
        L->deg_.push_back(deg(L->exps_[k]));
        L->index_[L->exps_[k]] = static_cast<int>(k);
    }
    const std::size_t N = L->exps_.size();
    L->mul_.assign(N * N, -1);
    std::vector<int> e(n);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            if (L->deg_[i] + L->deg_[j] > degree) continue;
            for (int v = 0; v < n; ++v) e[v] = L->exps_[i][v] + L->exps_[j][v];
            L->mul_[i * N + j] = L->index_.at(e);
        }
    }
    return L;
}

int JetLayout::index_of(const std::vector<int>& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? -1 : it->second;
}

int JetLayout::variable_index(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

std::string to_text(const RJet& x) {
    const JetLayoutPtr& L = x.layout();
    if (!L) return x.constant().str();
    std::string out;
    for (int k = 0; k < x.size(); ++k) {
        const Rational& c = x.coeff(k);
        if (c.is_zero()) continue;
        std::string mono;
        const auto& e = L->exponent(k);
        for (int i = 0; i < L->nvars(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += L->names()[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = c.str();
        bool neg = cs[0] == '-';
        if (neg) cs.erase(0, 1);
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (mono.empty()) out += cs;
        else if (cs == "1") out += mono;
        else out += cs + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

}  // namespace hopfcm
