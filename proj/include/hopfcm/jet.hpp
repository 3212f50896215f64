#pragma once

#include "hopfcm/errors.hpp"
#include "hopfcm/rational.hpp"
#include "hopfcm/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <type_traits>
#include <vector>

namespace hopfcm {

// Monomials of total degree <= D in n small parameters, graded and then
// lexicographic, with a precomputed product table.
class JetLayout {
public:
    static std::shared_ptr<const JetLayout> make(std::vector<std::string> names, int degree);

    int nvars() const { return static_cast<int>(names_.size()); }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(exps_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& exponent(int idx) const { return exps_[idx]; }
    int total_degree(int idx) const { return deg_[idx]; }
    // Index of the product monomial or -1 if its degree exceeds D.
    int product(int i, int j) const { return mul_[static_cast<std::size_t>(i) * exps_.size() + j]; }
    int index_of(const std::vector<int>& e) const;
    int variable_index(const std::string& name) const;

private:
    std::vector<std::string> names_;
    int degree_ = 0;
    std::vector<std::vector<int>> exps_;
    std::vector<int> deg_;
    std::map<std::vector<int>, int> index_;
    std::vector<int> mul_;
};

using JetLayoutPtr = std::shared_ptr<const JetLayout>;

// Truncated polynomial in the small parameters with coefficients in T.
// A jet with a null layout is a plain constant and mixes with any layout.
template <class T>
class Jet {
public:
    Jet() : c_(1, T(0)) {}
    Jet(int v) : c_(1, T(v)) {}        // NOLINT(implicit)
    Jet(const T& v) : c_(1, v) {}      // NOLINT(implicit)
    Jet(JetLayoutPtr layout, const T& constant) : layout_(std::move(layout)) {
        c_.assign(layout_->size(), T(0));
        c_[0] = constant;
    }

    // base + eps_i, the standard way to expand a parameter at a point.
    static Jet variable(JetLayoutPtr layout, int var, const T& base = T(0)) {
        Jet j(layout, base);
        j.c_[1 + var] = T(1);
        return j;
    }

    const JetLayoutPtr& layout() const { return layout_; }
    int size() const { return static_cast<int>(c_.size()); }
    const T& coeff(int idx) const { return c_[idx]; }
    T& coeff(int idx) { return c_[idx]; }
    const T& constant() const { return c_[0]; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!scalar_is_zero(v)) return false;
        return true;
    }

    Jet& operator+=(const Jet& o) {
        promote(o.layout_);
        if (!o.layout_) {
            c_[0] += o.c_[0];
        } else {
            for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        }
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        promote(o.layout_);
        if (!o.layout_) {
            c_[0] -= o.c_[0];
        } else {
            for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        }
        return *this;
    }
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(Jet a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }

    friend Jet operator*(const Jet& a, const Jet& b) {
        if (!a.layout_ || !b.layout_) {
            const Jet& s = a.layout_ ? b : a;
            Jet r = a.layout_ ? a : b;
            const T& f = s.c_[0];
            for (auto& v : r.c_) v = v * f;
            return r;
        }
        check_same(a.layout_, b.layout_);
        const JetLayout& L = *a.layout_;
        Jet r(a.layout_, T(0));
        std::vector<int> nb;
        nb.reserve(b.c_.size());
        for (int j = 0; j < b.size(); ++j)
            if (!scalar_is_zero(b.c_[j])) nb.push_back(j);
        for (int i = 0; i < a.size(); ++i) {
            if (scalar_is_zero(a.c_[i])) continue;
            for (int j : nb) {
                int k = L.product(i, j);
                if (k >= 0) accumulate(r.c_[k], a.c_[i], b.c_[j]);
            }
        }
        return r;
    }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }

    // Inverse via the geometric series; the constant term must be a unit.
    Jet inverse() const {
        if (scalar_is_zero(c_[0])) throw DivisionByZero("jet with zero constant term");
        T inv0 = T(1) / c_[0];
        if (!layout_) return Jet(inv0);
        Jet e = *this * Jet(inv0);
        e.c_[0] = T(0);
        Jet s(layout_, T(1));
        for (int k = 0; k < layout_->degree(); ++k) {
            Jet t = e * s;
            s = Jet(layout_, T(1)) - t;
        }
        return s * Jet(inv0);
    }
    friend Jet operator/(const Jet& a, const Jet& b) {
        if (!b.layout_) {
            if (scalar_is_zero(b.c_[0])) throw DivisionByZero("jet division by zero");
            Jet r = a;
            for (auto& v : r.c_) v = v / b.c_[0];
            return r;
        }
        return a * b.inverse();
    }
    Jet& operator/=(const Jet& o) { return *this = *this / o; }

    friend bool operator==(const Jet& a, const Jet& b) {
        Jet d = a - b;
        return d.is_zero();
    }
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }
    friend bool is_zero(const Jet& a) { return a.is_zero(); }

    // Terms of total degree m, as an index into the layout.
    Jet homogeneous(int m) const {
        if (!layout_) return m == 0 ? *this : Jet();
        if (m > layout_->degree()) throw TruncationTooLow("requested degree exceeds the jet degree");
        Jet r(layout_, T(0));
        for (int k = 0; k < size(); ++k)
            if (layout_->total_degree(k) == m) r.c_[k] = c_[k];
        return r;
    }
    std::vector<T> linear_part() const {
        std::vector<T> v;
        if (!layout_) return v;
        for (int i = 0; i < layout_->nvars(); ++i) v.push_back(c_[1 + i]);
        return v;
    }

    T evaluate(const std::vector<T>& point) const {
        if (!layout_) return c_[0];
        T s(0);
        for (int k = 0; k < size(); ++k) {
            if (scalar_is_zero(c_[k])) continue;
            T t = c_[k];
            const auto& e = layout_->exponent(k);
            for (int i = 0; i < layout_->nvars(); ++i)
                for (int p = 0; p < e[i]; ++p) t = t * point[i];
            s += t;
        }
        return s;
    }

    // Substitute variable i by images[i]; images must have no constant term
    // so the truncation commutes with composition.
    Jet compose(const std::vector<Jet>& images) const {
        if (!layout_) return *this;
        for (const auto& im : images)
            if (!scalar_is_zero(im.constant())) throw std::invalid_argument("jet image with constant term");
        Jet r(layout_, T(0));
        for (int k = 0; k < size(); ++k) {
            if (scalar_is_zero(c_[k])) continue;
            Jet t(layout_, c_[k]);
            const auto& e = layout_->exponent(k);
            for (int i = 0; i < layout_->nvars(); ++i)
                for (int p = 0; p < e[i]; ++p) t = t * images[i];
            r += t;
        }
        return r;
    }

private:
    static void accumulate(T& r, const T& a, const T& b) {
        if constexpr (std::is_same_v<T, Rational>) {
            addmul(r, a, b);
        } else {
            r += a * b;
        }
    }
    static void check_same(const JetLayoutPtr& a, const JetLayoutPtr& b) {
        if (a != b) throw std::invalid_argument("jets over different layouts");
    }
    void promote(const JetLayoutPtr& other) {
        if (!other) return;
        if (!layout_) {
            T v = c_[0];
            layout_ = other;
            c_.assign(layout_->size(), T(0));
            c_[0] = v;
            return;
        }
        check_same(layout_, other);
    }

    JetLayoutPtr layout_;
    std::vector<T> c_;
};

using RJet = Jet<Rational>;

}  // namespace hopfcm
