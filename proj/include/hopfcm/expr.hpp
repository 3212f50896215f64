#pragma once

#include "hopfcm/errors.hpp"
#include "hopfcm/rational.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

namespace hopfcm {

// Parsed coefficient expression:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | '+' unary | power
//   power  := atom ('^' integer)?
//   atom   := number | identifier | 'sqrt' '(' expr ')' | '(' expr ')'
class Expr {
public:
    enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Neg, Pow, Sqrt };

    static Expr parse(const std::string& text);

    Kind kind() const { return node_->kind; }
    bool uses_sqrt() const;
    std::set<std::string> symbols() const;
    const std::string& text() const { return text_; }

    // Evaluate with `lookup` resolving identifiers. sqrt is only available
    // for floating point scalars.
    template <class S>
    S evaluate(const std::function<S(const std::string&)>& lookup) const {
        return eval<S>(*node_, lookup);
    }

private:
    struct Node {
        Kind kind;
        Rational value;
        std::string name;
        unsigned exponent = 0;
        std::vector<std::shared_ptr<const Node>> args;
    };
    friend class ExprParser;

    template <class S>
    static S eval(const Node& n, const std::function<S(const std::string&)>& lookup) {
        switch (n.kind) {
            case Kind::Number:
                if constexpr (std::is_floating_point_v<S>) {
                    if constexpr (std::is_same_v<S, long double>) return n.value.to_long_double();
                    else return static_cast<S>(n.value.to_double());
                } else {
                    return S(n.value);
                }
            case Kind::Symbol: return lookup(n.name);
            case Kind::Add: return eval<S>(*n.args[0], lookup) + eval<S>(*n.args[1], lookup);
            case Kind::Sub: return eval<S>(*n.args[0], lookup) - eval<S>(*n.args[1], lookup);
            case Kind::Mul: return eval<S>(*n.args[0], lookup) * eval<S>(*n.args[1], lookup);
            case Kind::Div: return eval<S>(*n.args[0], lookup) / eval<S>(*n.args[1], lookup);
            case Kind::Neg: return -eval<S>(*n.args[0], lookup);
            case Kind::Pow: {
                S base = eval<S>(*n.args[0], lookup);
                S r(1);
                for (unsigned k = 0; k < n.exponent; ++k) r = r * base;
                return r;
            }
            case Kind::Sqrt:
                if constexpr (std::is_floating_point_v<S>) {
                    S v = eval<S>(*n.args[0], lookup);
                    if (v < 0) throw DomainError("sqrt of a negative value");
                    return std::sqrt(v);
                } else {
                    throw SchemaError("sqrt is only accepted by the float backend");
                }
        }
        throw std::logic_error("unreachable");
    }

    std::shared_ptr<const Node> node_;
    std::string text_;
};

}  // namespace hopfcm
