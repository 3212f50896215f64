#include "hopfcm/expr.hpp"

#include <cctype>

namespace hopfcm {

class ExprParser {
public:
    using NodePtr = std::shared_ptr<const Expr::Node>;

    explicit ExprParser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        NodePtr n = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw SchemaError("cannot parse \"" + s_ + "\": " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    static NodePtr make(Expr::Kind k, std::vector<NodePtr> args) {
        auto n = std::make_shared<Expr::Node>();
        n->kind = k;
        n->args = std::move(args);
        return n;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        while (true) {
            if (accept('+')) lhs = make(Expr::Kind::Add, {lhs, term()});
            else if (accept('-')) lhs = make(Expr::Kind::Sub, {lhs, term()});
            else return lhs;
        }
    }
    NodePtr term() {
        NodePtr lhs = unary();
        while (true) {
            if (accept('*')) lhs = make(Expr::Kind::Mul, {lhs, unary()});
            else if (accept('/')) lhs = make(Expr::Kind::Div, {lhs, unary()});
            else return lhs;
        }
    }
    NodePtr unary() {
        if (accept('-')) return make(Expr::Kind::Neg, {unary()});
        if (accept('+')) return unary();
        return power();
    }
    NodePtr power() {
        NodePtr base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a nonnegative integer");
            auto n = std::make_shared<Expr::Node>();
            n->kind = Expr::Kind::Pow;
            n->exponent = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
            n->args = {base};
            return n;
        }
        return base;
    }
    NodePtr atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr n = expr();
            if (!accept(')')) fail("missing ')'");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
                ++pos_;
            auto n = std::make_shared<Expr::Node>();
            n->kind = Expr::Kind::Number;
            try {
                n->value = Rational::parse(s_.substr(start, pos_ - start));
            } catch (const std::invalid_argument&) {
                fail("bad number");
            }
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == "sqrt") {
                if (!accept('(')) fail("sqrt requires parentheses");
                NodePtr arg = expr();
                if (!accept(')')) fail("missing ')'");
                return make(Expr::Kind::Sqrt, {arg});
            }
            auto n = std::make_shared<Expr::Node>();
            n->kind = Expr::Kind::Symbol;
            n->name = name;
            return n;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

Expr Expr::parse(const std::string& text) {
    Expr e;
    e.text_ = text;
    e.node_ = ExprParser(text).parse();
    return e;
}

namespace {

bool any_sqrt(const auto& n) {
    if (n.kind == Expr::Kind::Sqrt) return true;
    for (const auto& a : n.args)
        if (any_sqrt(*a)) return true;
    return false;
}

void collect(const auto& n, std::set<std::string>& out) {
    if (n.kind == Expr::Kind::Symbol) out.insert(n.name);
    for (const auto& a : n.args) collect(*a, out);
}

}  // namespace

bool Expr::uses_sqrt() const { return any_sqrt(*node_); }

std::set<std::string> Expr::symbols() const {
    std::set<std::string> out;
    collect(*node_, out);
    return out;
}

}  // namespace hopfcm
