#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "permlab/error.hpp"

namespace permlab::identity {

// Multilinear-identity DSL. Surface grammar, one equation per line:
//
//   equation := expr '==' expr
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor ('ox' factor)*            tensor-product legs
//   factor   := atom (('*'|'@') atom)*           '*' first product, '@' second
//   atom     := INT['/'INT] | ident | ident '(' expr [',' expr] ')'
//             | '(' expr ')'
//
// Calls resolve by bound name: unary names are map applications, binary
// names are bilinear-form pairings (scalar factors), `tau` flips a rank-2
// value, `cop1`/`cop2` are the Sweedler legs of the bound coproduct, and
// `t1`/`t2` are the legs of a bound rank-2 tensor constant. Lowercase
// identifiers that are never called are variables; each must occur exactly
// once per additive term.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class Kind {
    Var,        // name
    ScalarLit,  // num/den
    Call,       // name(args...) before binding: Apply / Pair / tau / legs
    Mul,        // a * b or a @ b, name = "*" or "@"
    Concat,     // a ox b
    Sum,        // signed children
    Neg,        // -a
};

struct Expr {
    Kind kind;
    std::string name;
    long num = 0, den = 1;
    std::vector<ExprPtr> args;

    static ExprPtr var(std::string n) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Var;
        e->name = std::move(n);
        return e;
    }
    static ExprPtr lit(long num, long den) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::ScalarLit;
        e->num = num;
        e->den = den;
        return e;
    }
    static ExprPtr call(std::string n, std::vector<ExprPtr> a) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Call;
        e->name = std::move(n);
        e->args = std::move(a);
        return e;
    }
    static ExprPtr mul(std::string op, ExprPtr a, ExprPtr b) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Mul;
        e->name = std::move(op);
        e->args = {std::move(a), std::move(b)};
        return e;
    }
    static ExprPtr concat(ExprPtr a, ExprPtr b) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Concat;
        e->args = {std::move(a), std::move(b)};
        return e;
    }
    static ExprPtr neg(ExprPtr a) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Neg;
        e->args = {std::move(a)};
        return e;
    }
    static ExprPtr sum(std::vector<ExprPtr> children) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Sum;
        e->args = std::move(children);
        return e;
    }
};

struct Equation {
    ExprPtr lhs, rhs;
    std::string text;
};

// --- printing -----------------------------------------------------------

inline int precedence(const Expr& e) {
    switch (e.kind) {
        case Kind::Sum: return 0;
        case Kind::Neg: return 0;
        case Kind::Concat: return 1;
        case Kind::Mul: return 2;
        default: return 3;
    }
}

inline std::string print_expr(const Expr& e, int parent_prec = 0) {
    std::string out;
    switch (e.kind) {
        case Kind::Var: out = e.name; break;
        case Kind::ScalarLit:
            out = std::to_string(e.num);
            if (e.den != 1) out += "/" + std::to_string(e.den);
            break;
        case Kind::Call: {
            out = e.name + "(";
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (i) out += ",";
                out += print_expr(*e.args[i], 0);
            }
            out += ")";
            break;
        }
        case Kind::Mul:
            out = print_expr(*e.args[0], 2) + e.name + print_expr(*e.args[1], 3);
            break;
        case Kind::Concat:
            out = print_expr(*e.args[0], 2) + " ox " + print_expr(*e.args[1], 2);
            break;
        case Kind::Neg:
            out = "-" + print_expr(*e.args[0], 1);
            break;
        case Kind::Sum: {
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                const Expr& c = *e.args[i];
                if (i == 0) {
                    out += print_expr(c, 1);
                } else if (c.kind == Kind::Neg) {
                    out += " - " + print_expr(*c.args[0], 1);
                } else {
                    out += " + " + print_expr(c, 1);
                }
            }
            break;
        }
    }
    if (precedence(e) < parent_prec) return "(" + out + ")";
    return out;
}

inline std::string print_equation(const Equation& eq) {
    return print_expr(*eq.lhs) + " == " + print_expr(*eq.rhs);
}

// --- parsing ------------------------------------------------------------

class Parser {
  public:
    explicit Parser(std::string text) : s_(std::move(text)) {}

    Equation parse_equation() {
        ExprPtr lhs = parse_sum();
        skip_ws();
        if (!literal("==")) throw ParseError("expected '=='", i_);
        ExprPtr rhs = parse_sum();
        skip_ws();
        if (i_ != s_.size()) throw ParseError("trailing input after equation", i_);
        Equation eq;
        eq.lhs = std::move(lhs);
        eq.rhs = std::move(rhs);
        eq.text = s_;
        return eq;
    }

  private:
    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool literal(const std::string& lit) {
        skip_ws();
        if (s_.compare(i_, lit.size(), lit) == 0) {
            i_ += lit.size();
            return true;
        }
        return false;
    }
    bool peek_literal(const std::string& lit) {
        skip_ws();
        return s_.compare(i_, lit.size(), lit) == 0;
    }

    ExprPtr parse_sum() {
        skip_ws();
        std::vector<ExprPtr> children;
        bool neg = false;
        if (literal("-")) neg = true;
        ExprPtr first = parse_term();
        children.push_back(neg ? Expr::neg(first) : first);
        while (true) {
            skip_ws();
            if (peek_literal("==")) break;
            if (literal("+")) {
                children.push_back(parse_term());
            } else if (literal("-")) {
                children.push_back(Expr::neg(parse_term()));
            } else {
                break;
            }
        }
        if (children.size() == 1) return children[0];
        return Expr::sum(std::move(children));
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_factor();
        while (true) {
            skip_ws();
            // 'ox' must be followed by a non-identifier boundary
            if (s_.compare(i_, 2, "ox") == 0 &&
                (i_ + 2 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[i_ + 2])))) {
                i_ += 2;
                left = Expr::concat(left, parse_factor());
            } else {
                break;
            }
        }
        return left;
    }

    ExprPtr parse_factor() {
        ExprPtr left = parse_atom();
        while (true) {
            skip_ws();
            if (i_ < s_.size() && (s_[i_] == '*' || s_[i_] == '@')) {
                std::string op(1, s_[i_]);
                ++i_;
                left = Expr::mul(op, left, parse_atom());
            } else {
                break;
            }
        }
        return left;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            ExprPtr inner = parse_sum();
            skip_ws();
            if (i_ >= s_.size() || s_[i_] != ')') throw ParseError("expected ')'", i_);
            ++i_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = scan_int();
            long den = 1;
            if (i_ < s_.size() && s_[i_] == '/') {
                ++i_;
                den = scan_int();
                if (den == 0) throw ParseError("zero denominator", i_);
            }
            return Expr::lit(num, den);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = scan_ident();
            skip_ws();
            if (i_ < s_.size() && s_[i_] == '(') {
                ++i_;
                std::vector<ExprPtr> args;
                args.push_back(parse_sum());
                skip_ws();
                while (i_ < s_.size() && s_[i_] == ',') {
                    ++i_;
                    args.push_back(parse_sum());
                    skip_ws();
                }
                if (i_ >= s_.size() || s_[i_] != ')') throw ParseError("expected ')'", i_);
                ++i_;
                return Expr::call(std::move(name), std::move(args));
            }
            return Expr::var(std::move(name));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
    }

    long scan_int() {
        skip_ws();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) throw ParseError("expected a number", i_);
        return std::stol(s_.substr(start, i_ - start));
    }
    std::string scan_ident() {
        std::size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        return s_.substr(start, i_ - start);
    }

    std::string s_;
    std::size_t i_ = 0;
};

inline Equation parse(const std::string& text) { return Parser(text).parse_equation(); }

}  // namespace permlab::identity
