#pragma once

#include <cctype>
#include <cmath>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "altsum/errors.hpp"
#include "altsum/polynomial.hpp"
#include "altsum/rational.hpp"

namespace altsum {

/// Arithmetic expression AST over rational literals, variables x1..xp,
/// + - * / ^ (integer exponent), unary minus, and exp/sin/cos/log/sqrt.
class Expr {
  public:
    enum class Kind { number, variable, add, sub, mul, div, neg, pow, call };
    enum class Func { exp_fn, sin_fn, cos_fn, log_fn, sqrt_fn };

    using Ptr = std::shared_ptr<const Expr>;

    Kind kind;
    Rational number;       // Kind::number
    int var_index = 0;     // Kind::variable (0-based)
    long long exponent = 0;  // Kind::pow
    Func func = Func::exp_fn;  // Kind::call
    Ptr lhs, rhs;

    static Ptr make_number(Rational v) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::number;
        e->number = std::move(v);
        return e;
    }
    static Ptr make_variable(int idx) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::variable;
        e->var_index = idx;
        return e;
    }
    static Ptr make_binary(Kind k, Ptr a, Ptr b) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        return e;
    }
    static Ptr make_neg(Ptr a) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::neg;
        e->lhs = std::move(a);
        return e;
    }
    static Ptr make_pow(Ptr a, long long exponent) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::pow;
        e->lhs = std::move(a);
        e->exponent = exponent;
        return e;
    }
    static Ptr make_call(Func f, Ptr a) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::call;
        e->func = f;
        e->lhs = std::move(a);
        return e;
    }
};

namespace detail {

class ExprParser {
  public:
    ExprParser(const std::string& src, int dim) : src_(src), dim_(dim) {}

    Expr::Ptr parse() {
        Expr::Ptr e = parse_sum();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

  private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr::Ptr parse_sum() {
        Expr::Ptr e = parse_product();
        while (true) {
            if (eat('+'))
                e = Expr::make_binary(Expr::Kind::add, e, parse_product());
            else if (eat('-'))
                e = Expr::make_binary(Expr::Kind::sub, e, parse_product());
            else
                return e;
        }
    }

    Expr::Ptr parse_product() {
        Expr::Ptr e = parse_unary();
        while (true) {
            if (eat('*'))
                e = Expr::make_binary(Expr::Kind::mul, e, parse_unary());
            else if (eat('/'))
                e = Expr::make_binary(Expr::Kind::div, e, parse_unary());
            else
                return e;
        }
    }

    Expr::Ptr parse_unary() {
        if (eat('-')) return Expr::make_neg(parse_unary());
        return parse_power();
    }

    Expr::Ptr parse_power() {
        Expr::Ptr base = parse_atom();
        if (!peek('^')) return base;
        ++pos_;
        return Expr::make_pow(base, parse_exponent());
    }

    // Exponents are (optionally signed) integer literals; a chain like
    // 2^3 folds right-associatively into a single integer.
    long long parse_exponent() {
        skip_ws();
        bool negative = false;
        if (pos_ < src_.size() && src_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected an integer exponent", pos_);
        long long value = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            value = value * 10 + (src_[i] - '0');
            if (value > 1'000'000) throw ParseError("exponent too large", start);
        }
        if (peek('^')) {
            ++pos_;
            const long long inner = parse_exponent();
            if (inner < 0) throw ParseError("negative exponent in an exponent tower", pos_);
            if (inner > 64) throw ParseError("exponent tower too large", pos_);
            long long acc = 1;
            for (long long i = 0; i < inner; ++i) {
                acc *= value;
                if (acc > 1'000'000 || acc < -1'000'000) throw ParseError("exponent too large", start);
            }
            value = acc;
        }
        return negative ? -value : value;
    }

    Expr::Ptr parse_atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Expr::Ptr e = parse_sum();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Expr::Ptr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            const std::size_t frac = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (pos_ == frac) throw ParseError("expected digits after decimal point", pos_);
        }
        return Expr::make_number(rat_from_string(src_.substr(start, pos_ - start)));
    }

    Expr::Ptr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string name = src_.substr(start, pos_ - start);
        if (name.size() >= 2 && name[0] == 'x' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            const int idx = std::stoi(name.substr(1));
            if (idx < 1 || idx > dim_)
                throw ParseError("variable " + name + " exceeds dimension " + std::to_string(dim_),
                                 start);
            return Expr::make_variable(idx - 1);
        }
        Expr::Func f;
        if (name == "exp")
            f = Expr::Func::exp_fn;
        else if (name == "sin")
            f = Expr::Func::sin_fn;
        else if (name == "cos")
            f = Expr::Func::cos_fn;
        else if (name == "log")
            f = Expr::Func::log_fn;
        else if (name == "sqrt")
            f = Expr::Func::sqrt_fn;
        else
            throw ParseError("unknown identifier '" + name + "'", start);
        if (!eat('(')) throw ParseError("expected '(' after function name", pos_);
        Expr::Ptr arg = parse_sum();
        if (!eat(')')) throw ParseError("expected ')'", pos_);
        return Expr::make_call(f, arg);
    }

    const std::string& src_;
    int dim_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression in the variables x1..x`dim`.
inline Expr::Ptr parse_expr(const std::string& src, int dim) {
    return detail::ExprParser(src, dim).parse();
}

/// Precedence-aware canonical printer; parse(print(e)) reproduces e.
inline std::string print_expr(const Expr::Ptr& e) {
    auto prec = [](const Expr& n) {
        switch (n.kind) {
            case Expr::Kind::add:
            case Expr::Kind::sub: return 1;
            case Expr::Kind::mul:
            case Expr::Kind::div: return 2;
            case Expr::Kind::neg: return 3;
            case Expr::Kind::pow: return 4;
            default: return 5;
        }
    };
    std::function<std::string(const Expr::Ptr&)> rec = [&](const Expr::Ptr& n) -> std::string {
        auto wrap = [&](const Expr::Ptr& child, int min_prec) {
            std::string s = rec(child);
            if (prec(*child) < min_prec) return "(" + s + ")";
            return s;
        };
        switch (n->kind) {
            case Expr::Kind::number: {
                if (n->number < 0) return "(" + rat_to_string(n->number) + ")";
                return rat_to_string(n->number);
            }
            case Expr::Kind::variable: return "x" + std::to_string(n->var_index + 1);
            case Expr::Kind::add: return wrap(n->lhs, 1) + " + " + wrap(n->rhs, 2);
            case Expr::Kind::sub: return wrap(n->lhs, 1) + " - " + wrap(n->rhs, 2);
            case Expr::Kind::mul: return wrap(n->lhs, 2) + "*" + wrap(n->rhs, 3);
            case Expr::Kind::div: return wrap(n->lhs, 2) + "/" + wrap(n->rhs, 3);
            case Expr::Kind::neg: return "-" + wrap(n->lhs, 3);
            case Expr::Kind::pow: return wrap(n->lhs, 5) + "^" + std::to_string(n->exponent);
            case Expr::Kind::call: {
                const char* name = "exp";
                switch (n->func) {
                    case Expr::Func::exp_fn: name = "exp"; break;
                    case Expr::Func::sin_fn: name = "sin"; break;
                    case Expr::Func::cos_fn: name = "cos"; break;
                    case Expr::Func::log_fn: name = "log"; break;
                    case Expr::Func::sqrt_fn: name = "sqrt"; break;
                }
                return std::string(name) + "(" + rec(n->lhs) + ")";
            }
        }
        return "?";
    };
    return rec(e);
}

/// IEEE double evaluation; domain errors surface as EvalError carrying the
/// offending subexpression, never as silent NaN.
inline double eval_expr(const Expr::Ptr& e, const std::vector<double>& x) {
    auto fail = [&](const std::string& what) -> double {
        throw EvalError(what + " in subexpression " + print_expr(e));
    };
    double v = 0.0;
    switch (e->kind) {
        case Expr::Kind::number: v = to_double(e->number); break;
        case Expr::Kind::variable: {
            if (e->var_index >= static_cast<int>(x.size())) fail("missing variable");
            v = x[static_cast<std::size_t>(e->var_index)];
            break;
        }
        case Expr::Kind::add: v = eval_expr(e->lhs, x) + eval_expr(e->rhs, x); break;
        case Expr::Kind::sub: v = eval_expr(e->lhs, x) - eval_expr(e->rhs, x); break;
        case Expr::Kind::mul: v = eval_expr(e->lhs, x) * eval_expr(e->rhs, x); break;
        case Expr::Kind::div: {
            const double den = eval_expr(e->rhs, x);
            if (den == 0.0) fail("division by zero");
            v = eval_expr(e->lhs, x) / den;
            break;
        }
        case Expr::Kind::neg: v = -eval_expr(e->lhs, x); break;
        case Expr::Kind::pow: {
            const double base = eval_expr(e->lhs, x);
            if (base == 0.0 && e->exponent < 0) fail("zero base with negative exponent");
            v = std::pow(base, static_cast<double>(e->exponent));
            break;
        }
        case Expr::Kind::call: {
            const double a = eval_expr(e->lhs, x);
            switch (e->func) {
                case Expr::Func::exp_fn: v = std::exp(a); break;
                case Expr::Func::sin_fn: v = std::sin(a); break;
                case Expr::Func::cos_fn: v = std::cos(a); break;
                case Expr::Func::log_fn:
                    if (a <= 0.0) fail("log of a nonpositive value");
                    v = std::log(a);
                    break;
                case Expr::Func::sqrt_fn:
                    if (a < 0.0) fail("sqrt of a negative value");
                    v = std::sqrt(a);
                    break;
            }
            break;
        }
    }
    if (!std::isfinite(v)) fail("non-finite value");
    return v;
}

/// Syntactic polynomial detection: +, -, *, nonnegative integer powers, and
/// division by nonzero constants stay polynomial; anything else opts out.
inline std::optional<RationalPolynomial> expr_to_polynomial(const Expr::Ptr& e, int dim) {
    switch (e->kind) {
        case Expr::Kind::number: return RationalPolynomial::constant(dim, e->number);
        case Expr::Kind::variable: return RationalPolynomial::variable(dim, e->var_index);
        case Expr::Kind::add:
        case Expr::Kind::sub:
        case Expr::Kind::mul: {
            auto a = expr_to_polynomial(e->lhs, dim);
            auto b = expr_to_polynomial(e->rhs, dim);
            if (!a || !b) return std::nullopt;
            if (e->kind == Expr::Kind::add) return *a + *b;
            if (e->kind == Expr::Kind::sub) return *a - *b;
            return *a * *b;
        }
        case Expr::Kind::div: {
            auto a = expr_to_polynomial(e->lhs, dim);
            auto b = expr_to_polynomial(e->rhs, dim);
            if (!a || !b || !b->is_constant()) return std::nullopt;
            const Rational c = b->constant_value();
            if (c == 0) return std::nullopt;
            return *a * (Rational(1) / c);
        }
        case Expr::Kind::neg: {
            auto a = expr_to_polynomial(e->lhs, dim);
            if (!a) return std::nullopt;
            return -*a;
        }
        case Expr::Kind::pow: {
            auto a = expr_to_polynomial(e->lhs, dim);
            if (!a) return std::nullopt;
            if (e->exponent < 0) {
                if (!a->is_constant() || a->constant_value() == 0) return std::nullopt;
                return RationalPolynomial::constant(dim, rat_pow(a->constant_value(), e->exponent));
            }
            return a->pow(e->exponent);
        }
        case Expr::Kind::call: return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace altsum
