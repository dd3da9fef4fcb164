#include "ineq/expr.hpp"

#include <cctype>
#include <vector>

namespace ineq {

namespace {

Expr make(ExprKind k) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    return n;
}

}  // namespace

Expr constant(BigRational v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Const;
    n->value = std::move(v);
    return n;
}

Expr constant(long v) { return constant(BigRational(v)); }

Expr variable() { return make(ExprKind::Var); }

Expr add(Expr a, Expr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Add;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

Expr sub(Expr a, Expr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Sub;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

Expr neg(Expr a) {
    if (a->kind == ExprKind::Const) return constant(-a->value);
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Neg;
    n->a = std::move(a);
    return n;
}

Expr mul(Expr a, Expr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Mul;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

Expr divide(Expr a, Expr b) {
    if (a->kind == ExprKind::Const && b->kind == ExprKind::Const)
        return constant(a->value / b->value);
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Div;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

Expr pow_expr(Expr base, long exponent) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::PowInt;
    n->ipow = exponent;
    n->a = std::move(base);
    return n;
}

Expr pow_expr(Expr base, const BigRational& exponent) {
    if (exponent.is_integer()) return pow_expr(std::move(base), exponent.num().convert_to<long>());
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::PowRat;
    n->rpow = exponent;
    n->a = std::move(base);
    return n;
}

Expr ln_expr(Expr a) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Ln;
    n->a = std::move(a);
    return n;
}

bool struct_equal(const Expr& a, const Expr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::Const: return a->value == b->value;
        case ExprKind::Var: return true;
        case ExprKind::Neg:
        case ExprKind::Ln: return struct_equal(a->a, b->a);
        case ExprKind::PowInt: return a->ipow == b->ipow && struct_equal(a->a, b->a);
        case ExprKind::PowRat: return a->rpow == b->rpow && struct_equal(a->a, b->a);
        default: return struct_equal(a->a, b->a) && struct_equal(a->b, b->b);
    }
}

bool contains_var(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Const: return false;
        case ExprKind::Var: return true;
        case ExprKind::Neg:
        case ExprKind::Ln:
        case ExprKind::PowInt:
        case ExprKind::PowRat: return contains_var(e->a);
        default: return contains_var(e->a) || contains_var(e->b);
    }
}

bool is_rational_expr(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Const:
        case ExprKind::Var: return true;
        case ExprKind::PowRat:
        case ExprKind::Ln: return false;
        case ExprKind::Neg:
        case ExprKind::PowInt: return is_rational_expr(e->a);
        default: return is_rational_expr(e->a) && is_rational_expr(e->b);
    }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw SyntaxError(i, std::string("expected '") + c + "'");
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    // number := integer | decimal (the integer "/" integer form is folded
    // at term level so it stays distinguishable from division).
    struct NumTok { BigRational value; bool bare_integer; };
    NumTok number() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        bool integer = true;
        if (i < s.size() && s[i] == '.') {
            integer = false;
            ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        }
        return {BigRational::parse(s.substr(start, i - start)), integer};
    }

    BigInt exponent_integer() {
        skip();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t d = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == d) throw SyntaxError(i, "expected an integer exponent");
        return BigInt(s.substr(start, i - start));
    }

    BigRational exponent() {
        if (peek() == '(') {
            expect('(');
            BigInt p = exponent_integer();
            expect('/');
            BigInt q = exponent_integer();
            expect(')');
            return BigRational(p, q);
        }
        return BigRational(exponent_integer());
    }

    struct FactorResult { Expr e; bool bare_integer; };

    FactorResult factor() {
        if (peek() == '-') {
            expect('-');
            FactorResult f = factor();
            return {neg(std::move(f.e)), false};
        }
        FactorResult a = atom();
        if (peek() == '^') {
            expect('^');
            BigRational e = exponent();
            return {pow_expr(std::move(a.e), e), false};
        }
        return a;
    }

    FactorResult atom() {
        char c = peek();
        if (c == '(') {
            expect('(');
            Expr e = expr();
            expect(')');
            return {std::move(e), false};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            NumTok n = number();
            return {constant(n.value), n.bare_integer};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            std::string name;
            while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i])))
                name += s[i++];
            if (name == "x") return {variable(), false};
            if (name == "ln") {
                expect('(');
                Expr e = expr();
                expect(')');
                return {ln_expr(std::move(e)), false};
            }
            throw UnknownIdentifier(start, name);
        }
        throw SyntaxError(i, "expected a number, 'x', 'ln(...)' or '('");
    }

    Expr term() {
        FactorResult lhs = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                expect('*');
                lhs = {mul(std::move(lhs.e), factor().e), false};
            } else if (c == '/') {
                expect('/');
                FactorResult rhs = factor();
                if (lhs.e->kind == ExprKind::Const && rhs.e->kind == ExprKind::Const) {
                    // constant "/" constant is an exact rational literal;
                    // the divide() builder folds it the same way
                    lhs = {constant(lhs.e->value / rhs.e->value), false};
                } else {
                    lhs = {divide(std::move(lhs.e), std::move(rhs.e)), false};
                }
            } else {
                return std::move(lhs.e);
            }
        }
    }

    Expr expr() {
        Expr lhs = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                expect('+');
                lhs = add(std::move(lhs), term());
            } else if (c == '-') {
                expect('-');
                lhs = sub(std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }
};

}  // namespace

Expr parse_expression(const std::string& text) {
    Parser p(text);
    Expr e = p.expr();
    p.skip();
    if (p.i != text.size()) throw SyntaxError(p.i, "trailing input");
    return e;
}

// ---------------------------------------------------------------------------
// Formatter
// ---------------------------------------------------------------------------

namespace {

// Precedence levels: Add/Sub 1, Mul/Div 2, unary minus 3, pow 4, atom 5.
int level_of(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::Mul:
        case ExprKind::Div: return 2;
        case ExprKind::Neg: return 3;
        case ExprKind::PowInt:
        case ExprKind::PowRat: return 4;
        case ExprKind::Const:
            // "p/q" literals must be parenthesized wherever a following or
            // preceding '*' or '/' could reassociate them; a leading '-'
            // binds like unary minus.
            if (!e->value.is_integer()) return 1;
            return e->value.sign() < 0 ? 3 : 5;
        default: return 5;
    }
}

std::string fmt(const Expr& e, int min_level) {
    std::string out;
    switch (e->kind) {
        case ExprKind::Const: out = e->value.str(); break;
        case ExprKind::Var: out = "x"; break;
        case ExprKind::Add: out = fmt(e->a, 1) + " + " + fmt(e->b, 2); break;
        case ExprKind::Sub: out = fmt(e->a, 1) + " - " + fmt(e->b, 2); break;
        case ExprKind::Neg: out = "-" + fmt(e->a, 3); break;
        case ExprKind::Mul: out = fmt(e->a, 2) + "*" + fmt(e->b, 3); break;
        case ExprKind::Div: out = fmt(e->a, 2) + "/" + fmt(e->b, 3); break;
        case ExprKind::PowInt:
        case ExprKind::PowRat: {
            // Grammar requires the base to be an atom.
            bool atom_base = e->a->kind == ExprKind::Var || e->a->kind == ExprKind::Ln ||
                             (e->a->kind == ExprKind::Const && e->a->value.sign() >= 0 &&
                              e->a->value.is_integer());
            std::string base = atom_base ? fmt(e->a, 0) : "(" + fmt(e->a, 0) + ")";
            if (e->kind == ExprKind::PowInt) {
                out = base + "^" + std::to_string(e->ipow);
            } else {
                out = base + "^(" + e->rpow.num().str() + "/" + e->rpow.den().str() + ")";
            }
            break;
        }
        case ExprKind::Ln: out = "ln(" + fmt(e->a, 0) + ")"; break;
    }
    if (level_of(e) < min_level) return "(" + out + ")";
    return out;
}

}  // namespace

std::string format_expression(const Expr& e) { return fmt(e, 0); }

// ---------------------------------------------------------------------------
// Evaluators
// ---------------------------------------------------------------------------

BigRational evaluate_exact(const Expr& e, const BigRational& x) {
    switch (e->kind) {
        case ExprKind::Const: return e->value;
        case ExprKind::Var: return x;
        case ExprKind::Add: return evaluate_exact(e->a, x) + evaluate_exact(e->b, x);
        case ExprKind::Sub: return evaluate_exact(e->a, x) - evaluate_exact(e->b, x);
        case ExprKind::Neg: return -evaluate_exact(e->a, x);
        case ExprKind::Mul: return evaluate_exact(e->a, x) * evaluate_exact(e->b, x);
        case ExprKind::Div: {
            BigRational d = evaluate_exact(e->b, x);
            if (d.is_zero()) throw DivisionByZero();
            return evaluate_exact(e->a, x) / d;
        }
        case ExprKind::PowInt: return evaluate_exact(e->a, x).pow(e->ipow);
        case ExprKind::PowRat: {
            BigRational base = evaluate_exact(e->a, x);
            unsigned q = e->rpow.den().convert_to<unsigned>();
            long p = e->rpow.num().convert_to<long>();
            if (base.sign() < 0 && q % 2 == 0) throw NegativeRadicand();
            if (base.is_zero() && p < 0) throw DivisionByZero();
            BigRational powed = base.abs().pow(p);
            BigRational root;
            if (!perfect_nth_root(powed, q, root)) throw IrrationalValue();
            return (base.sign() < 0 && p % 2 != 0) ? -root : root;
        }
        case ExprKind::Ln: {
            BigRational a = evaluate_exact(e->a, x);
            if (a.sign() <= 0) throw NonPositiveArgument();
            if (a == BigRational(1)) return BigRational(0);
            throw IrrationalValue();
        }
    }
    throw Error("unreachable");
}

RatInterval evaluate_enclosure(const Expr& e, const RatInterval& x, const BigRational& eps) {
    switch (e->kind) {
        case ExprKind::Const: return RatInterval::point(e->value);
        case ExprKind::Var: return x;
        case ExprKind::Add: return evaluate_enclosure(e->a, x, eps) + evaluate_enclosure(e->b, x, eps);
        case ExprKind::Sub: return evaluate_enclosure(e->a, x, eps) - evaluate_enclosure(e->b, x, eps);
        case ExprKind::Neg: return -evaluate_enclosure(e->a, x, eps);
        case ExprKind::Mul: return evaluate_enclosure(e->a, x, eps) * evaluate_enclosure(e->b, x, eps);
        case ExprKind::Div: return evaluate_enclosure(e->a, x, eps) / evaluate_enclosure(e->b, x, eps);
        case ExprKind::PowInt: {
            RatInterval base = evaluate_enclosure(e->a, x, eps);
            if (e->ipow < 0 && base.contains_zero()) throw DivisorContainsZero();
            return pow_int(base, e->ipow);
        }
        case ExprKind::PowRat: {
            RatInterval base = evaluate_enclosure(e->a, x, eps);
            if (base.lo.sign() < 0 && e->rpow.den() % 2 == 0)
                throw DomainViolation("even root of a negative enclosure");
            return pow_rat(base, e->rpow.num(), e->rpow.den(), eps);
        }
        case ExprKind::Ln: {
            RatInterval a = evaluate_enclosure(e->a, x, eps);
            if (a.lo.sign() <= 0) throw DomainViolation("ln of a non-positive enclosure");
            return ln_enclosure(a, eps);
        }
    }
    throw Error("unreachable");
}

RatInterval evaluate_point_enclosure(const Expr& e, const BigRational& x,
                                     const BigRational& target) {
    BigRational eps = target;
    for (int round = 0; round < 64; ++round) {
        RatInterval enc = evaluate_enclosure(e, RatInterval::point(x), eps);
        if (enc.width() <= target) return enc;
        eps /= BigRational(64);
    }
    throw Error("point enclosure did not reach the requested width");
}

}  // namespace ineq
