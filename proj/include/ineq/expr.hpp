#pragma once

#include <memory>
#include <string>

#include "ineq/interval.hpp"

namespace ineq {

enum class ExprKind { Const, Var, Add, Sub, Neg, Mul, Div, PowInt, PowRat, Ln };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

/// Immutable expression tree over a single variable "x".
/// PowInt holds an integer exponent; PowRat a non-integer rational one
/// in lowest terms (cube root = PowRat 1/3).
struct ExprNode {
    ExprKind kind;
    BigRational value;  // Const
    long ipow = 0;      // PowInt exponent
    BigRational rpow;   // PowRat exponent
    Expr a, b;          // children
};

Expr constant(BigRational v);
Expr constant(long v);
Expr variable();
Expr add(Expr a, Expr b);
Expr sub(Expr a, Expr b);
/// Folds neg(Const c) to Const(-c) so formatting stays reparse-stable.
Expr neg(Expr a);
Expr mul(Expr a, Expr b);
/// Folds div(Const, Const) to a single Const.
Expr divide(Expr a, Expr b);
Expr pow_expr(Expr base, long exponent);
/// Integer exponents fold to PowInt.
Expr pow_expr(Expr base, const BigRational& exponent);
Expr ln_expr(Expr a);

bool struct_equal(const Expr& a, const Expr& b);
bool contains_var(const Expr& e);
/// True when the tree has no PowRat/Ln nodes.
bool is_rational_expr(const Expr& e);

/// Grammar: expr := term (("+"|"-") term)* ; term := factor (("*"|"/") factor)* ;
/// factor := "-" factor | atom ("^" exponent)? ;
/// atom := number | "x" | "ln" "(" expr ")" | "(" expr ")" ;
/// exponent := integer | "(" integer "/" integer ")".
/// Explicit '*' is required. Decimal literals parse exactly as fractions.
Expr parse_expression(const std::string& text);

/// Inverse of parse_expression up to structural equality.
std::string format_expression(const Expr& e);

/// Exact rational value; throws IrrationalValue when a PowRat/Ln node
/// produces an irrational number, signalling the enclosure backend.
BigRational evaluate_exact(const Expr& e, const BigRational& x);

/// Interval extension: contains {e(t) : t in x}.
RatInterval evaluate_enclosure(const Expr& e, const RatInterval& x, const BigRational& eps);

/// Point enclosure refined until its width is <= target.
RatInterval evaluate_point_enclosure(const Expr& e, const BigRational& x,
                                     const BigRational& target);

}  // namespace ineq
