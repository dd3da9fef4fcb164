#pragma once

#include <optional>
#include <vector>

#include "ineq/expr.hpp"
#include "ineq/polynomial.hpp"

namespace ineq {

/// Exact P/Q normal form: gcd(P, Q) = 1, Q nonzero with positive leading
/// coefficient; both scaled to a jointly primitive integer form when possible.
struct RationalFunction {
    Polynomial num, den;

    BigRational operator()(const BigRational& x) const {
        BigRational d = den(x);
        if (d.is_zero()) throw DivisionByZero();
        return num(x) / d;
    }
};

/// Exact symbolic derivative (sum, product, quotient, power, ln, chain).
Expr differentiate(const Expr& e);

/// Normalizes a PowRat/Ln-free expression to P/Q; throws NotRationalFunction.
RationalFunction to_rational_function(const Expr& e);

struct ExprSignWitness {
    BigRational point;
    RatInterval value;  // exact or enclosed, with a definite sign
};

/// Outcome of certifying the sign of an expression on a domain.
struct ExprSignResult {
    enum class Kind { Positive, Negative, Mixed, Inconclusive };
    Kind kind = Kind::Inconclusive;
    bool strict = false;  // certified to never vanish
    std::optional<ExprSignWitness> positive_witness, negative_witness;
    std::vector<RatInterval> gaps;  // undecided boxes when Inconclusive
};

/// Rigorous sign of e on d: exact polynomial route when e normalizes to P/Q,
/// otherwise adaptive interval bisection up to the given depth budget.
/// Positive/Negative are weak (>= 0 / <= 0, strict flag set when strict).
ExprSignResult expression_sign_on(const Expr& e, const DomainInterval& d, int budget);

/// Sign of the second derivative (the convexity check).
ExprSignResult second_derivative_sign(const Expr& e, const DomainInterval& d, int budget);

/// Evidence box from interval certification.
struct SignEvidence {
    RatInterval box;
    int sign;  // +1 or -1
};

struct IntervalSignOutcome {
    std::vector<SignEvidence> boxes;
    std::vector<RatInterval> gaps;
    bool has_positive = false, has_negative = false;
};

/// Adaptive bisection of e over box; boxes whose enclosure has a definite
/// sign are recorded, the rest split until the depth budget runs out.
IntervalSignOutcome interval_sign_boxes(const Expr& e, const RatInterval& box, int depth);

/// Rational closed hull of a domain: outer for certification supersets.
RatInterval domain_outer_hull(const DomainInterval& d, const BigRational& eps);

/// Point witness with a definitely-signed value enclosure; requires the true
/// value to be nonzero so that refinement terminates.
ExprSignWitness refine_point_witness(const Expr& e, const BigRational& x);

}  // namespace ineq
