#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ineq/calculus.hpp"

using namespace ineq;

TEST_CASE("differentiate exactly") {
    // d/dx x/(x^3+8) = (8 - 2x^3)/(x^3+8)^2
    Expr f = parse_expression("x/(x^3 + 8)");
    Expr fp = differentiate(f);
    CHECK(evaluate_exact(fp, BigRational(1)) == BigRational(2, 27));
    CHECK(evaluate_exact(fp, BigRational(0)) == BigRational(1, 8));

    // d/dx x/(x^2+2) at 1 = 1/9
    CHECK(evaluate_exact(differentiate(parse_expression("x/(x^2 + 2)")), BigRational(1)) ==
          BigRational(1, 9));

    // d/dx 1/(x^3+2) at 1 = -1/3
    CHECK(evaluate_exact(differentiate(parse_expression("1/(x^3 + 2)")), BigRational(1)) ==
          BigRational(-1, 3));

    // chain rule through a cube root: d/dx -(x*(12-x^2)^(1/3)) at 2 = -4/3
    Expr g = parse_expression("-(x*(12 - x^2)^(1/3))");
    CHECK(evaluate_exact(differentiate(g), BigRational(2)) == BigRational(-4, 3));

    // d/dx ln(x) = 1/x
    CHECK(evaluate_exact(differentiate(parse_expression("ln(x)")), BigRational(4)) ==
          BigRational(1, 4));

    // polynomial derivative
    Expr q = parse_expression("10*x^3 - 9*x^5");
    CHECK(evaluate_exact(differentiate(q), BigRational(1, 3)) == BigRational(25, 9));
}

TEST_CASE("to_rational_function normalization") {
    // x/(x^3+8) - (2x+1)/27 -> numerator -(2x^4 + x^3 - 11x + 8), den 27x^3 + 216
    Expr h = parse_expression("2/27*x + 1/27 - x/(x^3 + 8)");
    RationalFunction rf = to_rational_function(h);
    CHECK(rf.num == Polynomial({8, -11, 0, 1, 2}));
    CHECK(rf.den == Polynomial({216, 0, 0, 27}));

    // denominator leading coefficient is positive after normalization
    RationalFunction neg = to_rational_function(parse_expression("1/(-x + 2)"));
    CHECK(neg.den.leading() > BigRational(0));

    // gcd cancellation: (x^2-1)/(x-1) = x+1
    RationalFunction c = to_rational_function(parse_expression("(x^2 - 1)/(x - 1)"));
    CHECK(c.num == Polynomial({1, 1}));
    CHECK(c.den == Polynomial({1}));

    CHECK(to_rational_function(parse_expression("x - x")).num.is_zero());
    CHECK_THROWS_AS(to_rational_function(parse_expression("ln(x)")), NotRationalFunction);
}

TEST_CASE("expression sign on a domain, polynomial route") {
    DomainInterval d01 = DomainInterval::closed(BigRational(0), BigRational(1));
    ExprSignResult pos = expression_sign_on(parse_expression("x^2 + 1"), d01, 40);
    CHECK(pos.kind == ExprSignResult::Kind::Positive);
    CHECK(pos.strict);

    ExprSignResult weak = expression_sign_on(parse_expression("x^2"), d01, 40);
    CHECK(weak.kind == ExprSignResult::Kind::Positive);
    CHECK(!weak.strict);

    ExprSignResult mixed = expression_sign_on(parse_expression("x - 1/2"), d01, 40);
    CHECK(mixed.kind == ExprSignResult::Kind::Mixed);
    REQUIRE(mixed.positive_witness);
    REQUIRE(mixed.negative_witness);
}

TEST_CASE("convexity error check on 10x^3 - 9x^5") {
    // f'' = 60x - 180x^3 changes sign inside [0,1]
    ExprSignResult r = second_derivative_sign(parse_expression("10*x^3 - 9*x^5"),
                                              DomainInterval::closed(BigRational(0), BigRational(1)),
                                              40);
    CHECK(r.kind == ExprSignResult::Kind::Mixed);
    REQUIRE(r.positive_witness);
    REQUIRE(r.negative_witness);
    Expr f2 = differentiate(differentiate(parse_expression("10*x^3 - 9*x^5")));
    CHECK(evaluate_exact(f2, BigRational(1, 10)) == BigRational(291, 50));
    CHECK(evaluate_exact(f2, BigRational(9, 10)) == BigRational(-3861, 50));
    CHECK(evaluate_exact(f2, r.positive_witness->point) > BigRational(0));
    CHECK(evaluate_exact(f2, r.negative_witness->point) < BigRational(0));
}

TEST_CASE("interval sign boxes cover or decide") {
    Expr e = parse_expression("x^(1/3) + 1");
    RatInterval box(BigRational(0), BigRational(8));
    IntervalSignOutcome out = interval_sign_boxes(e, box, 20);
    CHECK(out.gaps.empty());
    CHECK(out.has_positive);
    CHECK(!out.has_negative);
    // every reported box carries a definite sign
    for (const auto& b : out.boxes) CHECK(b.sign == 1);
}

TEST_CASE("interval route sign of a non-polynomial expression") {
    // -x*(12-x^2)^(1/3) is negative on [1, 3]
    Expr e = parse_expression("-(x*(12 - x^2)^(1/3))");
    ExprSignResult r = expression_sign_on(e, DomainInterval::closed(BigRational(1), BigRational(3)),
                                          40);
    CHECK(r.kind == ExprSignResult::Kind::Negative);
}

TEST_CASE("refine_point_witness") {
    Expr e = parse_expression("x^(1/2) - 1");
    ExprSignWitness w = refine_point_witness(e, BigRational(4));
    CHECK(w.value.definite_sign() == 1);
    CHECK(w.value.contains(BigRational(1)));
}

TEST_CASE("domain_outer_hull") {
    DomainInterval d(Endpoint::rational(BigRational(0)), Endpoint::sqrt_of(BigRational(3)), true,
                     true);
    RatInterval h = domain_outer_hull(d, BigRational(1, 1000));
    CHECK(h.lo <= BigRational(0));
    CHECK(h.hi * h.hi >= BigRational(3));
}
