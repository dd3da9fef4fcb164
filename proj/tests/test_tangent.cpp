#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "ineq/tangent.hpp"

using namespace ineq;

TEST_CASE("separator coefficients, exact") {
    auto [k1, m1] = separator_coefficients(parse_expression("x^4"), parse_expression("x^3"),
                                           BigRational(1));
    CHECK(k1 == BigRational(4, 3));
    CHECK(m1 == BigRational(-1, 3));

    auto [k2, m2] = separator_coefficients(parse_expression("x/(x^3 + 8)"), variable(),
                                           BigRational(1));
    CHECK(k2 == BigRational(2, 27));
    CHECK(m2 == BigRational(1, 27));

    auto [k3, m3] = separator_coefficients(parse_expression("1/(x^3 + 2)"),
                                           parse_expression("x^2"), BigRational(1));
    CHECK(k3 == BigRational(-1, 6));
    CHECK(m3 == BigRational(1, 2));

    auto [k4, m4] = separator_coefficients(parse_expression("x/(4 + x^2)"),
                                           parse_expression("1/(4 + x)"), BigRational(1));
    CHECK(k4 == BigRational(-3));
    CHECK(m4 == BigRational(4, 5));

    auto [k5, m5] = separator_coefficients(parse_expression("10*x^3 - 9*x^5"), variable(),
                                           BigRational(1, 3));
    CHECK(k5 == BigRational(25, 9));
    CHECK(m5 == BigRational(-16, 27));

    CHECK_THROWS_AS(separator_coefficients(parse_expression("x^2"), parse_expression("x^2"),
                                           BigRational(0)),
                    DegenerateSeparator);
}

TEST_CASE("separator coefficients by enclosure") {
    // f = -x*(12-x^2)^(1/3) at x0 = 2: slope is exactly -4/3
    Expr f = parse_expression("-(x*(12 - x^2)^(1/3))");
    auto [k, m] = separator_coefficients_enclosure(f, variable(), BigRational(2),
                                                   BigRational(1, 1000000000));
    CHECK(k.width() <= BigRational(1, 1000000000));
    CHECK(k.contains(BigRational(-4, 3)));
    CHECK(m.contains(BigRational(-4, 3)));
}

TEST_CASE("tangency invariant of make_separator") {
    Expr f = parse_expression("x/(x^3 + 8)");
    Separator s = make_separator(f, variable(), BigRational(1));
    CHECK(evaluate_exact(s.g, BigRational(1)) == evaluate_exact(f, BigRational(1)));
    CHECK(evaluate_exact(differentiate(s.g), BigRational(1)) ==
          evaluate_exact(differentiate(f), BigRational(1)));
}

TEST_CASE("polynomial separation, below direction") {
    Expr f = parse_expression("x/(x^3 + 8)");
    Separator s = make_separator(f, variable(), BigRational(1));
    SeparationOutcome out = verify_separation(f, s, DomainInterval::open(BigRational(0),
                                                                         BigRational(4)),
                                              Direction::FBelowG);
    REQUIRE(out.status == SeparationOutcome::Status::Separated);
    REQUIRE(out.proof);
    CHECK(out.proof->polynomial_route);
    CHECK(out.proof->poly.quotient == Polynomial({8, 5, 2}));
    CHECK(out.proof->poly.denominator_sign.kind == SignKind::StrictlyPositive);
}

TEST_CASE("polynomial separation, above direction on the whole line") {
    Expr f = parse_expression("x^4");
    Separator s = make_separator(f, parse_expression("x^3"), BigRational(1));
    SeparationOutcome out = verify_separation(f, s, DomainInterval::whole_line(),
                                              Direction::FAboveG);
    REQUIRE(out.status == SeparationOutcome::Status::Separated);
    CHECK(out.proof->poly.quotient == Polynomial({1, 2, 3}));
}

TEST_CASE("separation failure yields an exact witness") {
    // tangent line to 10x^3 - 9x^5 at 1/3 is not a separator on [0, 1]
    Expr f = parse_expression("10*x^3 - 9*x^5");
    Separator s = make_separator(f, variable(), BigRational(1, 3));
    SeparationOutcome out = verify_separation(f, s, DomainInterval::closed(BigRational(0),
                                                                           BigRational(1)),
                                              Direction::FAboveG);
    REQUIRE(out.status == SeparationOutcome::Status::Fails);
    REQUIRE(out.witness);
    CHECK(out.witness->point > BigRational(9, 10));
    CHECK(out.witness->point <= BigRational(1));
    // h+ really is negative there
    BigRational h = evaluate_exact(f, out.witness->point) -
                    evaluate_exact(s.g, out.witness->point);
    CHECK(h < BigRational(0));
    CHECK(out.witness->value.contains(h));
}

TEST_CASE("interval separation for a non-polynomial f") {
    Expr f = parse_expression("-(x*(12 - x^2)^(1/3))");
    Separator s = make_separator(f, variable(), BigRational(2));
    DomainInterval d(Endpoint::rational(BigRational(0)), Endpoint::sqrt_of(BigRational(12)), true,
                     true);
    SeparationOutcome out = verify_separation(f, s, d, Direction::FAboveG, 40);
    REQUIRE(out.status == SeparationOutcome::Status::Separated);
    REQUIRE(out.proof);
    CHECK(!out.proof->polynomial_route);
    CHECK(out.proof->interval.second_derivative.definite_sign() == 1);
}

TEST_CASE("interval separation catches the failing log separator") {
    // g = (3 + ln x)/9 does not dominate x/(x^2+2) near zero
    Expr f = parse_expression("x/(x^2 + 2)");
    Separator s = make_separator(f, parse_expression("ln(x)"), BigRational(1));
    CHECK(s.k == BigRational(1, 9));
    CHECK(s.m == BigRational(1, 3));
    SeparationOutcome out = verify_separation(
        f, s, DomainInterval(Endpoint::rational(BigRational(0)), Endpoint::pos_inf(), true, true),
        Direction::FBelowG, 40);
    REQUIRE(out.status == SeparationOutcome::Status::Fails);
    REQUIRE(out.witness);
    CHECK(out.witness->value.definite_sign() == -1);
}

TEST_CASE("soundness sampling of a separation proof") {
    // 10^4 random points in the domain never violate a Separated verdict
    Expr f = parse_expression("x/(x^3 + 8)");
    Separator s = make_separator(f, variable(), BigRational(1));
    SeparationOutcome out = verify_separation(f, s, DomainInterval::open(BigRational(0),
                                                                         BigRational(4)),
                                              Direction::FBelowG);
    REQUIRE(out.status == SeparationOutcome::Status::Separated);
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(1, 39999);
    for (int i = 0; i < 10000; ++i) {
        BigRational x(num(rng), 10000);
        CHECK(evaluate_exact(f, x) <= evaluate_exact(s.g, x));
    }
}
