#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ineq/polynomial.hpp"

using namespace ineq;

TEST_CASE("basic arithmetic") {
    Polynomial p({1, -2, 1});  // (x-1)^2
    Polynomial q({-1, 1});     // x - 1
    CHECK(q * q == p);
    CHECK(p.degree() == 2);
    CHECK(p(BigRational(3)) == BigRational(4));
    CHECK((p - p).is_zero());
    CHECK((p + q).coeff(0) == BigRational(0));
    CHECK(p.derivative() == Polynomial({-2, 2}));
    CHECK(Polynomial({0}).is_zero());
}

TEST_CASE("division and gcd") {
    Polynomial a({1, -2, 1});
    Polynomial b({-1, 1});
    auto [quot, rem] = Polynomial::divide_with_remainder(a, b);
    CHECK(quot == b);
    CHECK(rem.is_zero());
    CHECK(Polynomial::gcd(a, b) == b);  // monic gcd
    auto [q2, r2] = Polynomial::divide_with_remainder(Polynomial({1, 0, 1}), b);
    CHECK(r2 == Polynomial({2}));
    CHECK_THROWS_AS(Polynomial::divide_with_remainder(a, Polynomial()), Error);
}

TEST_CASE("squarefree and odd multiplicity parts") {
    // x^2 (x-1)^3 (x+2)
    Polynomial p = Polynomial({0, 0, 1}) * Polynomial({-1, 1}) * Polynomial({-1, 1}) *
                   Polynomial({-1, 1}) * Polynomial({2, 1});
    Polynomial sf = p.squarefree_part();
    CHECK(sf.degree() == 3);
    CHECK(sf(BigRational(0)) == BigRational(0));
    CHECK(sf(BigRational(1)) == BigRational(0));
    CHECK(sf(BigRational(-2)) == BigRational(0));
    Polynomial odd = p.odd_multiplicity_part();
    CHECK(odd.degree() == 2);  // sign changes only at 1 and -2
    CHECK(odd(BigRational(1)) == BigRational(0));
    CHECK(odd(BigRational(-2)) == BigRational(0));
    CHECK(odd(BigRational(0)) != BigRational(0));
}

TEST_CASE("sturm root counting") {
    Polynomial p({-1, 0, 1});  // x^2 - 1
    SturmChain chain = SturmChain::build(p);
    CHECK(chain.count_left_open(BigRational(-2), BigRational(2)) == 2);
    CHECK(chain.count_left_open(BigRational(0), BigRational(2)) == 1);
    CHECK(chain.count_left_open(BigRational(-1), BigRational(1)) == 1);  // (a,b] excludes -1

    CHECK(count_roots(p, DomainInterval::closed(BigRational(-2), BigRational(2))) == 2);
    CHECK(count_roots(p, DomainInterval::open(BigRational(-1), BigRational(1))) == 0);
    CHECK(count_roots(p, DomainInterval::closed(BigRational(-1), BigRational(1))) == 2);
}

TEST_CASE("count_roots with sqrt endpoints") {
    // x^2 - 2 has a root at sqrt(2)
    Polynomial p({-2, 0, 1});
    DomainInterval closed_at_root(Endpoint::rational(BigRational(0)),
                                  Endpoint::sqrt_of(BigRational(2)), false, false);
    CHECK(count_roots(p, closed_at_root) == 1);
    DomainInterval open_at_root(Endpoint::rational(BigRational(0)),
                                Endpoint::sqrt_of(BigRational(2)), false, true);
    CHECK(count_roots(p, open_at_root) == 0);
    // sqrt of a perfect square normalizes to a rational endpoint
    CHECK(Endpoint::sqrt_of(BigRational(4)).kind == Endpoint::Kind::Rational);
}

TEST_CASE("sign verdicts") {
    DomainInterval whole = DomainInterval::whole_line();
    CHECK(sign_on_interval(Polynomial({8, 5, 2}), whole).kind == SignKind::StrictlyPositive);
    CHECK(sign_on_interval(Polynomial({1, 2, 3}), whole).kind == SignKind::StrictlyPositive);
    CHECK(sign_on_interval(Polynomial({0, 0, 2, 1}),
                           DomainInterval::closed(BigRational(0), BigRational(2)))
              .kind == SignKind::NonNegative);
    CHECK(sign_on_interval(Polynomial(), whole).kind == SignKind::IdenticallyZero);

    SignVerdict mixed = sign_on_interval(Polynomial({-1, 0, 1}),
                                         DomainInterval::closed(BigRational(-3), BigRational(3)));
    CHECK(mixed.kind == SignKind::Mixed);
    REQUIRE(mixed.positive_witness);
    REQUIRE(mixed.negative_witness);
    CHECK(Polynomial({-1, 0, 1})(mixed.positive_witness->point) > BigRational(0));
    CHECK(Polynomial({-1, 0, 1})(mixed.negative_witness->point) < BigRational(0));

    // 9x^3 + 6x^2 - 7x - 16/3 on [0, 9/10]: strictly negative, no roots
    Polynomial h(std::vector<BigRational>{BigRational(-16, 3), BigRational(-7), BigRational(6),
                                          BigRational(9)});
    SignVerdict v = sign_on_interval(h, DomainInterval::closed(BigRational(0), BigRational(9, 10)));
    CHECK(v.kind == SignKind::StrictlyNegative);
    CHECK(v.root_count == 0);
}

TEST_CASE("root at an open endpoint does not spoil a weak verdict") {
    // x(x+1) on (0, 1]: root exactly at the open endpoint
    SignVerdict v = sign_on_interval(Polynomial({0, 1, 1}),
                                     DomainInterval(Endpoint::rational(BigRational(0)),
                                                    Endpoint::rational(BigRational(1)), true,
                                                    false));
    CHECK(v.nonnegative());
}

TEST_CASE("deflate_double_root") {
    // 3x^4 - 4x^3 + 1 = (x-1)^2 (3x^2 + 2x + 1)
    Polynomial p({1, 0, 0, -4, 3});
    CHECK(deflate_double_root(p, BigRational(1)) == Polynomial({1, 2, 3}));
    // Baltic numerator 2x^4 + x^3 - 11x + 8 = (x-1)^2 (2x^2 + 5x + 8)
    Polynomial q({8, -11, 0, 1, 2});
    CHECK(deflate_double_root(q, BigRational(1)) == Polynomial({8, 5, 2}));
    // x^5 - 3x^3 + 2x^2 = (x-1)^2 (x^3 + 2x^2)
    Polynomial r({0, 0, 2, -3, 0, 1});
    CHECK(deflate_double_root(r, BigRational(1)) == Polynomial({0, 0, 2, 1}));
    CHECK_THROWS_AS(deflate_double_root(Polynomial({-1, 1}), BigRational(1)), NotDoubleRoot);
    CHECK_THROWS_AS(deflate_double_root(p, BigRational(2)), NotDoubleRoot);
}

TEST_CASE("cauchy bound contains all real roots") {
    Polynomial p({-6, 11, -6, 1});  // roots 1, 2, 3
    BigRational b = p.cauchy_root_bound();
    CHECK(b >= BigRational(3));
    CHECK(count_roots(p, DomainInterval::closed(-b, b)) == 3);
}
