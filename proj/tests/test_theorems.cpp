#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ineq/theorems.hpp"

using namespace ineq;

namespace {
const BigRational kEps(1, 1000000000);
}

TEST_CASE("constraint parse and str round trip") {
    for (const char* s : {"sum = 4", "power_sum 2 = 3", "power_sum 3 = 3", "product = 1",
                          "sum_l 1/(4 + x) = 1"}) {
        ConstraintKind ck = ConstraintKind::parse(s);
        CHECK(ck.str() == s);
    }
    ConstraintKind sum = ConstraintKind::parse("sum = 4");
    CHECK(sum.is_sum());
    CHECK(sum.transfer_total() == BigRational(4));
    ConstraintKind prod = ConstraintKind::parse("product = 1");
    CHECK(prod.transfer_total() == BigRational(0));  // ln 1
    CHECK_THROWS_AS(ConstraintKind::parse("product = 2").transfer_total(), Error);
    CHECK_THROWS_AS(ConstraintKind::parse("power_sum 0 = 3"), Error);
    CHECK_THROWS_AS(ConstraintKind::parse("nonsense = 3"), Error);
}

TEST_CASE("power mean") {
    RatInterval m1 = power_mean(BigRational(1), {BigRational(1), BigRational(2), BigRational(3)},
                                kEps);
    CHECK(m1.contains(BigRational(2)));
    CHECK(m1.width() <= kEps);

    RatInterval m0 = power_mean(BigRational(0), {BigRational(2), BigRational(8)}, kEps);
    CHECK(m0.contains(BigRational(4)));

    RatInterval m2 = power_mean(BigRational(2), {BigRational(1), BigRational(7)}, kEps);
    CHECK(m2.contains(BigRational(5)));

    CHECK_THROWS_AS(power_mean(BigRational(2), {BigRational(-1)}, kEps), NonPositiveValue);
}

TEST_CASE("theorem 1 applies to the cube-root maximization") {
    Expr f = parse_expression("-(x*(12 - x^2)^(1/3))");
    DomainInterval d(Endpoint::rational(BigRational(0)), Endpoint::sqrt_of(BigRational(12)), true,
                     true);
    TheoremReport rep = check_theorem1(f, BigRational(2), BigRational(2), 3, d, 40);
    CHECK(rep.verdict == TheoremReport::Verdict::Applies);
    REQUIRE(rep.conditions.size() == 1);
    CHECK(rep.conditions[0].pass);
    CHECK(rep.conditions[0].value.contains(BigRational(-4, 3)));
    REQUIRE(rep.separation);
    CHECK(rep.separation->status == SeparationOutcome::Status::Separated);
}

TEST_CASE("theorem 1 condition violated for the negated Baltic function") {
    Expr f = parse_expression("-(x/(x^2 + 2))");
    TheoremReport rep = check_theorem1(f, BigRational(0), BigRational(1), 3,
                                       DomainInterval(Endpoint::rational(BigRational(0)),
                                                      Endpoint::pos_inf(), true, true),
                                       40);
    CHECK(rep.verdict == TheoremReport::Verdict::ConditionViolated);
    REQUIRE(rep.conditions.size() == 1);
    CHECK(rep.conditions[0].name == "f'(x0)>=0");
    CHECK(rep.conditions[0].value.contains(BigRational(-1, 9)));
    CHECK(rep.conditions[0].value.is_point());
}

TEST_CASE("theorem 1 on the identity") {
    TheoremReport rep = check_theorem1(variable(), BigRational(1), BigRational(5), 7,
                                       DomainInterval::whole_line(), 40);
    CHECK(rep.verdict == TheoremReport::Verdict::Applies);
}

TEST_CASE("theorem 2 on x^4 with the cubic separator") {
    TheoremReport rep = check_theorem2(parse_expression("x^4"), BigRational(3), BigRational(1), 3,
                                       DomainInterval::whole_line(), 40);
    CHECK(rep.verdict == TheoremReport::Verdict::Applies);
    REQUIRE(rep.separator);
    CHECK(rep.separator->k == BigRational(4, 3));
    CHECK(rep.separator->m == BigRational(-1, 3));
}

TEST_CASE("theorem 2 on x^alpha itself") {
    TheoremReport rep = check_theorem2(parse_expression("x^2"), BigRational(2), BigRational(3), 4,
                                       DomainInterval::whole_line(), 40);
    CHECK(rep.verdict == TheoremReport::Verdict::Applies);
    CHECK(rep.separator->k == BigRational(1));
    CHECK(rep.separator->m == BigRational(0));
}

TEST_CASE("theorem 2 with alpha 1 reduces to the tangent line") {
    TheoremReport rep = check_theorem2(parse_expression("x/(x^3 + 8)"), BigRational(1),
                                       BigRational(1), 4,
                                       DomainInterval::open(BigRational(0), BigRational(4)), 40);
    CHECK(rep.verdict == TheoremReport::Verdict::Applies);
    REQUIRE(rep.separation);
    REQUIRE(rep.separation->proof);
    CHECK(rep.separation->proof->poly.quotient == Polynomial({8, 5, 2}));
}

TEST_CASE("theorem 3 example family") {
    // a=-1, b=2, c=-1, d=0, x0=1/n
    for (long n = 2; n <= 10; ++n) {
        TheoremReport rep = check_theorem3(BigRational(-1), BigRational(2), BigRational(-1),
                                           BigRational(0), n, BigRational(1, n));
        CHECK(rep.verdict == TheoremReport::Verdict::Applies);
        CHECK(rep.conditions[0].value.lo == BigRational(2 * (n - 1), n));
        CHECK(rep.conditions[1].value.lo == BigRational(n - 2, n));
    }
    // Remark 3: a=1, b=-1, n=3, x0=1 passes despite non-convexity
    TheoremReport r3 = check_theorem3(BigRational(1), BigRational(-1), BigRational(0),
                                      BigRational(0), 3, BigRational(1));
    CHECK(r3.verdict == TheoremReport::Verdict::Applies);
    // a=1, b=-5, n=2, x0=1: first condition 2-5 < 0
    TheoremReport bad = check_theorem3(BigRational(1), BigRational(-5), BigRational(0),
                                       BigRational(0), 2, BigRational(1));
    CHECK(bad.verdict == TheoremReport::Verdict::ConditionViolated);
    CHECK(bad.conditions[0].value.lo == BigRational(-3));
    CHECK(!bad.conditions[0].pass);
}

TEST_CASE("monotonicity") {
    Expr f = parse_expression("10*x^3 - 9*x^5");
    CHECK(monotonicity_check(f, DomainInterval::closed(BigRational(9, 10), BigRational(1)), false)
              .status == MonotonicityResult::Status::Certified);
    MonotonicityResult bad =
        monotonicity_check(variable(), DomainInterval::closed(BigRational(0), BigRational(1)),
                           false);
    CHECK(bad.status == MonotonicityResult::Status::Refuted);
    REQUIRE(bad.witness);
    CHECK(monotonicity_check(parse_expression("x^3"),
                             DomainInterval::closed(BigRational(-1), BigRational(1)), true)
              .status == MonotonicityResult::Status::Certified);
}

namespace {

ProblemSpec example3_spec() {
    ProblemSpec spec;
    spec.name = "example3";
    spec.n = 3;
    spec.f = parse_expression("10*x^3 - 9*x^5");
    spec.domain = DomainInterval::closed(BigRational(0), BigRational(1));
    spec.constraint = ConstraintKind::parse("sum = 1");
    spec.x0 = BigRational(1, 3);
    spec.direction = ProblemDirection::SumAtLeast;
    spec.bound = BigRational(1);
    return spec;
}

}  // namespace

TEST_CASE("domain split on the quintic") {
    DomainSplitCertificate cert = domain_split_prove(example3_spec(), BigRational(9, 10));
    CHECK(cert.failed_subclaim == 0);
    CHECK(cert.U == BigRational(1));
    CHECK(cert.f_at_U == BigRational(1));
    CHECK(cert.n_f_x0 == BigRational(1));
    CHECK(cert.tangent_part.status == SeparationOutcome::Status::Separated);
    CHECK(cert.monotonicity.status == MonotonicityResult::Status::Certified);
}

TEST_CASE("domain split fails for a bad threshold") {
    DomainSplitCertificate cert = domain_split_prove(example3_spec(), BigRational(1, 2));
    CHECK(cert.failed_subclaim == 3);  // f is not decreasing on [1/2, 1]
    // exact refutation: f'(7/10) > 0
    Expr fp = differentiate(parse_expression("10*x^3 - 9*x^5"));
    CHECK(evaluate_exact(fp, BigRational(7, 10)) > BigRational(0));
}

TEST_CASE("domain split with threshold at x0") {
    // sub-claim (i) has a nonempty burden since the domain starts below x0
    DomainSplitCertificate cert = domain_split_prove(example3_spec(), BigRational(1, 3));
    CHECK(cert.failed_subclaim != 0);
}

TEST_CASE("jensen falsifier finds no counterexample for Remark 3") {
    ProblemSpec spec;
    spec.name = "remark3";
    spec.n = 3;
    spec.f = parse_expression("x^3 - x^2");
    spec.domain = DomainInterval::closed(BigRational(0), BigRational(3));
    spec.constraint = ConstraintKind::parse("sum = 3");
    spec.x0 = BigRational(1);
    spec.direction = ProblemDirection::SumAtLeast;
    spec.bound = BigRational(0);
    SampleCheckResult r = jensen_sample_check(spec, 10000, 42);
    CHECK(!r.counterexample);
    CHECK(r.trials_run == 10000);
}

TEST_CASE("jensen falsifier catches a tightened bound at the equality point") {
    ProblemSpec spec;
    spec.name = "baltic2011_tight";
    spec.n = 4;
    spec.f = parse_expression("x/(x^3 + 8)");
    spec.domain = DomainInterval::open(BigRational(0), BigRational(4));
    spec.constraint = ConstraintKind::parse("sum = 4");
    spec.x0 = BigRational(1);
    spec.direction = ProblemDirection::SumAtMost;
    spec.bound = BigRational(4, 9) - BigRational(1, 100);
    SampleCheckResult r = jensen_sample_check(spec, 100, 42);
    REQUIRE(r.counterexample);
    CHECK(r.point == std::vector<BigRational>{BigRational(1), BigRational(1), BigRational(1),
                                              BigRational(1)});
}

TEST_CASE("falsifier is deterministic per seed") {
    ProblemSpec spec;
    spec.n = 2;
    spec.f = parse_expression("x^2");
    spec.domain = DomainInterval::closed(BigRational(0), BigRational(2));
    spec.constraint = ConstraintKind::parse("sum = 2");
    spec.x0 = BigRational(1);
    spec.direction = ProblemDirection::SumAtLeast;
    spec.bound = BigRational(2);
    SampleCheckResult a = jensen_sample_check(spec, 500, 99);
    SampleCheckResult b = jensen_sample_check(spec, 500, 99);
    CHECK(a.counterexample == b.counterexample);
    CHECK(a.point == b.point);
    CHECK(a.trials_run == b.trials_run);
}
