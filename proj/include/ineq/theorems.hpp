#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ineq/tangent.hpp"

namespace ineq {

/// The constraint ∑ l(x_j) = total, where l is x^alpha (PowerSum; alpha=1 is
/// the plain sum), ln x (Product: the stored total is the product itself), or
/// an arbitrary expression (GeneralL).
struct ConstraintKind {
    enum class Variant { PowerSum, Product, GeneralL };
    Variant variant = Variant::PowerSum;
    BigRational alpha = BigRational(1);  // PowerSum only, nonzero
    BigRational total;
    Expr l;  // GeneralL only

    bool is_sum() const { return variant == Variant::PowerSum && alpha == BigRational(1); }
    /// The l used for separator construction and the transfer step.
    Expr separator_l() const;
    /// The transferred right-hand side ∑ l(x_j): total, or ln(total) for Product.
    /// Product requires total = 1 so the value stays rational.
    BigRational transfer_total() const;
    std::string str() const;  // "sum = 4", "power_sum 2 = 3", "product = 1", "sum_l <expr> = 1"
    /// Inverse of str().
    static ConstraintKind parse(const std::string& text);
};

enum class ProblemDirection { SumAtLeast, SumAtMost };

struct ProblemSpec {
    std::string name;
    long n = 1;
    Expr f;
    DomainInterval domain;
    ConstraintKind constraint;
    BigRational x0;
    ProblemDirection direction = ProblemDirection::SumAtLeast;
    BigRational bound;
};

struct TheoremCondition {
    std::string name;
    RatInterval value;  // exact point whenever the arithmetic allows
    bool pass = false;
};

struct TheoremReport {
    enum class Theorem { T1, T2, T3 };
    Theorem theorem = Theorem::T1;
    std::vector<TheoremCondition> conditions;
    DomainInterval required_subdomain;
    std::optional<Separator> separator;
    std::optional<SeparationOutcome> separation;
    enum class Verdict { Applies, ConditionViolated, SeparationUnproven };
    Verdict verdict = Verdict::SeparationUnproven;

    bool conditions_pass() const {
        for (const auto& c : conditions)
            if (!c.pass) return false;
        return true;
    }
};

const char* theorem_name(TheoremReport::Theorem t);
const char* verdict_name(TheoremReport::Verdict v);

/// Enclosure of the power mean c_alpha (geometric mean for alpha = 0);
/// exact point when the value is rational.
RatInterval power_mean(const BigRational& alpha, const std::vector<BigRational>& values,
                       const BigRational& eps);

/// Tangent-line criterion under the constraint ∑ x_j^alpha = n*x0^alpha
/// (alpha = 0 encodes the product constraint): requires (alpha-1)*f'(x0) <= 0
/// and separation on {x > 0 : x^alpha < n*x0^alpha}; concludes ∑f >= n*f(x0).
TheoremReport check_theorem1(const Expr& f, const BigRational& alpha, const BigRational& x0,
                             long n, const DomainInterval& domain, int budget = 40);

/// Power-curve criterion under the plain sum constraint: requires
/// (alpha-1)*f'(x0) >= 0, separator k*x^alpha + m, verified on (0, n*x0).
TheoremReport check_theorem2(const Expr& f, const BigRational& alpha, const BigRational& x0,
                             long n, const DomainInterval& domain, int budget = 40);

/// Cubic criterion for P = a*x^3 + b*x^2 + c*x + d under ∑x_j = n*x0,
/// x_j >= 0: the two linear conditions 2a*x0+b >= 0 and (n+2)a*x0+b >= 0.
TheoremReport check_theorem3(const BigRational& a, const BigRational& b, const BigRational& c,
                             const BigRational& d, long n, const BigRational& x0);

struct MonotonicityResult {
    enum class Status { Certified, Refuted, Inconclusive };
    Status status = Status::Inconclusive;
    std::optional<ExprSignWitness> witness;  // derivative value of the wrong sign
};

MonotonicityResult monotonicity_check(const Expr& f, const DomainInterval& d, bool increasing,
                                      int budget = 40);

/// The four sub-claims of the split strategy at threshold t (Sum constraint,
/// SumAtLeast): (1) tangent separation on (lower, t); (2) f >= 0 on the
/// domain; (3) f decreasing on [t, U]; (4) f(U) >= n*f(x0), U = n*x0 clipped
/// to the domain. failed_subclaim = 0 means all certified.
struct DomainSplitCertificate {
    BigRational t, U;
    Separator separator;
    SeparationOutcome tangent_part;
    ExprSignResult nonnegativity;
    MonotonicityResult monotonicity;
    BigRational f_at_U, n_f_x0;
    int failed_subclaim = 0;
    std::string failure_note;
};

DomainSplitCertificate domain_split_prove(const ProblemSpec& spec, const BigRational& t,
                                          int budget = 40);

/// Deterministic stochastic falsifier: samples the constraint manifold and
/// reports a violation only when it exceeds the evaluation enclosure.
struct SampleCheckResult {
    bool counterexample = false;
    std::vector<BigRational> point;  // rational representatives of the sample
    RatInterval lhs;
    BigRational rhs;
    long trials_run = 0;
};

SampleCheckResult jensen_sample_check(const ProblemSpec& spec, long trials, std::uint64_t seed);

}  // namespace ineq
