#include "ineq/theorems.hpp"

namespace ineq {

namespace {

const BigRational kTight(1, 1000000000000L);

/// Exact point value when the arithmetic allows, tight enclosure otherwise.
RatInterval eval_point(const Expr& e, const BigRational& x) {
    try {
        return RatInterval::point(evaluate_exact(e, x));
    } catch (const IrrationalValue&) {
    }
    BigRational target = kTight;
    RatInterval v = evaluate_point_enclosure(e, x, target);
    for (int i = 0; i < 6 && v.definite_sign() == 0; ++i) {
        target = target / BigRational(1000000);
        v = evaluate_point_enclosure(e, x, target);
    }
    return v;
}

}  // namespace

Expr ConstraintKind::separator_l() const {
    switch (variant) {
        case Variant::PowerSum:
            return alpha == BigRational(1) ? variable() : pow_expr(variable(), alpha);
        case Variant::Product:
            return ln_expr(variable());
        case Variant::GeneralL:
            return l;
    }
    throw Error("unreachable constraint variant");
}

BigRational ConstraintKind::transfer_total() const {
    if (variant != Variant::Product) return total;
    if (total == BigRational(1)) return BigRational(0);  // sum of ln = ln 1
    throw Error("product transfer requires total = 1");
}

std::string ConstraintKind::str() const {
    switch (variant) {
        case Variant::PowerSum:
            if (alpha == BigRational(1)) return "sum = " + total.str();
            return "power_sum " + alpha.str() + " = " + total.str();
        case Variant::Product:
            return "product = " + total.str();
        case Variant::GeneralL:
            return "sum_l " + format_expression(l) + " = " + total.str();
    }
    throw Error("unreachable constraint variant");
}

ConstraintKind ConstraintKind::parse(const std::string& text) {
    auto eq = text.rfind('=');
    if (eq == std::string::npos) throw Error("constraint needs '= total': " + text);
    auto trim = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        std::size_t e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    std::string head = trim(text.substr(0, eq));
    ConstraintKind ck;
    ck.total = BigRational::parse(trim(text.substr(eq + 1)));
    if (head == "sum") {
        ck.variant = Variant::PowerSum;
        ck.alpha = BigRational(1);
    } else if (head == "product") {
        ck.variant = Variant::Product;
    } else if (head.rfind("power_sum", 0) == 0) {
        ck.variant = Variant::PowerSum;
        ck.alpha = BigRational::parse(trim(head.substr(9)));
        if (ck.alpha.is_zero()) throw Error("power_sum alpha must be nonzero (use product)");
    } else if (head.rfind("sum_l", 0) == 0) {
        ck.variant = Variant::GeneralL;
        ck.l = parse_expression(trim(head.substr(5)));
    } else {
        throw Error("unknown constraint: " + text);
    }
    return ck;
}

const char* theorem_name(TheoremReport::Theorem t) {
    switch (t) {
        case TheoremReport::Theorem::T1: return "T1";
        case TheoremReport::Theorem::T2: return "T2";
        case TheoremReport::Theorem::T3: return "T3";
    }
    return "?";
}

const char* verdict_name(TheoremReport::Verdict v) {
    switch (v) {
        case TheoremReport::Verdict::Applies: return "Applies";
        case TheoremReport::Verdict::ConditionViolated: return "ConditionViolated";
        case TheoremReport::Verdict::SeparationUnproven: return "SeparationUnproven";
    }
    return "?";
}

RatInterval power_mean(const BigRational& alpha, const std::vector<BigRational>& values,
                       const BigRational& eps) {
    if (values.empty()) throw Error("power mean of no values");
    for (const auto& v : values)
        if (v.sign() <= 0) throw NonPositiveValue();
    long n = static_cast<long>(values.size());
    if (alpha.is_zero()) {
        BigRational prod(1);
        for (const auto& v : values) prod *= v;
        return nth_root_enclosure(prod, static_cast<unsigned>(n), eps);
    }
    BigRational term_eps = eps / BigRational(8 * n);
    RatInterval s = RatInterval::point(BigRational(0));
    for (const auto& v : values)
        s = s + pow_rat(RatInterval::point(v), alpha.num(), alpha.den(), term_eps);
    RatInterval mean(s.lo / BigRational(n), s.hi / BigRational(n));
    BigRational inv = BigRational(1) / alpha;
    return pow_rat(mean, inv.num(), inv.den(), eps);
}

namespace {

DomainInterval positive_axis() {
    return DomainInterval(Endpoint::rational(BigRational(0)), Endpoint::pos_inf(), true, true);
}

/// {x > 0 : x^alpha < n*x0^alpha} intersected with the problem domain;
/// irrational cut points are replaced by a rational superset bound.
DomainInterval t1_subdomain(const BigRational& alpha, const BigRational& x0, long n,
                            const DomainInterval& domain) {
    DomainInterval cut = positive_axis();
    if (!alpha.is_zero()) {
        BigRational inv = BigRational(1) / alpha;
        if (inv == BigRational(1, 2)) {
            cut = DomainInterval(Endpoint::rational(BigRational(0)),
                                 Endpoint::sqrt_of(BigRational(n) * x0 * x0), true, true);
        } else {
            RatInterval nr = pow_rat(RatInterval::point(BigRational(n)), inv.num(), inv.den(),
                                     BigRational(1, 100000));
            if (alpha.sign() > 0) {
                BigRational b = (nr.is_point() ? nr.lo : nr.hi) * x0;
                cut = DomainInterval(Endpoint::rational(BigRational(0)), Endpoint::rational(b),
                                     true, true);
            } else {
                cut = DomainInterval(Endpoint::rational(nr.lo * x0), Endpoint::pos_inf(), true,
                                     true);
            }
        }
    }
    return intersect(domain, cut);
}

void run_separation(TheoremReport& rep, const Expr& f, const Expr& l, const BigRational& x0,
                    int budget) {
    try {
        Separator s = make_separator(f, l, x0);
        rep.separator = s;
        rep.separation = verify_separation(f, s, rep.required_subdomain, Direction::FAboveG,
                                           budget);
        rep.verdict = rep.separation->status == SeparationOutcome::Status::Separated
                          ? TheoremReport::Verdict::Applies
                          : TheoremReport::Verdict::SeparationUnproven;
    } catch (const Error&) {
        rep.verdict = TheoremReport::Verdict::SeparationUnproven;
    }
}

}  // namespace

TheoremReport check_theorem1(const Expr& f, const BigRational& alpha, const BigRational& x0,
                             long n, const DomainInterval& domain, int budget) {
    TheoremReport rep;
    rep.theorem = TheoremReport::Theorem::T1;
    RatInterval fp = eval_point(differentiate(f), x0);
    TheoremCondition cond;
    if (alpha.is_zero()) {
        cond.name = "f'(x0)>=0";
        cond.value = fp;
        cond.pass = fp.lo.sign() >= 0;
    } else {
        cond.name = "(alpha-1)*f'(x0)<=0";
        cond.value = fp * RatInterval::point(alpha - BigRational(1));
        cond.pass = cond.value.hi.sign() <= 0;
    }
    rep.conditions.push_back(cond);
    try {
        rep.required_subdomain = t1_subdomain(alpha, x0, n, domain);
    } catch (const Error&) {
        rep.verdict = TheoremReport::Verdict::SeparationUnproven;
        return rep;
    }
    if (!cond.pass) {
        rep.verdict = TheoremReport::Verdict::ConditionViolated;
        return rep;
    }
    run_separation(rep, f, variable(), x0, budget);
    return rep;
}

TheoremReport check_theorem2(const Expr& f, const BigRational& alpha, const BigRational& x0,
                             long n, const DomainInterval& domain, int budget) {
    if (alpha.is_zero()) throw Error("theorem 2 requires alpha != 0");
    TheoremReport rep;
    rep.theorem = TheoremReport::Theorem::T2;
    RatInterval fp = eval_point(differentiate(f), x0);
    TheoremCondition cond;
    cond.name = "(alpha-1)*f'(x0)>=0";
    cond.value = fp * RatInterval::point(alpha - BigRational(1));
    cond.pass = cond.value.lo.sign() >= 0;
    rep.conditions.push_back(cond);
    try {
        rep.required_subdomain = intersect(
            domain, DomainInterval(Endpoint::rational(BigRational(0)),
                                   Endpoint::rational(BigRational(n) * x0), true, true));
    } catch (const Error&) {
        rep.verdict = TheoremReport::Verdict::SeparationUnproven;
        return rep;
    }
    if (!cond.pass) {
        rep.verdict = TheoremReport::Verdict::ConditionViolated;
        return rep;
    }
    Expr l = alpha == BigRational(1) ? variable() : pow_expr(variable(), alpha);
    run_separation(rep, f, l, x0, budget);
    if (rep.verdict != TheoremReport::Verdict::Applies && cond.value.is_point() &&
        cond.value.lo.is_zero() && rep.separator) {
        // Sign condition exactly zero: the separator is admissible for either
        // conclusion direction, so a g >= f certificate also counts.
        try {
            SeparationOutcome below = verify_separation(f, *rep.separator, rep.required_subdomain,
                                                        Direction::FBelowG, budget);
            if (below.status == SeparationOutcome::Status::Separated) {
                rep.separation = below;
                rep.verdict = TheoremReport::Verdict::Applies;
            }
        } catch (const Error&) {
        }
    }
    return rep;
}

TheoremReport check_theorem3(const BigRational& a, const BigRational& b, const BigRational& c,
                             const BigRational& d, long n, const BigRational& x0) {
    TheoremReport rep;
    rep.theorem = TheoremReport::Theorem::T3;
    BigRational v1 = BigRational(2) * a * x0 + b;
    BigRational v2 = BigRational(n + 2) * a * x0 + b;
    rep.conditions.push_back({"2a*x0+b>=0", RatInterval::point(v1), v1.sign() >= 0});
    rep.conditions.push_back({"(n+2)*a*x0+b>=0", RatInterval::point(v2), v2.sign() >= 0});
    rep.required_subdomain = DomainInterval::closed(BigRational(0), BigRational(n) * x0);
    Expr x = variable();
    Expr P = add(add(mul(constant(a), pow_expr(x, 3)), mul(constant(b), pow_expr(x, 2))),
                 add(mul(constant(c), x), constant(d)));
    if (!rep.conditions_pass()) {
        rep.verdict = TheoremReport::Verdict::ConditionViolated;
        return rep;
    }
    run_separation(rep, P, x, x0, 40);
    return rep;
}

namespace {

/// Interior point of d where e has the given definite sign.
std::optional<ExprSignWitness> scan_sign_point(const Expr& e, const DomainInterval& d, int want) {
    std::vector<BigRational> pts;
    if (d.lower.is_finite() && d.upper.is_finite()) {
        RatInterval hull = domain_outer_hull(d, BigRational(1, 1000));
        BigRational w = hull.width();
        for (int i = 0; i <= 16; ++i) pts.push_back(hull.lo + w * BigRational(i, 16));
    } else {
        for (long v : {1, 2, 4, 8, -1, -2, -4, -8}) pts.emplace_back(v);
        for (long q : {2, 4, 8, 16}) pts.emplace_back(BigRational(1, q)), pts.emplace_back(BigRational(-1, q));
    }
    for (const auto& x : pts) {
        if (!d.contains(x)) continue;
        try {
            RatInterval v = eval_point(e, x);
            if (v.definite_sign() == want) return ExprSignWitness{x, v};
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

}  // namespace

MonotonicityResult monotonicity_check(const Expr& f, const DomainInterval& d, bool increasing,
                                      int budget) {
    Expr fp = differentiate(f);
    if (is_rational_expr(fp) && to_rational_function(fp).num.is_zero())
        return {MonotonicityResult::Status::Certified, std::nullopt};  // constant f
    ExprSignResult r = expression_sign_on(fp, d, budget);
    auto want = increasing ? ExprSignResult::Kind::Positive : ExprSignResult::Kind::Negative;
    if (r.kind == want) return {MonotonicityResult::Status::Certified, std::nullopt};
    int wrong = increasing ? -1 : 1;
    if (r.kind == ExprSignResult::Kind::Mixed) {
        auto w = increasing ? r.negative_witness : r.positive_witness;
        if (w) return {MonotonicityResult::Status::Refuted, w};
    }
    if (auto w = scan_sign_point(fp, d, wrong))
        return {MonotonicityResult::Status::Refuted, w};
    return {MonotonicityResult::Status::Inconclusive, std::nullopt};
}

DomainSplitCertificate domain_split_prove(const ProblemSpec& spec, const BigRational& t,
                                          int budget) {
    if (!spec.constraint.is_sum()) throw Error("domain split requires a plain sum constraint");
    if (spec.direction != ProblemDirection::SumAtLeast)
        throw Error("domain split requires direction at_least");
    if (spec.domain.lower.is_finite() && spec.domain.lower.kind == Endpoint::Kind::Rational &&
        spec.domain.lower.value.sign() < 0)
        throw Error("domain split requires nonnegative variables");

    DomainSplitCertificate cert;
    cert.t = t;
    BigRational U = BigRational(spec.n) * spec.x0;
    if (spec.domain.upper.kind == Endpoint::Kind::Rational && spec.domain.upper.value < U)
        U = spec.domain.upper.value;
    cert.U = U;
    cert.separator = make_separator(spec.f, variable(), spec.x0);
    cert.n_f_x0 = BigRational(spec.n) * evaluate_exact(spec.f, spec.x0);

    // (1) tangent separation on (lower, t)
    if (spec.domain.lower.compare(t) < 0) {
        DomainInterval low(spec.domain.lower, Endpoint::rational(t), spec.domain.lower_open, true);
        cert.tangent_part = verify_separation(spec.f, cert.separator, low, Direction::FAboveG,
                                              budget);
    } else {
        cert.tangent_part.status = SeparationOutcome::Status::Separated;  // empty burden
    }
    if (cert.tangent_part.status != SeparationOutcome::Status::Separated) {
        cert.failed_subclaim = 1;
        cert.failure_note = "tangent separation fails below the threshold";
        return cert;
    }
    // (2) f >= 0 on the whole domain
    cert.nonnegativity = expression_sign_on(spec.f, spec.domain, budget);
    if (cert.nonnegativity.kind != ExprSignResult::Kind::Positive) {
        cert.failed_subclaim = 2;
        cert.failure_note = "f is not certified nonnegative on the domain";
        return cert;
    }
    // (3) f decreasing on [t, U]
    if (t > U) {
        cert.failed_subclaim = 3;
        cert.failure_note = "threshold exceeds the per-variable upper bound";
        return cert;
    }
    cert.monotonicity = monotonicity_check(spec.f, DomainInterval::closed(t, U), false, budget);
    if (cert.monotonicity.status != MonotonicityResult::Status::Certified) {
        cert.failed_subclaim = 3;
        cert.failure_note = "f is not certified decreasing on [t, U]";
        return cert;
    }
    // (4) f(U) >= n*f(x0)
    cert.f_at_U = evaluate_exact(spec.f, U);
    if (cert.f_at_U < cert.n_f_x0) {
        cert.failed_subclaim = 4;
        cert.failure_note = "f(U) < n*f(x0)";
        return cert;
    }
    cert.failed_subclaim = 0;
    return cert;
}

namespace {

struct SplitMix64 {
    std::uint64_t s;
    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /// Uniform rational in (0, 1] on a 2^-16 grid (coarse keeps the exact
    /// arithmetic downstream cheap).
    BigRational unit() {
        return BigRational(static_cast<long>(next() >> 48) + 1, 1L << 16);
    }
};

bool interval_in_domain(const DomainInterval& d, const RatInterval& x) {
    return d.contains(x.lo) && d.contains(x.hi);
}

/// l(x_n) = r solved exactly for l = p/(c + x); nullopt when not that shape.
std::optional<BigRational> solve_shifted_inverse(const Expr& l, const BigRational& r) {
    if (l->kind != ExprKind::Div || l->a->kind != ExprKind::Const) return std::nullopt;
    const Expr& den = l->b;
    if (den->kind != ExprKind::Add) return std::nullopt;
    BigRational c;
    if (den->a->kind == ExprKind::Const && den->b->kind == ExprKind::Var)
        c = den->a->value;
    else if (den->b->kind == ExprKind::Const && den->a->kind == ExprKind::Var)
        c = den->b->value;
    else
        return std::nullopt;
    if (r.is_zero()) return std::nullopt;
    return l->a->value / r - c;
}

/// Bisection solve of l(x) = r on [lo, hi]; assumes at most one sign change.
std::optional<RatInterval> bisect_solve(const Expr& l, const BigRational& r, BigRational lo,
                                        BigRational hi) {
    auto sign_at = [&](const BigRational& x) -> int {
        try {
            RatInterval v = eval_point(l, x) - RatInterval::point(r);
            return v.definite_sign();
        } catch (const Error&) {
            return 0;
        }
    };
    int slo = sign_at(lo), shi = sign_at(hi);
    if (slo == 0 || shi == 0 || slo == shi) return std::nullopt;
    for (int i = 0; i < 60; ++i) {
        BigRational m = (lo + hi) / BigRational(2);
        int sm = sign_at(m);
        if (sm == 0) return RatInterval(min(lo, hi), max(lo, hi));
        if (sm == slo)
            lo = m;
        else
            hi = m;
    }
    return RatInterval(min(lo, hi), max(lo, hi));
}

}  // namespace

SampleCheckResult jensen_sample_check(const ProblemSpec& spec, long trials, std::uint64_t seed) {
    // A loose tolerance is enough here: a sample only counts as a
    // counterexample when the whole enclosure lies beyond the bound, so
    // wide enclosures can at worst miss a marginal violation, never invent one.
    const BigRational kCoarse(1, 1000000);
    SampleCheckResult res;
    res.rhs = spec.bound;
    SplitMix64 rng{seed};
    const long n = spec.n;
    const ConstraintKind& ck = spec.constraint;
    BigRational inv_alpha(0);
    bool alpha_int = true;
    if (ck.variant == ConstraintKind::Variant::PowerSum) {
        inv_alpha = BigRational(1) / ck.alpha;
        alpha_int = ck.alpha.is_integer();
    }
    // Per-coordinate sampling cap.
    BigRational cap(1);
    if (ck.variant == ConstraintKind::Variant::PowerSum && ck.alpha.sign() > 0 &&
        ck.total.sign() > 0) {
        cap = pow_rat(RatInterval::point(ck.total), inv_alpha.num(), inv_alpha.den(),
                      BigRational(1, 1000))
                  .lo;
    } else if (ck.variant == ConstraintKind::Variant::Product ||
               ck.variant == ConstraintKind::Variant::GeneralL) {
        cap = spec.x0.sign() > 0 ? spec.x0 * BigRational(8) : BigRational(8);
    }

    auto eval_f_at = [&](const RatInterval& xi) -> RatInterval {
        if (xi.is_point()) {
            try {
                return RatInterval::point(evaluate_exact(spec.f, xi.lo));
            } catch (const IrrationalValue&) {
            }
            return evaluate_point_enclosure(spec.f, xi.lo, kCoarse);
        }
        return evaluate_enclosure(spec.f, xi, kCoarse);
    };

    for (long trial = 0; trial < trials; ++trial) {
        ++res.trials_run;
        std::vector<RatInterval> xs;
        bool reject = false;
        if (trial == 0) {
            xs.assign(n, RatInterval::point(spec.x0));  // the equality point
        } else {
            switch (ck.variant) {
                case ConstraintKind::Variant::PowerSum: {
                    if (ck.alpha == BigRational(1)) {
                        std::vector<BigRational> us;
                        BigRational s(0);
                        for (long j = 0; j < n; ++j) {
                            us.push_back(rng.unit());
                            s += us.back();
                        }
                        for (long j = 0; j < n; ++j)
                            xs.push_back(RatInterval::point(us[j] * ck.total / s));
                        break;
                    }
                    RatInterval rest = RatInterval::point(BigRational(0));
                    for (long j = 0; j + 1 < n; ++j) {
                        BigRational xj = rng.unit() * cap;
                        xs.push_back(RatInterval::point(xj));
                        if (alpha_int)
                            rest = rest + RatInterval::point(xj.pow(ck.alpha.num().convert_to<long>()));
                        else
                            rest = rest + pow_rat(RatInterval::point(xj), ck.alpha.num(),
                                                  ck.alpha.den(), kCoarse);
                    }
                    RatInterval r = RatInterval::point(ck.total) - rest;
                    bool odd_root = inv_alpha.den() % 2 == 1 && ck.alpha.sign() > 0;
                    if (r.lo.sign() <= 0 && !odd_root) {
                        reject = true;
                        break;
                    }
                    try {
                        xs.push_back(pow_rat(r, inv_alpha.num(), inv_alpha.den(), kCoarse));
                    } catch (const Error&) {
                        reject = true;
                    }
                    break;
                }
                case ConstraintKind::Variant::Product: {
                    BigRational prod(1);
                    for (long j = 0; j + 1 < n; ++j) {
                        BigRational xj = BigRational(1, 2) + rng.unit() * BigRational(3, 2);
                        xs.push_back(RatInterval::point(xj));
                        prod *= xj;
                    }
                    xs.push_back(RatInterval::point(ck.total / prod));
                    break;
                }
                case ConstraintKind::Variant::GeneralL: {
                    BigRational rest(0);
                    for (long j = 0; j + 1 < n; ++j) {
                        BigRational xj = rng.unit() * cap;
                        if (!spec.domain.contains(xj)) {
                            reject = true;
                            break;
                        }
                        xs.push_back(RatInterval::point(xj));
                        try {
                            rest += evaluate_exact(ck.l, xj);
                        } catch (const Error&) {
                            reject = true;
                            break;
                        }
                    }
                    if (reject) break;
                    BigRational r = ck.total - rest;
                    if (auto exact = solve_shifted_inverse(ck.l, r)) {
                        xs.push_back(RatInterval::point(*exact));
                    } else if (auto enc = bisect_solve(ck.l, r, cap / BigRational(1024), cap)) {
                        xs.push_back(*enc);
                    } else {
                        reject = true;
                    }
                    break;
                }
            }
        }
        if (reject || static_cast<long>(xs.size()) != n) continue;
        RatInterval lhs = RatInterval::point(BigRational(0));
        bool bad = false;
        for (const auto& xi : xs) {
            if (!interval_in_domain(spec.domain, xi)) {
                bad = true;
                break;
            }
            try {
                lhs = lhs + eval_f_at(xi);
            } catch (const Error&) {
                bad = true;
                break;
            }
        }
        if (bad) continue;
        bool violated = spec.direction == ProblemDirection::SumAtLeast ? lhs.hi < spec.bound
                                                                       : lhs.lo > spec.bound;
        if (violated) {
            res.counterexample = true;
            res.lhs = lhs;
            for (const auto& xi : xs) res.point.push_back(xi.mid());
            return res;
        }
    }
    return res;
}

}  // namespace ineq
