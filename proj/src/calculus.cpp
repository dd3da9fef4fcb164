#include "ineq/calculus.hpp"

#include <deque>

namespace ineq {

Expr differentiate(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Const:
            return constant(0);
        case ExprKind::Var:
            return constant(1);
        case ExprKind::Add:
            return add(differentiate(e->a), differentiate(e->b));
        case ExprKind::Sub:
            return sub(differentiate(e->a), differentiate(e->b));
        case ExprKind::Neg:
            return neg(differentiate(e->a));
        case ExprKind::Mul:
            return add(mul(differentiate(e->a), e->b), mul(e->a, differentiate(e->b)));
        case ExprKind::Div:
            return divide(sub(mul(differentiate(e->a), e->b), mul(e->a, differentiate(e->b))),
                          pow_expr(e->b, 2));
        case ExprKind::PowInt: {
            if (e->ipow == 0) return constant(0);
            return mul(mul(constant(e->ipow), pow_expr(e->a, e->ipow - 1)), differentiate(e->a));
        }
        case ExprKind::PowRat:
            return mul(mul(constant(e->rpow), pow_expr(e->a, e->rpow - BigRational(1))),
                       differentiate(e->a));
        case ExprKind::Ln:
            return divide(differentiate(e->a), e->a);
    }
    throw Error("unreachable expression kind");
}

namespace {

Polynomial poly_pow(const Polynomial& p, long e) {
    Polynomial r = Polynomial::constant(BigRational(1));
    for (long i = 0; i < e; ++i) r = r * p;
    return r;
}

RationalFunction rf_raw(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Const:
            return {Polynomial::constant(e->value), Polynomial::constant(BigRational(1))};
        case ExprKind::Var:
            return {Polynomial::x(), Polynomial::constant(BigRational(1))};
        case ExprKind::Add: {
            auto a = rf_raw(e->a), b = rf_raw(e->b);
            return {a.num * b.den + b.num * a.den, a.den * b.den};
        }
        case ExprKind::Sub: {
            auto a = rf_raw(e->a), b = rf_raw(e->b);
            return {a.num * b.den - b.num * a.den, a.den * b.den};
        }
        case ExprKind::Neg: {
            auto a = rf_raw(e->a);
            return {-a.num, a.den};
        }
        case ExprKind::Mul: {
            auto a = rf_raw(e->a), b = rf_raw(e->b);
            return {a.num * b.num, a.den * b.den};
        }
        case ExprKind::Div: {
            auto a = rf_raw(e->a), b = rf_raw(e->b);
            if (b.num.is_zero()) throw DivisionByZero();
            return {a.num * b.den, a.den * b.num};
        }
        case ExprKind::PowInt: {
            auto a = rf_raw(e->a);
            if (e->ipow >= 0) return {poly_pow(a.num, e->ipow), poly_pow(a.den, e->ipow)};
            if (a.num.is_zero()) throw DivisionByZero();
            return {poly_pow(a.den, -e->ipow), poly_pow(a.num, -e->ipow)};
        }
        case ExprKind::PowRat:
        case ExprKind::Ln:
            throw NotRationalFunction();
    }
    throw Error("unreachable expression kind");
}

BigInt int_gcd(BigInt a, BigInt b) { return boost::multiprecision::gcd(a, b); }

/// Scale (num, den) by a common rational so both have integer coefficients
/// with joint content 1 and den's leading coefficient positive.
void integer_normalize(Polynomial& num, Polynomial& den) {
    BigInt l = 1;
    for (const auto& c : num.coeffs()) l = l / int_gcd(l, c.den()) * c.den();
    for (const auto& c : den.coeffs()) l = l / int_gcd(l, c.den()) * c.den();
    BigInt g = 0;
    for (const auto& c : num.coeffs()) g = int_gcd(g, c.num() * (l / c.den()));
    for (const auto& c : den.coeffs()) g = int_gcd(g, c.num() * (l / c.den()));
    if (g == 0) g = 1;
    BigRational scale{l, g};
    if (den.leading().sign() < 0) scale = -scale;
    num = num.scaled(scale);
    den = den.scaled(scale);
}

}  // namespace

RationalFunction to_rational_function(const Expr& e) {
    auto rf = rf_raw(e);
    if (rf.den.is_zero()) throw DivisionByZero();
    if (rf.num.is_zero()) {
        return {Polynomial(), Polynomial::constant(BigRational(1))};
    }
    Polynomial g = Polynomial::gcd(rf.num, rf.den);
    rf.num = Polynomial::divide_with_remainder(rf.num, g).first;
    rf.den = Polynomial::divide_with_remainder(rf.den, g).first;
    integer_normalize(rf.num, rf.den);
    return rf;
}

RatInterval domain_outer_hull(const DomainInterval& d, const BigRational& eps) {
    if (!d.lower.is_finite() || !d.upper.is_finite())
        throw Error("infinite domain has no rational hull");
    return RatInterval(d.lower.enclosure(eps).lo, d.upper.enclosure(eps).hi);
}

IntervalSignOutcome interval_sign_boxes(const Expr& e, const RatInterval& box, int depth) {
    IntervalSignOutcome out;
    struct Task {
        RatInterval box;
        int depth;
    };
    std::deque<Task> work;
    work.push_back({box, depth});
    while (!work.empty()) {
        Task t = std::move(work.front());
        work.pop_front();
        BigRational eps = max(t.box.width() / BigRational(16), BigRational(1, 1000000000000L));
        bool decided = false;
        try {
            RatInterval enc = evaluate_enclosure(e, t.box, eps);
            int s = enc.definite_sign();
            if (s != 0) {
                out.boxes.push_back({t.box, s});
                (s > 0 ? out.has_positive : out.has_negative) = true;
                decided = true;
            }
        } catch (const Error&) {
            // Singularity or domain edge inside the box: keep splitting.
        }
        if (decided) continue;
        if (t.depth <= 0 || t.box.is_point()) {
            out.gaps.push_back(t.box);
            continue;
        }
        BigRational m = t.box.mid();
        work.push_back({RatInterval(t.box.lo, m), t.depth - 1});
        work.push_back({RatInterval(m, t.box.hi), t.depth - 1});
    }
    return out;
}

ExprSignWitness refine_point_witness(const Expr& e, const BigRational& x) {
    BigRational target(1, 8);
    for (int i = 0; i < 80; ++i) {
        RatInterval v = evaluate_point_enclosure(e, x, target);
        if (v.definite_sign() != 0) return {x, v};
        target = target / BigRational(64);
    }
    throw Error("could not separate witness value from zero");
}

namespace {

ExprSignResult sign_via_polynomial(const RationalFunction& rf, const DomainInterval& d) {
    ExprSignResult r;
    if (rf.num.is_zero()) {
        r.kind = ExprSignResult::Kind::Positive;  // identically zero: weakly both
        return r;
    }
    // Sign of num/den matches sign of num*den wherever den != 0.
    Polynomial prod = rf.num * rf.den;
    SignVerdict v = sign_on_interval(prod, d);
    auto lift = [&](const SignWitness& w) {
        return ExprSignWitness{w.point, RatInterval::point(rf(w.point))};
    };
    switch (v.kind) {
        case SignKind::StrictlyPositive:
            r.kind = ExprSignResult::Kind::Positive;
            r.strict = true;
            break;
        case SignKind::NonNegative:
        case SignKind::IdenticallyZero:
            r.kind = ExprSignResult::Kind::Positive;
            break;
        case SignKind::StrictlyNegative:
            r.kind = ExprSignResult::Kind::Negative;
            r.strict = true;
            break;
        case SignKind::NonPositive:
            r.kind = ExprSignResult::Kind::Negative;
            break;
        case SignKind::Mixed:
            r.kind = ExprSignResult::Kind::Mixed;
            if (v.positive_witness) r.positive_witness = lift(*v.positive_witness);
            if (v.negative_witness) r.negative_witness = lift(*v.negative_witness);
            break;
    }
    return r;
}

ExprSignResult sign_via_intervals(const Expr& e, const DomainInterval& d, int budget) {
    ExprSignResult r;
    if (!d.lower.is_finite() || !d.upper.is_finite()) {
        r.kind = ExprSignResult::Kind::Inconclusive;
        return r;
    }
    RatInterval hullbox = domain_outer_hull(d, BigRational(1, 1000));
    IntervalSignOutcome out = interval_sign_boxes(e, hullbox, budget);
    if (out.has_positive && out.has_negative) {
        r.kind = ExprSignResult::Kind::Mixed;
        for (const auto& b : out.boxes) {
            BigRational p = b.box.mid();
            if (b.sign > 0 && !r.positive_witness && d.contains(p))
                r.positive_witness = refine_point_witness(e, p);
            if (b.sign < 0 && !r.negative_witness && d.contains(p))
                r.negative_witness = refine_point_witness(e, p);
        }
        return r;
    }
    if (!out.gaps.empty()) {
        r.kind = ExprSignResult::Kind::Inconclusive;
        r.gaps = out.gaps;
        return r;
    }
    if (out.has_positive) {
        r.kind = ExprSignResult::Kind::Positive;
        r.strict = true;
    } else if (out.has_negative) {
        r.kind = ExprSignResult::Kind::Negative;
        r.strict = true;
    } else {
        r.kind = ExprSignResult::Kind::Inconclusive;
    }
    return r;
}

}  // namespace

ExprSignResult expression_sign_on(const Expr& e, const DomainInterval& d, int budget) {
    if (is_rational_expr(e)) {
        return sign_via_polynomial(to_rational_function(e), d);
    }
    return sign_via_intervals(e, d, budget);
}

ExprSignResult second_derivative_sign(const Expr& e, const DomainInterval& d, int budget) {
    return expression_sign_on(differentiate(differentiate(e)), d, budget);
}

}  // namespace ineq
