#include "ineq/tangent.hpp"

namespace ineq {

std::pair<BigRational, BigRational> separator_coefficients(const Expr& f, const Expr& l,
                                                           const BigRational& x0) {
    BigRational lp = evaluate_exact(differentiate(l), x0);
    if (lp.is_zero()) throw DegenerateSeparator();
    BigRational k = evaluate_exact(differentiate(f), x0) / lp;
    BigRational m = evaluate_exact(f, x0) - k * evaluate_exact(l, x0);
    return {k, m};
}

std::pair<RatInterval, RatInterval> separator_coefficients_enclosure(const Expr& f, const Expr& l,
                                                                     const BigRational& x0,
                                                                     const BigRational& eps) {
    BigRational tight = eps / BigRational(64);
    RatInterval lp = evaluate_point_enclosure(differentiate(l), x0, tight);
    if (lp.contains_zero()) throw DegenerateSeparator();
    RatInterval fp = evaluate_point_enclosure(differentiate(f), x0, tight);
    RatInterval k = fp / lp;
    for (int i = 0; i < 40 && k.width() > eps; ++i) {
        tight = tight / BigRational(64);
        lp = evaluate_point_enclosure(differentiate(l), x0, tight);
        fp = evaluate_point_enclosure(differentiate(f), x0, tight);
        k = fp / lp;
    }
    RatInterval fv = evaluate_point_enclosure(f, x0, tight);
    RatInterval lv = evaluate_point_enclosure(l, x0, tight);
    RatInterval m = fv - k * lv;
    return {k, m};
}

Separator make_separator(const Expr& f, const Expr& l, const BigRational& x0) {
    auto [k, m] = separator_coefficients(f, l, x0);
    Expr g = add(mul(constant(k), l), constant(m));
    return {l, k, m, x0, g};
}

const char* direction_name(Direction d) {
    return d == Direction::FAboveG ? "FAboveG" : "FBelowG";
}

std::optional<Direction> direction_from_name(const std::string& name) {
    if (name == "FAboveG") return Direction::FAboveG;
    if (name == "FBelowG") return Direction::FBelowG;
    return std::nullopt;
}

namespace {

/// Interior rational point of d where p has the given exact sign, avoiding x0.
std::optional<BigRational> find_poly_sign_point(const Polynomial& p, const DomainInterval& d,
                                                int want, const BigRational& avoid) {
    BigRational lo, hi;
    BigRational bound = p.cauchy_root_bound() + BigRational(1);
    lo = d.lower.is_finite() ? d.lower.enclosure(BigRational(1, 1000)).lo : -bound;
    hi = d.upper.is_finite() ? d.upper.enclosure(BigRational(1, 1000)).hi : bound;
    if (lo >= hi) return std::nullopt;
    BigRational w = hi - lo;
    auto try_point = [&](const BigRational& x) -> bool {
        return x != avoid && d.contains(x) && p(x).sign() == want;
    };
    for (int i = 1; i <= 15; ++i) {
        BigRational x = lo + w * BigRational(i, 16);
        if (try_point(x)) return x;
    }
    for (int depth = 2; depth <= 16; ++depth) {
        long parts = 1L << depth;
        for (long i = 1; i < parts; i += 2) {
            BigRational x = lo + w * BigRational(i, parts);
            if (try_point(x)) return x;
        }
    }
    return std::nullopt;
}

SeparationOutcome poly_route(const Expr& hplus, const BigRational& x0, const DomainInterval& d,
                             Direction dir) {
    SeparationOutcome out;
    RationalFunction rf = to_rational_function(hplus);
    SeparationProof proof;
    proof.direction = dir;
    proof.x0 = x0;
    proof.domain = d;
    proof.polynomial_route = true;
    if (rf.num.is_zero()) {  // h identically zero: both directions hold
        proof.poly.numerator = Polynomial();
        proof.poly.denominator = rf.den;
        proof.poly.quotient = Polynomial();
        proof.poly.denominator_sign = sign_on_interval(rf.den, d);
        proof.poly.quotient_sign = SignVerdict{};
        out.status = SeparationOutcome::Status::Separated;
        out.proof = std::move(proof);
        return out;
    }
    SignVerdict den_sv = sign_on_interval(rf.den, d);
    if (den_sv.kind == SignKind::Mixed) {
        out.status = SeparationOutcome::Status::Inconclusive;
        return out;
    }
    int den_sign = den_sv.nonnegative() ? 1 : -1;
    Polynomial quotient = deflate_double_root(rf.num, x0);
    SignVerdict q_sv = sign_on_interval(quotient, d);
    bool ok = den_sign > 0 ? q_sv.nonnegative() : q_sv.nonpositive();
    if (ok) {
        proof.poly.numerator = rf.num;
        proof.poly.denominator = rf.den;
        proof.poly.quotient = quotient;
        proof.poly.denominator_sign = den_sv;
        proof.poly.quotient_sign = q_sv;
        out.status = SeparationOutcome::Status::Separated;
        out.proof = std::move(proof);
        return out;
    }
    // The quotient takes the wrong sign somewhere: produce an exact witness.
    auto w = find_poly_sign_point(quotient, d, -den_sign, x0);
    if (w) {
        BigRational hval = (*w - x0).pow(2) * quotient(*w) / rf.den(*w);
        out.status = SeparationOutcome::Status::Fails;
        out.witness = ExprSignWitness{*w, RatInterval::point(hval)};
        return out;
    }
    out.status = SeparationOutcome::Status::Inconclusive;
    return out;
}

/// Cheap scan for a definite violation before attempting certification;
/// covers unbounded domains (multiplicative grid) and bounded ones (16ths).
std::optional<ExprSignWitness> violation_scan(const Expr& hplus, const BigRational& x0,
                                              const DomainInterval& d) {
    std::vector<BigRational> pts;
    if (d.lower.is_finite() && d.upper.is_finite()) {
        BigRational lo = d.lower.enclosure(BigRational(1, 1000)).hi;
        BigRational hi = d.upper.enclosure(BigRational(1, 1000)).lo;
        if (lo < hi) {
            BigRational w = hi - lo;
            for (int i = 0; i <= 16; ++i) pts.push_back(lo + w * BigRational(i, 16));
        }
    } else if (x0.sign() > 0) {
        BigRational up = x0, down = x0;
        for (int j = 1; j <= 12; ++j) {
            up = up * BigRational(2);
            down = down / BigRational(2);
            pts.push_back(up);
            pts.push_back(down);
        }
    }
    for (const auto& x : pts) {
        if (x == x0 || !d.contains(x)) continue;
        try {
            RatInterval v = evaluate_point_enclosure(hplus, x, BigRational(1, 1000000000000L));
            if (v.definite_sign() < 0) return ExprSignWitness{x, v};
        } catch (const Error&) {
            // Point outside the expression's own domain: skip.
        }
    }
    return std::nullopt;
}

SeparationOutcome interval_route(const Expr& hplus, const BigRational& x0,
                                 const DomainInterval& d, Direction dir, int budget) {
    SeparationOutcome out;
    if (auto w = violation_scan(hplus, x0, d)) {
        out.status = SeparationOutcome::Status::Fails;
        out.witness = std::move(w);
        return out;
    }
    if (!d.lower.is_finite() || !d.upper.is_finite()) {
        out.status = SeparationOutcome::Status::Inconclusive;
        return out;
    }
    RatInterval hull = domain_outer_hull(d, BigRational(1, 1000));

    SeparationProof proof;
    proof.direction = dir;
    proof.x0 = x0;
    proof.domain = d;
    proof.polynomial_route = false;
    proof.interval.hull = hull;

    // Tangency neighborhood: h(x0) = h'(x0) = 0 exactly, so h+ >= 0 near x0
    // follows from h+'' >= 0 there; halve the radius until that is certified.
    Expr h2 = differentiate(differentiate(hplus));
    BigRational r = max(x0 - hull.lo, hull.hi - x0) / BigRational(2);
    bool tangency_ok = false;
    for (int i = 0; i < 30 && r.sign() > 0; ++i) {
        RatInterval box(max(hull.lo, x0 - r), min(hull.hi, x0 + r));
        try {
            RatInterval enc = evaluate_enclosure(h2, box, max(box.width(), BigRational(1, 8)));
            if (enc.definite_sign() > 0) {
                proof.interval.tangency_box = box;
                proof.interval.second_derivative = enc;
                tangency_ok = true;
                break;
            }
        } catch (const Error&) {
        }
        r = r / BigRational(2);
    }
    if (!tangency_ok) {
        out.status = SeparationOutcome::Status::Inconclusive;
        out.gaps.push_back(RatInterval(max(hull.lo, x0 - r), min(hull.hi, x0 + r)));
        return out;
    }

    // Remaining regions: certify h+ > 0 directly by adaptive bisection.
    std::vector<RatInterval> sides;
    if (hull.lo < proof.interval.tangency_box.lo)
        sides.emplace_back(hull.lo, proof.interval.tangency_box.lo);
    if (proof.interval.tangency_box.hi < hull.hi)
        sides.emplace_back(proof.interval.tangency_box.hi, hull.hi);
    for (const auto& side : sides) {
        IntervalSignOutcome res = interval_sign_boxes(hplus, side, budget);
        if (res.has_negative) {
            for (const auto& b : res.boxes) {
                if (b.sign >= 0) continue;
                for (const auto& cand : {b.box.mid(), b.box.lo + b.box.width() / BigRational(4),
                                         b.box.hi - b.box.width() / BigRational(4)}) {
                    if (cand != x0 && d.contains(cand)) {
                        out.status = SeparationOutcome::Status::Fails;
                        out.witness = refine_point_witness(hplus, cand);
                        return out;
                    }
                }
            }
        }
        for (const auto& g : res.gaps) out.gaps.push_back(g);
        for (const auto& b : res.boxes) proof.interval.boxes.push_back(b);
    }
    if (!out.gaps.empty()) {
        out.status = SeparationOutcome::Status::Inconclusive;
        return out;
    }
    out.status = SeparationOutcome::Status::Separated;
    out.proof = std::move(proof);
    return out;
}

}  // namespace

SeparationOutcome verify_separation(const Expr& f, const Separator& s, const DomainInterval& d,
                                    Direction dir, int budget) {
    Expr hplus = dir == Direction::FAboveG ? sub(f, s.g) : sub(s.g, f);
    if (is_rational_expr(hplus)) return poly_route(hplus, s.x0, d, dir);
    return interval_route(hplus, s.x0, d, dir, budget);
}

}  // namespace ineq
