#include "ineq/interval.hpp"

namespace ineq {

namespace mp = boost::multiprecision;

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    BigRational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return RatInterval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw DivisorContainsZero();
    return a * RatInterval(BigRational(1) / b.hi, BigRational(1) / b.lo);
}

RatInterval nth_root_enclosure(const BigRational& x, unsigned n, const BigRational& eps) {
    if (n == 0) throw Error("0th root");
    if (eps.sign() <= 0) throw Error("eps must be positive");
    if (x.sign() < 0) {
        if (n % 2 == 0) throw NegativeRadicand();
        RatInterval r = nth_root_enclosure(-x, n, eps);
        return -r;
    }
    if (x.is_zero()) return RatInterval::point(BigRational(0));

    BigRational root;
    if (perfect_nth_root(x, n, root)) return RatInterval::point(root);

    // One integer nth root on a 1/s grid with 1/s <= eps: enclosure is
    // [r/s, (r+1)/s] where r = floor((x * s^n)^(1/n)).
    BigInt s = eps.den() / eps.num() + 1;
    BigInt r = integer_nth_root(x.num() * boost::multiprecision::pow(s, n) / x.den(), n);
    return RatInterval(BigRational(r, s), BigRational(r + 1, s));
}

namespace {

// Enclosure of 2*atanh(t) for |t| < 1, half-width <= tol.
RatInterval atanh2_series(const BigRational& t, const BigRational& tol) {
    BigRational t2 = t * t;
    BigRational one_minus = BigRational(1) - t2;
    BigRational sum(0);
    BigRational term = t;  // t^(2i+1)
    long denom = 1;
    for (;;) {
        sum += BigRational(2) * term / BigRational(denom);
        term *= t2;
        denom += 2;
        BigRational bound = BigRational(2) * term.abs() / (BigRational(denom) * one_minus);
        if (bound <= tol) return RatInterval(sum - bound, sum + bound);
    }
}

RatInterval ln2_enclosure(const BigRational& tol) {
    return atanh2_series(BigRational(1, 3), tol);
}

RatInterval ln_point(BigRational q, const BigRational& eps) {
    if (q.sign() <= 0) throw NonPositiveArgument();
    long k = 0;
    while (q > BigRational(3, 2)) { q /= BigRational(2); ++k; }
    while (q < BigRational(3, 4)) { q *= BigRational(2); --k; }
    BigRational t = (q - BigRational(1)) / (q + BigRational(1));
    RatInterval series = atanh2_series(t, eps / BigRational(4));
    if (k == 0) return series;
    RatInterval l2 = ln2_enclosure(eps / BigRational(4 * (k < 0 ? -k : k)));
    return RatInterval::point(BigRational(k)) * l2 + series;
}

RatInterval exp_point_once(const BigRational& q, unsigned terms) {
    BigInt k = q.round();
    BigRational r = q - BigRational(k);

    BigRational fact(1), se(0), sr(0), rpow(1);
    for (unsigned i = 0; i < terms; ++i) {
        if (i > 0) fact *= BigRational(static_cast<long>(i));
        se += BigRational(1) / fact;
        sr += rpow / fact;
        rpow *= r;
    }
    BigRational fact_n = fact * BigRational(static_cast<long>(terms));
    RatInterval e_enc(se, se + BigRational(2) / fact_n);
    BigRational rb = BigRational(2) * r.abs().pow(static_cast<long>(terms)) / fact_n;
    RatInterval r_enc(sr - rb, sr + rb);
    long kl = k.convert_to<long>();
    return pow_int(e_enc, kl) * r_enc;
}

RatInterval exp_point(const BigRational& q, const BigRational& eps) {
    for (unsigned terms = 16;; terms *= 2) {
        RatInterval enc = exp_point_once(q, terms);
        if (enc.width() <= eps) return enc;
    }
}

}  // namespace

RatInterval ln_enclosure(const RatInterval& x, const BigRational& eps) {
    if (x.lo.sign() <= 0) throw NonPositiveArgument();
    if (x.is_point()) return ln_point(x.lo, eps);
    return RatInterval(ln_point(x.lo, eps).lo, ln_point(x.hi, eps).hi);
}

RatInterval exp_enclosure(const RatInterval& x, const BigRational& eps) {
    if (x.is_point()) return exp_point(x.lo, eps);
    return RatInterval(exp_point(x.lo, eps).lo, exp_point(x.hi, eps).hi);
}

RatInterval pow_int(const RatInterval& x, long e) {
    if (e == 0) return RatInterval::point(BigRational(1));
    if (e < 0) {
        if (x.contains_zero()) throw DivisorContainsZero();
        return RatInterval::point(BigRational(1)) / pow_int(x, -e);
    }
    BigRational pl = x.lo.pow(e), ph = x.hi.pow(e);
    if (e % 2 == 1) return RatInterval(pl, ph);
    if (x.lo.sign() >= 0) return RatInterval(pl, ph);
    if (x.hi.sign() <= 0) return RatInterval(ph, pl);
    return RatInterval(BigRational(0), max(pl, ph));
}

namespace {

// t^(p/q) at a rational point, q odd or t >= 0.
RatInterval pow_rat_point(const BigRational& t, long p, unsigned q, const BigRational& eps) {
    if (t.sign() < 0 && q % 2 == 0) throw NegativeRadicand();
    if (t.is_zero()) {
        if (p < 0) throw DivisionByZero();
        return RatInterval::point(BigRational(0));
    }
    BigRational base = t.abs().pow(p);
    RatInterval root = nth_root_enclosure(base, q, eps);
    bool negative = t.sign() < 0 && (p % 2 != 0);
    return negative ? -root : root;
}

}  // namespace

RatInterval pow_rat(const RatInterval& x, const BigInt& p, const BigInt& q,
                    const BigRational& eps) {
    if (q <= 0) throw Error("pow_rat requires q >= 1");
    long pl = p.convert_to<long>();
    unsigned ql = q.convert_to<unsigned>();
    if (ql == 1) return pow_int(x, pl);
    if (ql % 2 == 0 && x.lo.sign() < 0)
        throw DomainViolation("even root of an interval with negative values");
    if (pl < 0 && x.contains_zero()) throw DivisorContainsZero();

    // x -> x^(p/q) is monotone on each side of 0; the hull of the endpoint
    // values (plus 0 when it lies inside and p > 0) encloses the image.
    RatInterval r = hull(pow_rat_point(x.lo, pl, ql, eps), pow_rat_point(x.hi, pl, ql, eps));
    if (pl > 0 && x.contains_zero()) r = hull(r, RatInterval::point(BigRational(0)));
    return r;
}

}  // namespace ineq
