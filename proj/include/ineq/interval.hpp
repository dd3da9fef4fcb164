#pragma once

#include "ineq/rational.hpp"

namespace ineq {

/// Closed rational interval [lo, hi]. Every operation returns an interval
/// containing the exact image of its inputs (outward-rounding contract).
struct RatInterval {
    BigRational lo, hi;

    RatInterval() = default;
    RatInterval(BigRational l, BigRational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw Error("interval with lo > hi");
    }
    static RatInterval point(const BigRational& q) { return RatInterval(q, q); }

    BigRational width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    bool contains(const BigRational& q) const { return lo <= q && q <= hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    BigRational mid() const { return (lo + hi) / BigRational(2); }

    /// Definite sign: -1, +1, or 0 when the interval straddles or touches zero.
    int definite_sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        return 0;
    }

    RatInterval operator-() const { return RatInterval(-hi, -lo); }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return RatInterval(a.lo + b.lo, a.hi + b.hi);
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
        return RatInterval(a.lo - b.hi, a.hi - b.lo);
    }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
    /// Hard error when 0 is in b: callers must bisect away from singularities.
    friend RatInterval operator/(const RatInterval& a, const RatInterval& b);

    friend RatInterval hull(const RatInterval& a, const RatInterval& b) {
        return RatInterval(min(a.lo, b.lo), max(a.hi, b.hi));
    }
};

/// Enclosure of x^(1/n), width <= eps; exact point when x is a perfect
/// n-th power. Even n requires x >= 0; odd roots of negatives reduce by sign.
RatInterval nth_root_enclosure(const BigRational& x, unsigned n, const BigRational& eps);

/// Enclosure of ln over the interval (requires lo > 0); width <= eps when
/// the input is a point.
RatInterval ln_enclosure(const RatInterval& x, const BigRational& eps);

/// Enclosure of exp over the interval; width <= eps when the input is a point.
RatInterval exp_enclosure(const RatInterval& x, const BigRational& eps);

/// x^e for integer e; e < 0 requires 0 not in x.
RatInterval pow_int(const RatInterval& x, long e);

/// x^(p/q) with gcd(|p|,q)=1, q >= 1. Even q requires x.lo >= 0; odd q uses
/// the sign-symmetric real root. p < 0 requires 0 not in x.
RatInterval pow_rat(const RatInterval& x, const BigInt& p, const BigInt& q,
                    const BigRational& eps);

}  // namespace ineq
