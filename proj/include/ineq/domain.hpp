#pragma once

#include <optional>
#include <string>

#include "ineq/interval.hpp"

namespace ineq {

/// One endpoint of a domain: -inf, +inf, a rational, or sqrt(q) for q > 0.
struct Endpoint {
    enum class Kind { NegInf, Rational, Sqrt, PosInf };
    Kind kind = Kind::Rational;
    BigRational value;  // the rational, or q for sqrt(q)

    static Endpoint neg_inf() { return {Kind::NegInf, BigRational(0)}; }
    static Endpoint pos_inf() { return {Kind::PosInf, BigRational(0)}; }
    static Endpoint rational(BigRational q) { return {Kind::Rational, std::move(q)}; }
    static Endpoint sqrt_of(BigRational q) {
        if (q.sign() <= 0) throw Error("sqrt endpoint requires a positive radicand");
        BigRational root;
        if (perfect_nth_root(q, 2, root)) return rational(std::move(root));
        return {Kind::Sqrt, std::move(q)};
    }

    bool is_finite() const { return kind == Kind::Rational || kind == Kind::Sqrt; }

    /// Rational enclosure of a finite endpoint, width <= eps.
    RatInterval enclosure(const BigRational& eps) const;

    /// Exact three-way comparison against a rational (-1, 0, +1); finite only.
    int compare(const BigRational& q) const;

    /// Exact comparison of two finite-or-infinite endpoints.
    static int compare(const Endpoint& a, const Endpoint& b);

    std::string str() const;
};

/// An interval domain with open/closed flags and possibly irrational endpoints.
struct DomainInterval {
    Endpoint lower, upper;
    bool lower_open = true, upper_open = true;

    DomainInterval() : lower(Endpoint::neg_inf()), upper(Endpoint::pos_inf()) {}
    DomainInterval(Endpoint lo, Endpoint hi, bool lo_open, bool hi_open)
        : lower(std::move(lo)), upper(std::move(hi)), lower_open(lo_open), upper_open(hi_open) {
        if (lower.is_finite() || upper.is_finite()) {
            if (Endpoint::compare(lower, upper) >= 0) throw Error("empty domain interval");
        }
    }

    static DomainInterval whole_line() { return DomainInterval(); }
    static DomainInterval closed(BigRational a, BigRational b) {
        return DomainInterval(Endpoint::rational(std::move(a)), Endpoint::rational(std::move(b)),
                              false, false);
    }
    static DomainInterval open(BigRational a, BigRational b) {
        return DomainInterval(Endpoint::rational(std::move(a)), Endpoint::rational(std::move(b)),
                              true, true);
    }

    bool contains(const BigRational& q) const;

    /// "(0, sqrt(3))", "[0, 1]", "(-inf, inf)".
    std::string str() const;
    static DomainInterval parse(const std::string& text);
};

/// Exact intersection; throws Error when the result is empty.
DomainInterval intersect(const DomainInterval& a, const DomainInterval& b);

}  // namespace ineq
