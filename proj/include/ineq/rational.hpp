#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

#include "ineq/errors.hpp"

namespace ineq {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational, always in canonical form:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}
    BigRational(const BigInt& n) : v_(n) {}
    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DivisionByZero();
        // cpp_rational requires a reduced fraction with a positive denominator
        BigInt n = num, d = den;
        if (d < 0) { n = -n; d = -d; }
        BigInt g = boost::multiprecision::gcd(n, d);
        if (g > 1) { n /= g; d /= g; }
        v_ = Rep(n, d);
    }
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    /// Exact parse of "p", "p/q", or a decimal literal ("0.9" -> 9/10).
    static BigRational parse(const std::string& text);

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_ == 0 ? 0 : (v_ < 0 ? -1 : 1); }

    BigRational operator-() const { return BigRational(Rep(-v_)); }
    BigRational abs() const { return v_ < 0 ? -*this : *this; }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(Rep(a.v_ + b.v_));
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(Rep(a.v_ - b.v_));
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(Rep(a.v_ * b.v_));
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.v_ == 0) throw DivisionByZero();
        return BigRational(Rep(a.v_ / b.v_));
    }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.v_ == 0) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        // Cross-multiply (denominators are positive); much cheaper than the
        // continued-fraction comparison boost::rational would run.
        BigInt lhs = a.num() * b.den();
        BigInt rhs = b.num() * a.den();
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Integer power; negative exponents require a nonzero base.
    BigRational pow(long e) const;

    /// Largest integer <= value.
    BigInt floor() const;
    BigInt ceil() const;
    /// Nearest integer (ties toward zero).
    BigInt round() const;

    /// "p/q", or just "p" for integers.
    std::string str() const;
    /// Decimal string with the given number of significant digits.
    std::string decimal(int significant_digits) const;

private:
    using Rep = boost::multiprecision::cpp_rational;
    explicit BigRational(Rep v) : v_(std::move(v)) {}
    Rep v_;
};

/// Floor of the n-th root of a nonnegative integer.
BigInt integer_nth_root(const BigInt& x, unsigned n);

/// If x is q^n for some rational q >= 0 (x >= 0), returns true and sets root.
bool perfect_nth_root(const BigRational& x, unsigned n, BigRational& root);

inline BigRational min(const BigRational& a, const BigRational& b) { return a < b ? a : b; }
inline BigRational max(const BigRational& a, const BigRational& b) { return a < b ? b : a; }

}  // namespace ineq
