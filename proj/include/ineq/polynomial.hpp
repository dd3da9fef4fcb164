#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ineq/domain.hpp"
#include "ineq/rational.hpp"

namespace ineq {

/// Dense univariate polynomial with exact rational coefficients,
/// stored lowest degree first; the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static Polynomial constant(BigRational v) { return Polynomial(std::vector<BigRational>{std::move(v)}); }
    static Polynomial x() { return Polynomial({0, 1}); }
    /// c * x^d
    static Polynomial monomial(BigRational c, std::size_t d);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    BigRational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }
    const std::vector<BigRational>& coeffs() const { return c_; }
    const BigRational& leading() const { return c_.back(); }

    BigRational operator()(const BigRational& x) const;

    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial scaled(const BigRational& k) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<Polynomial, Polynomial> divide_with_remainder(const Polynomial& a,
                                                                   const Polynomial& b);
    /// Monic gcd.
    static Polynomial gcd(Polynomial a, Polynomial b);

    /// p / gcd(p, p'): same roots, all simple.
    Polynomial squarefree_part() const;
    /// Product of the squarefree factors of odd multiplicity (Yun);
    /// its roots are exactly the points where p changes sign.
    Polynomial odd_multiplicity_part() const;

    /// All real roots lie in [-bound, bound].
    BigRational cauchy_root_bound() const;

    /// Human-readable form, highest degree first.
    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<BigRational> c_;
};

/// Sturm chain: p, p', then negated remainders down to a constant.
struct SturmChain {
    std::vector<Polynomial> seq;

    static SturmChain build(const Polynomial& p);
    int variations_at(const BigRational& x) const;
    /// Number of distinct roots in (a, b].
    long count_left_open(const BigRational& a, const BigRational& b) const;
};

/// Number of distinct real roots of p in d (open endpoints excluded;
/// sqrt endpoints resolved exactly).
long count_roots(const Polynomial& p, const DomainInterval& d);

enum class SignKind {
    NonNegative,
    NonPositive,
    StrictlyPositive,
    StrictlyNegative,
    IdenticallyZero,
    Mixed
};

struct SignWitness {
    BigRational point;
    int sign;  // exact sign of p at point, never 0
};

/// Rigorous sign classification of a polynomial on an interval.
struct SignVerdict {
    SignKind kind = SignKind::IdenticallyZero;
    std::optional<SignWitness> positive_witness;
    std::optional<SignWitness> negative_witness;
    long root_count = 0;

    bool nonnegative() const {
        return kind == SignKind::NonNegative || kind == SignKind::StrictlyPositive ||
               kind == SignKind::IdenticallyZero;
    }
    bool nonpositive() const {
        return kind == SignKind::NonPositive || kind == SignKind::StrictlyNegative ||
               kind == SignKind::IdenticallyZero;
    }
    bool strict() const {
        return kind == SignKind::StrictlyPositive || kind == SignKind::StrictlyNegative;
    }
};

const char* sign_kind_name(SignKind k);
std::optional<SignKind> sign_kind_from_name(const std::string& name);

/// Classifies the sign of p on d. Verdicts are computed on the closure;
/// a root exactly at an open endpoint does not spoil NonNegative/NonPositive.
SignVerdict sign_on_interval(const Polynomial& p, const DomainInterval& d);

/// Returns q with p = (x - x0)^2 * q exactly, or throws NotDoubleRoot.
Polynomial deflate_double_root(const Polynomial& p, const BigRational& x0);

}  // namespace ineq
