#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ineq/calculus.hpp"

namespace ineq {

/// The separating curve g(x) = k*l(x) + m built from the tangency conditions
/// g(x0) = f(x0), g'(x0) = f'(x0).
struct Separator {
    Expr l;
    BigRational k, m, x0;
    Expr g;  // k*l + m
};

/// k = f'(x0)/l'(x0), m = f(x0) - k*l(x0), both exact.
std::pair<BigRational, BigRational> separator_coefficients(const Expr& f, const Expr& l,
                                                           const BigRational& x0);

/// Enclosure variant for points where exact evaluation is unavailable;
/// each interval has width <= eps.
std::pair<RatInterval, RatInterval> separator_coefficients_enclosure(const Expr& f, const Expr& l,
                                                                     const BigRational& x0,
                                                                     const BigRational& eps);

Separator make_separator(const Expr& f, const Expr& l, const BigRational& x0);

enum class Direction { FAboveG, FBelowG };

const char* direction_name(Direction d);
std::optional<Direction> direction_from_name(const std::string& name);

/// Exact certificate: the nonnegative side h+ (f-g or g-f per direction)
/// normalizes to numerator/denominator, and numerator = (x-x0)^2 * quotient.
struct PolynomialCertificate {
    Polynomial numerator, denominator, quotient;
    SignVerdict denominator_sign, quotient_sign;
};

/// Interval certificate: h+ >= 0 via second-order evidence on a neighborhood
/// of x0 (h+(x0)=h+'(x0)=0 and h+'' >= 0 there) plus signed boxes elsewhere.
struct IntervalCertificate {
    RatInterval hull;               // rational outer hull of the domain
    RatInterval tangency_box;       // [x0-r, x0+r]
    RatInterval second_derivative;  // enclosure of h+'' on tangency_box
    std::vector<SignEvidence> boxes;
};

struct SeparationProof {
    Direction direction;
    BigRational x0;
    DomainInterval domain;
    bool polynomial_route = true;
    PolynomialCertificate poly;
    IntervalCertificate interval;
};

struct SeparationOutcome {
    enum class Status { Separated, Fails, Inconclusive };
    Status status = Status::Inconclusive;
    std::optional<SeparationProof> proof;       // Separated
    std::optional<ExprSignWitness> witness;     // Fails: h+ definitely negative here
    std::vector<RatInterval> gaps;              // Inconclusive
};

/// Certifies f >= g (FAboveG) or f <= g (FBelowG) on d. Polynomial route when
/// f - g is a rational function, interval route with a depth budget otherwise.
SeparationOutcome verify_separation(const Expr& f, const Separator& s, const DomainInterval& d,
                                    Direction dir, int budget = 40);

}  // namespace ineq
