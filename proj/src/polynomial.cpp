#include "ineq/polynomial.hpp"

#include <algorithm>

namespace ineq {

Polynomial Polynomial::monomial(BigRational c, std::size_t d) {
    if (c.is_zero()) return Polynomial();
    std::vector<BigRational> v(d + 1, BigRational(0));
    v[d] = std::move(c);
    return Polynomial(std::move(v));
}

BigRational Polynomial::operator()(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<BigRational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * BigRational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigRational> v(std::max(a.c_.size(), b.c_.size()), BigRational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<BigRational> v(std::max(a.c_.size(), b.c_.size()), BigRational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<BigRational> v(a.c_.size() + b.c_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const { return scaled(BigRational(-1)); }

Polynomial Polynomial::scaled(const BigRational& k) const {
    if (k.is_zero()) return Polynomial();
    std::vector<BigRational> v(c_);
    for (auto& q : v) q *= k;
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divide_with_remainder(const Polynomial& a,
                                                                    const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZeroPolynomial();
    Polynomial r = a;
    if (a.degree() < b.degree()) return {Polynomial(), r};
    std::vector<BigRational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                               BigRational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        BigRational f = r.leading() / b.leading();
        q[shift] = f;
        r = r - (b * Polynomial::monomial(f, shift));
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    if (a.is_zero() && b.is_zero()) return Polynomial();
    while (!b.is_zero()) {
        Polynomial r = divide_with_remainder(a, b).second;
        // Normalize to keep coefficients small; scaling does not change the gcd.
        if (!r.is_zero()) r = r.scaled(BigRational(1) / r.leading());
        a = std::move(b);
        b = std::move(r);
    }
    return a.scaled(BigRational(1) / a.leading());
}

Polynomial Polynomial::squarefree_part() const {
    if (is_zero() || degree() == 0) return *this;
    Polynomial g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    return divide_with_remainder(*this, g).first;
}

Polynomial Polynomial::odd_multiplicity_part() const {
    if (is_zero() || degree() == 0) return *this;
    Polynomial g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    // Yun's squarefree decomposition.
    Polynomial w = divide_with_remainder(*this, g).first;
    Polynomial y = divide_with_remainder(derivative(), g).first;
    Polynomial z = y - w.derivative();
    Polynomial odd = Polynomial::constant(BigRational(1));
    for (int mult = 1; w.degree() > 0; ++mult) {
        Polynomial a = gcd(w, z);
        if (mult % 2 == 1 && a.degree() > 0) odd = odd * a;
        w = divide_with_remainder(w, a).first;
        y = divide_with_remainder(z, a).first;
        z = y - w.derivative();
    }
    return odd;
}

BigRational Polynomial::cauchy_root_bound() const {
    if (degree() <= 0) return BigRational(1);
    BigRational m(0);
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) m = max(m, (c_[i] / leading()).abs());
    return m + BigRational(1);
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (long d = degree(); d >= 0; --d) {
        const BigRational& c = coeff(static_cast<std::size_t>(d));
        if (c.is_zero()) continue;
        if (out.empty()) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        BigRational a = c.abs();
        if (d == 0 || a != BigRational(1)) {
            out += a.str();
            if (d > 0) out += "*";
        }
        if (d > 0) out += d == 1 ? "x" : "x^" + std::to_string(d);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sturm chains and root counting
// ---------------------------------------------------------------------------

SturmChain SturmChain::build(const Polynomial& p) {
    SturmChain chain;
    chain.seq.push_back(p);
    if (p.degree() <= 0) return chain;
    chain.seq.push_back(p.derivative());
    for (;;) {
        const Polynomial& a = chain.seq[chain.seq.size() - 2];
        const Polynomial& b = chain.seq.back();
        Polynomial r = -Polynomial::divide_with_remainder(a, b).second;
        if (r.is_zero()) break;
        // Positive rescale to tame coefficient growth.
        r = r.scaled(BigRational(1) / r.leading().abs());
        chain.seq.push_back(std::move(r));
        if (chain.seq.back().degree() == 0) break;
    }
    return chain;
}

int SturmChain::variations_at(const BigRational& x) const {
    int variations = 0, prev = 0;
    for (const Polynomial& p : seq) {
        int s = p(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

long SturmChain::count_left_open(const BigRational& a, const BigRational& b) const {
    if (a >= b) return 0;
    return variations_at(a) - variations_at(b);
}

namespace {

// True iff sqrt(s) (irrational) is a root: x^2 - s must divide p exactly.
bool sqrt_is_root(const Polynomial& p, const BigRational& s) {
    Polynomial divisor(std::vector<BigRational>{-s, BigRational(0), BigRational(1)});
    return Polynomial::divide_with_remainder(p, divisor).second.is_zero();
}

// Move q off the roots of p by small steps in the given direction.
BigRational nudge_off_roots(const Polynomial& p, BigRational q, BigRational step, int dir) {
    while (p(q).is_zero()) {
        q += BigRational(dir) * step;
        step /= BigRational(3);
    }
    return q;
}

// Rational bracket [l, u] around sqrt(s) containing exactly the expected
// number of roots of sf (1 if sqrt(s) itself is one, else 0).
std::pair<BigRational, BigRational> isolate_sqrt(const SturmChain& chain, const Polynomial& sf,
                                                 const BigRational& s, bool root_at,
                                                 BigRational eps) {
    for (int iter = 0; iter < 220; ++iter) {
        RatInterval enc = nth_root_enclosure(s, 2, eps);
        BigRational l = nudge_off_roots(sf, enc.lo, eps / BigRational(7), -1);
        BigRational u = nudge_off_roots(sf, enc.hi, eps / BigRational(7), +1);
        if (chain.count_left_open(l, u) == (root_at ? 1 : 0)) return {l, u};
        eps /= BigRational(4);
    }
    throw Error("failed to isolate a sqrt endpoint against the polynomial's roots");
}

struct ResolvedBounds {
    BigRational a, b;  // roots of sf in d = count in (a, b] + extra
    long extra = 0;
};

ResolvedBounds resolve_bounds(const SturmChain& chain, const Polynomial& sf,
                              const DomainInterval& d, BigRational eps) {
    for (int iter = 0; iter < 220; ++iter, eps /= BigRational(4)) {
        ResolvedBounds rb;
        BigRational bound = sf.cauchy_root_bound() + BigRational(1);

        switch (d.lower.kind) {
            case Endpoint::Kind::NegInf: rb.a = -bound; break;
            case Endpoint::Kind::Rational:
                rb.a = d.lower.value;
                if (!d.lower_open && sf(rb.a).is_zero()) ++rb.extra;
                break;
            case Endpoint::Kind::Sqrt: {
                bool root_at = sqrt_is_root(sf, d.lower.value);
                auto [l, u] = isolate_sqrt(chain, sf, d.lower.value, root_at, eps);
                rb.a = u;
                if (root_at && !d.lower_open) ++rb.extra;
                break;
            }
            case Endpoint::Kind::PosInf: throw Error("bad lower endpoint");
        }
        switch (d.upper.kind) {
            case Endpoint::Kind::PosInf:
                rb.b = max(bound, rb.a + BigRational(1));
                break;
            case Endpoint::Kind::Rational:
                rb.b = d.upper.value;
                if (d.upper_open && sf(rb.b).is_zero()) --rb.extra;
                break;
            case Endpoint::Kind::Sqrt: {
                bool root_at = sqrt_is_root(sf, d.upper.value);
                auto [l, u] = isolate_sqrt(chain, sf, d.upper.value, root_at, eps);
                rb.b = l;
                if (root_at && !d.upper_open) ++rb.extra;
                break;
            }
            case Endpoint::Kind::NegInf: throw Error("bad upper endpoint");
        }
        if (d.lower.kind == Endpoint::Kind::NegInf) rb.a = min(rb.a, rb.b - BigRational(1));
        if (rb.a < rb.b || (rb.a == rb.b && rb.extra >= 0)) return rb;
        // Sqrt brackets overlapped the opposite endpoint; retry tighter.
    }
    throw Error("failed to resolve domain bounds");
}

}  // namespace

long count_roots(const Polynomial& p, const DomainInterval& d) {
    if (p.is_zero()) throw Error("count_roots of the zero polynomial");
    if (p.degree() == 0) return 0;
    Polynomial sf = p.squarefree_part();
    SturmChain chain = SturmChain::build(sf);
    ResolvedBounds rb = resolve_bounds(chain, sf, d, BigRational(1, 16));
    return chain.count_left_open(rb.a, rb.b) + rb.extra;
}

const char* sign_kind_name(SignKind k) {
    switch (k) {
        case SignKind::NonNegative: return "NonNegative";
        case SignKind::NonPositive: return "NonPositive";
        case SignKind::StrictlyPositive: return "StrictlyPositive";
        case SignKind::StrictlyNegative: return "StrictlyNegative";
        case SignKind::IdenticallyZero: return "IdenticallyZero";
        case SignKind::Mixed: return "Mixed";
    }
    return "?";
}

std::optional<SignKind> sign_kind_from_name(const std::string& name) {
    for (SignKind k : {SignKind::NonNegative, SignKind::NonPositive, SignKind::StrictlyPositive,
                       SignKind::StrictlyNegative, SignKind::IdenticallyZero, SignKind::Mixed}) {
        if (name == sign_kind_name(k)) return k;
    }
    return std::nullopt;
}

namespace {

// Rational sampling hull strictly usable for interior witnesses.
struct SampleHull {
    BigRational a, b;
};

SampleHull sample_hull(const Polynomial& p, const DomainInterval& d, const BigRational& eps) {
    SampleHull h;
    BigRational bound = p.cauchy_root_bound() + BigRational(1);
    switch (d.lower.kind) {
        case Endpoint::Kind::NegInf: h.a = -bound; break;
        case Endpoint::Kind::Rational: h.a = d.lower.value; break;
        case Endpoint::Kind::Sqrt: h.a = d.lower.enclosure(eps).hi; break;
        default: throw Error("bad lower endpoint");
    }
    switch (d.upper.kind) {
        case Endpoint::Kind::PosInf: h.b = max(bound, h.a + BigRational(1)); break;
        case Endpoint::Kind::Rational: h.b = d.upper.value; break;
        case Endpoint::Kind::Sqrt: h.b = d.upper.enclosure(eps).lo; break;
        default: throw Error("bad upper endpoint");
    }
    if (d.lower.kind == Endpoint::Kind::NegInf) h.a = min(h.a, h.b - BigRational(1));
    if (h.a >= h.b) throw Error("degenerate sampling hull");
    return h;
}

struct GridSigns {
    std::vector<SignWitness> positives, negatives;
};

GridSigns interior_grid_signs(const Polynomial& p, const SampleHull& h) {
    GridSigns g;
    for (int i = 1; i <= 9; ++i) {
        BigRational t = h.a + (h.b - h.a) * BigRational(i, 10);
        int s = p(t).sign();
        if (s > 0) g.positives.push_back({t, 1});
        if (s < 0) g.negatives.push_back({t, -1});
    }
    return g;
}

// Max-separation opposite-sign pair; deterministic.
std::pair<SignWitness, SignWitness> pick_witness_pair(const GridSigns& g) {
    const SignWitness& pmin = g.positives.front();
    const SignWitness& pmax = g.positives.back();
    const SignWitness& nmin = g.negatives.front();
    const SignWitness& nmax = g.negatives.back();
    BigRational span1 = (nmax.point - pmin.point).abs();
    BigRational span2 = (pmax.point - nmin.point).abs();
    if (span1 >= span2) return {pmin, nmax};
    return {pmax, nmin};
}

}  // namespace

SignVerdict sign_on_interval(const Polynomial& p, const DomainInterval& d) {
    SignVerdict verdict;
    if (p.is_zero()) {
        verdict.kind = SignKind::IdenticallyZero;
        return verdict;
    }

    BigRational eps(1, 1024);
    SampleHull hull = sample_hull(p, d, eps);
    GridSigns grid = interior_grid_signs(p, hull);

    if (!grid.positives.empty() && !grid.negatives.empty()) {
        auto [wp, wn] = pick_witness_pair(grid);
        verdict.kind = SignKind::Mixed;
        verdict.positive_witness = wp;
        verdict.negative_witness = wn;
        verdict.root_count = count_roots(p, d);
        return verdict;
    }

    DomainInterval interior(d.lower, d.upper, true, true);
    Polynomial odd = p.odd_multiplicity_part();
    long flips = odd.degree() > 0 ? count_roots(odd, interior) : 0;

    if (flips == 0) {
        verdict.root_count = count_roots(p, d);
        int sigma = 0;
        if (!grid.positives.empty()) sigma = 1;
        if (!grid.negatives.empty()) sigma = -1;
        if (sigma == 0) {
            long k = 2 * std::max<long>(p.degree(), 1) + 3;
            for (long j = 1; j < k && sigma == 0; ++j) {
                BigRational t = hull.a + (hull.b - hull.a) * BigRational(j, k);
                sigma = p(t).sign();
                if (sigma != 0) {
                    SignWitness w{t, sigma};
                    (sigma > 0 ? verdict.positive_witness : verdict.negative_witness) = w;
                }
            }
            if (sigma == 0) throw Error("could not sample a nonzero value");
        } else {
            SignWitness w = sigma > 0 ? grid.positives.front() : grid.negatives.front();
            (sigma > 0 ? verdict.positive_witness : verdict.negative_witness) = w;
        }
        if (verdict.root_count == 0)
            verdict.kind = sigma > 0 ? SignKind::StrictlyPositive : SignKind::StrictlyNegative;
        else
            verdict.kind = sigma > 0 ? SignKind::NonNegative : SignKind::NonPositive;
        return verdict;
    }

    // A sign change exists strictly inside; refine dyadically until a pair
    // of rational interior points with opposite exact signs appears.
    for (int attempt = 0; attempt < 12; ++attempt) {
        for (int depth = 2; depth <= 14; ++depth) {
            GridSigns fine;
            long cells = 1L << depth;
            for (long i = 1; i < cells; ++i) {
                BigRational t = hull.a + (hull.b - hull.a) * BigRational(i, cells);
                int s = p(t).sign();
                if (s > 0) fine.positives.push_back({t, 1});
                if (s < 0) fine.negatives.push_back({t, -1});
                if (!fine.positives.empty() && !fine.negatives.empty()) break;
            }
            if (!fine.positives.empty() && !fine.negatives.empty()) {
                verdict.kind = SignKind::Mixed;
                verdict.positive_witness = fine.positives.front();
                verdict.negative_witness = fine.negatives.front();
                verdict.root_count = count_roots(p, d);
                return verdict;
            }
        }
        eps /= BigRational(64);
        hull = sample_hull(p, d, eps);
    }
    throw Error("sign search failed to find mixed-sign witnesses");
}

Polynomial deflate_double_root(const Polynomial& p, const BigRational& x0) {
    if (p.is_zero()) return Polynomial();
    Polynomial factor(std::vector<BigRational>{-x0, BigRational(1)});
    auto [q1, r1] = Polynomial::divide_with_remainder(p, factor);
    if (!r1.is_zero()) throw NotDoubleRoot("p(x0) = " + p(x0).str() + " is nonzero");
    auto [q2, r2] = Polynomial::divide_with_remainder(q1, factor);
    if (!r2.is_zero()) throw NotDoubleRoot("x0 is only a simple root");
    return q2;
}

}  // namespace ineq
