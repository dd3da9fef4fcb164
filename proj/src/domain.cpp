#include "ineq/domain.hpp"

#include <cctype>

namespace ineq {

RatInterval Endpoint::enclosure(const BigRational& eps) const {
    switch (kind) {
        case Kind::Rational: return RatInterval::point(value);
        case Kind::Sqrt: return nth_root_enclosure(value, 2, eps);
        default: throw Error("enclosure of an infinite endpoint");
    }
}

int Endpoint::compare(const BigRational& q) const {
    switch (kind) {
        case Kind::NegInf: return -1;
        case Kind::PosInf: return 1;
        case Kind::Rational:
            return value < q ? -1 : (value == q ? 0 : 1);
        case Kind::Sqrt: {
            // sqrt(v) vs q, v > 0.
            if (q.sign() <= 0) return 1;
            BigRational q2 = q * q;
            return value < q2 ? -1 : (value == q2 ? 0 : 1);
        }
    }
    return 0;
}

int Endpoint::compare(const Endpoint& a, const Endpoint& b) {
    if (a.kind == Kind::NegInf) return b.kind == Kind::NegInf ? 0 : -1;
    if (a.kind == Kind::PosInf) return b.kind == Kind::PosInf ? 0 : 1;
    if (b.kind == Kind::NegInf) return 1;
    if (b.kind == Kind::PosInf) return -1;
    if (a.kind == Kind::Rational) return -b.compare(a.value);
    if (b.kind == Kind::Rational) return a.compare(b.value);
    // sqrt vs sqrt
    return a.value < b.value ? -1 : (a.value == b.value ? 0 : 1);
}

std::string Endpoint::str() const {
    switch (kind) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "inf";
        case Kind::Rational: return value.str();
        case Kind::Sqrt: return "sqrt(" + value.str() + ")";
    }
    return {};
}

bool DomainInterval::contains(const BigRational& q) const {
    int cl = lower.is_finite() ? lower.compare(q) : -1;
    if (cl > 0 || (cl == 0 && lower_open)) return false;
    int cu = upper.is_finite() ? upper.compare(q) : 1;
    if (cu < 0 || (cu == 0 && upper_open)) return false;
    return true;
}

std::string DomainInterval::str() const {
    std::string s;
    s += lower_open ? "(" : "[";
    s += lower.str() + ", " + upper.str();
    s += upper_open ? ")" : "]";
    return s;
}

namespace {

Endpoint parse_endpoint(std::string text) {
    // Trim.
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error("empty domain endpoint");
    text = text.substr(b, e - b + 1);
    if (text == "-inf") return Endpoint::neg_inf();
    if (text == "inf" || text == "+inf") return Endpoint::pos_inf();
    if (text.rfind("sqrt(", 0) == 0 && text.back() == ')')
        return Endpoint::sqrt_of(BigRational::parse(text.substr(5, text.size() - 6)));
    return Endpoint::rational(BigRational::parse(text));
}

}  // namespace

DomainInterval DomainInterval::parse(const std::string& text) {
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error("empty domain");
    std::string s = text.substr(b, e - b + 1);
    if (s.size() < 4) throw Error("bad domain: " + text);
    bool lo_open = s.front() == '(';
    bool hi_open = s.back() == ')';
    if ((s.front() != '(' && s.front() != '[') || (s.back() != ')' && s.back() != ']'))
        throw Error("bad domain: " + text);
    std::string inner = s.substr(1, s.size() - 2);
    // Split at the comma that is not inside sqrt(...).
    int depth = 0;
    std::size_t comma = std::string::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        if (inner[i] == '(') ++depth;
        else if (inner[i] == ')') --depth;
        else if (inner[i] == ',' && depth == 0) { comma = i; break; }
    }
    if (comma == std::string::npos) throw Error("bad domain: " + text);
    Endpoint lo = parse_endpoint(inner.substr(0, comma));
    Endpoint hi = parse_endpoint(inner.substr(comma + 1));
    if (!lo.is_finite()) lo_open = true;
    if (!hi.is_finite()) hi_open = true;
    return DomainInterval(lo, hi, lo_open, hi_open);
}

DomainInterval intersect(const DomainInterval& a, const DomainInterval& b) {
    Endpoint lo = a.lower;
    bool lo_open = a.lower_open;
    int c = Endpoint::compare(a.lower, b.lower);
    if (c < 0) {
        lo = b.lower;
        lo_open = b.lower_open;
    } else if (c == 0) {
        lo_open = a.lower_open || b.lower_open;
    }
    Endpoint hi = a.upper;
    bool hi_open = a.upper_open;
    c = Endpoint::compare(a.upper, b.upper);
    if (c > 0) {
        hi = b.upper;
        hi_open = b.upper_open;
    } else if (c == 0) {
        hi_open = a.upper_open || b.upper_open;
    }
    return DomainInterval(lo, hi, lo_open, hi_open);
}

}  // namespace ineq
