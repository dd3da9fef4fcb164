#include "ineq/rational.hpp"

#include <cctype>

namespace ineq {

namespace mp = boost::multiprecision;

BigRational BigRational::parse(const std::string& text) {
    std::size_t i = 0, n = text.size();
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t end = n;
    while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (i == end) throw Error("empty rational literal");

    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw Error("bad rational literal: " + text);
        return BigInt(text.substr(start, pos - start));
    };

    BigInt intpart = digits(i);
    BigRational value(intpart);
    if (i < end && text[i] == '/') {
        ++i;
        BigInt den = digits(i);
        if (den == 0) throw DivisionByZero();
        value = BigRational(intpart, den);
    } else if (i < end && text[i] == '.') {
        ++i;
        std::size_t start = i;
        BigInt frac = digits(i);
        BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(i - start));
        value = BigRational(intpart * scale + frac, scale);
    }
    if (i != end) throw Error("bad rational literal: " + text);
    return negative ? -value : value;
}

BigRational BigRational::pow(long e) const {
    if (e == 0) return BigRational(1);
    if (is_zero() && e < 0) throw DivisionByZero();
    unsigned mag = static_cast<unsigned>(e < 0 ? -e : e);
    BigInt pn = mp::pow(num(), mag);
    BigInt pd = mp::pow(den(), mag);
    return e > 0 ? BigRational(pn, pd) : BigRational(pd, pn);
}

BigInt BigRational::floor() const {
    BigInt q = num() / den();
    if (num() < 0 && q * den() != num()) --q;
    return q;
}

BigInt BigRational::ceil() const {
    BigInt q = num() / den();
    if (num() > 0 && q * den() != num()) ++q;
    return q;
}

BigInt BigRational::round() const {
    // Nearest integer, ties toward zero.
    BigInt twice = 2 * num() + (num() < 0 ? -den() : den());
    BigInt q = twice / (2 * den());
    BigRational r = *this - BigRational(q);
    if (r > BigRational(1, 2)) ++q;
    if (r < BigRational(-1, 2)) --q;
    return q;
}

std::string BigRational::str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
}

std::string BigRational::decimal(int sig) const {
    if (sig < 1) sig = 1;
    if (is_zero()) return "0";
    BigRational a = abs();
    // Decimal exponent e with 10^e <= a < 10^(e+1).
    long e = 0;
    BigRational ten(10);
    BigRational t = a;
    while (t >= ten) { t /= ten; ++e; }
    while (t < BigRational(1)) { t *= ten; --e; }
    // sig digits, round half away from zero.
    BigRational scaled = a * ten.pow(sig - 1 - e);
    BigInt digits = (scaled + BigRational(1, 2)).floor();
    std::string ds = digits.str();
    if (static_cast<int>(ds.size()) > sig) { ++e; ds.pop_back(); }  // rounding overflow

    std::string out;
    if (e >= sig - 1 && e < sig + 4) {
        out = ds + std::string(static_cast<std::size_t>(e - sig + 1), '0');
    } else if (e >= 0 && e < sig - 1) {
        out = ds.substr(0, static_cast<std::size_t>(e + 1)) + "." +
              ds.substr(static_cast<std::size_t>(e + 1));
    } else if (e < 0 && e >= -4) {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
    } else {
        out = ds.substr(0, 1);
        if (ds.size() > 1) out += "." + ds.substr(1);
        out += "e" + std::to_string(e);
    }
    // Trim trailing zeros after a decimal point.
    if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return sign() < 0 ? "-" + out : out;
}

BigInt integer_nth_root(const BigInt& x, unsigned n) {
    if (x < 0) throw NegativeRadicand();
    if (x == 0 || x == 1 || n == 1) return x;
    // Newton iteration from a power-of-two upper bound on the root.
    unsigned bits = mp::msb(x) + 1;
    BigInt r = BigInt(1) << (bits / n + 1);
    for (;;) {
        BigInt next = (BigInt(n - 1) * r + x / mp::pow(r, n - 1)) / n;
        if (next >= r) break;
        r = next;
    }
    while (mp::pow(r, n) > x) --r;
    return r;
}

bool perfect_nth_root(const BigRational& x, unsigned n, BigRational& root) {
    if (x.sign() < 0) return false;
    BigInt rn = integer_nth_root(x.num(), n);
    if (mp::pow(rn, n) != x.num()) return false;
    BigInt rd = integer_nth_root(x.den(), n);
    if (mp::pow(rd, n) != x.den()) return false;
    root = BigRational(rn, rd);
    return true;
}

}  // namespace ineq
