#include "ineq/problem_file.hpp"

#include <fstream>
#include <sstream>

namespace ineq {

namespace {

const char* const kExpectKeys[] = {"expect_verdict",  "expect_strategy", "expect_k",
                                   "expect_m",        "expect_quotient", "expect_suggestion",
                                   "expect_chain"};

bool known_expect_key(const std::string& key) {
    for (const char* k : kExpectKeys)
        if (key == k) return true;
    return false;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// n * l(x0) must equal the constraint total (the point lies on the
/// constraint manifold when all variables coincide).
void check_consistency(const ProblemSpec& spec) {
    const ConstraintKind& ck = spec.constraint;
    BigRational n(spec.n);
    switch (ck.variant) {
        case ConstraintKind::Variant::Product: {
            if (spec.x0.pow(spec.n) != ck.total)
                throw InconsistentSpec("x0^n = " + spec.x0.pow(spec.n).str() +
                                       " but the product constraint says " + ck.total.str());
            return;
        }
        case ConstraintKind::Variant::PowerSum: {
            if (ck.alpha.den() == BigInt(1)) {
                BigRational lhs = n * spec.x0.pow(static_cast<long>(ck.alpha.num()));
                if (lhs != ck.total)
                    throw InconsistentSpec("n*x0^alpha = " + lhs.str() +
                                           " but the constraint says " + ck.total.str());
                return;
            }
            RatInterval v = pow_rat(RatInterval::point(spec.x0), ck.alpha.num(), ck.alpha.den(),
                                    BigRational(1, 1000000000000L));
            RatInterval lhs = v * RatInterval::point(n);
            if (!lhs.contains(ck.total))
                throw InconsistentSpec("n*x0^alpha is near " + lhs.lo.str() +
                                       " but the constraint says " + ck.total.str());
            return;
        }
        case ConstraintKind::Variant::GeneralL: {
            try {
                BigRational lhs = n * evaluate_exact(ck.l, spec.x0);
                if (lhs != ck.total)
                    throw InconsistentSpec("n*l(x0) = " + lhs.str() +
                                           " but the constraint says " + ck.total.str());
            } catch (const IrrationalValue&) {
                RatInterval v = evaluate_point_enclosure(ck.l, spec.x0,
                                                         BigRational(1, 1000000000000L));
                RatInterval lhs = v * RatInterval::point(n);
                if (!lhs.contains(ck.total))
                    throw InconsistentSpec("n*l(x0) misses the constraint total " +
                                           ck.total.str());
            }
            return;
        }
    }
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
    ProblemFile pf;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    bool have_f = false, have_constraint = false, have_x0 = false, have_bound = false;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::size_t sp = line.find(' ');
        if (sp == std::string::npos) throw ParseError(lineno, "missing value for: " + line);
        std::string key = line.substr(0, sp);
        std::string value = trim(line.substr(sp + 1));
        if (value.empty()) throw ParseError(lineno, "missing value for: " + key);
        try {
            if (key == "name") {
                pf.spec.name = value;
            } else if (key == "vars") {
                pf.spec.n = std::stol(value);
                if (pf.spec.n < 1) throw Error("vars must be >= 1");
            } else if (key == "domain") {
                pf.spec.domain = DomainInterval::parse(value);
            } else if (key == "function") {
                pf.spec.f = parse_expression(value);
                have_f = true;
            } else if (key == "constraint") {
                pf.spec.constraint = ConstraintKind::parse(value);
                have_constraint = true;
            } else if (key == "point") {
                pf.spec.x0 = BigRational::parse(value);
                have_x0 = true;
            } else if (key == "direction") {
                if (value == "at_least") pf.spec.direction = ProblemDirection::SumAtLeast;
                else if (value == "at_most") pf.spec.direction = ProblemDirection::SumAtMost;
                else throw Error("direction must be at_least or at_most");
            } else if (key == "bound") {
                pf.spec.bound = BigRational::parse(value);
                have_bound = true;
            } else if (key == "hint_separator") {
                pf.hint.separator_l = parse_expression(value);
            } else if (key == "hint_split") {
                pf.hint.split_t = BigRational::parse(value);
            } else if (key == "budget") {
                pf.hint.budget = std::stoi(value);
                pf.budget_given = true;
            } else if (known_expect_key(key)) {
                pf.expectations[key] = value;
            } else {
                throw ParseError(lineno, "unknown key: " + key);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!have_f) throw ParseError(lineno, "missing function");
    if (!have_constraint) throw ParseError(lineno, "missing constraint");
    if (!have_x0) throw ParseError(lineno, "missing point");
    if (!have_bound) throw ParseError(lineno, "missing bound");
    if (!pf.spec.domain.contains(pf.spec.x0) ) {
        // allow x0 on an open endpoint's closure? No: the tangency point must be usable
        throw InconsistentSpec("point " + pf.spec.x0.str() + " lies outside the domain " +
                               pf.spec.domain.str());
    }
    check_consistency(pf.spec);
    return pf;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

std::string emit_problem(const ProblemFile& pf) {
    std::ostringstream os;
    os << "name " << pf.spec.name << '\n';
    os << "vars " << pf.spec.n << '\n';
    os << "domain " << pf.spec.domain.str() << '\n';
    os << "function " << format_expression(pf.spec.f) << '\n';
    os << "constraint " << pf.spec.constraint.str() << '\n';
    os << "point " << pf.spec.x0.str() << '\n';
    os << "direction "
       << (pf.spec.direction == ProblemDirection::SumAtLeast ? "at_least" : "at_most") << '\n';
    os << "bound " << pf.spec.bound.str() << '\n';
    if (pf.budget_given) os << "budget " << pf.hint.budget << '\n';
    if (pf.hint.separator_l)
        os << "hint_separator " << format_expression(*pf.hint.separator_l) << '\n';
    if (pf.hint.split_t) os << "hint_split " << pf.hint.split_t->str() << '\n';
    for (const auto& [k, v] : pf.expectations) os << k << ' ' << v << '\n';
    return os.str();
}

}  // namespace ineq
