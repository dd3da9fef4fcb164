#include "ineq/prover.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace ineq {

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::DirectSeparator: return "DirectSeparator";
        case Strategy::Theorem1: return "Theorem1";
        case Strategy::Theorem2: return "Theorem2";
        case Strategy::Theorem3Cubic: return "Theorem3Cubic";
        case Strategy::DomainSplit: return "DomainSplit";
    }
    return "?";
}

std::optional<Strategy> strategy_from_name(const std::string& name) {
    for (Strategy s : {Strategy::DirectSeparator, Strategy::Theorem1, Strategy::Theorem2,
                       Strategy::Theorem3Cubic, Strategy::DomainSplit})
        if (name == strategy_name(s)) return s;
    return std::nullopt;
}

const char* chain_kind_name(ChainKind k) {
    switch (k) {
        case ChainKind::SeparatorTransfer: return "SeparatorTransfer";
        case ChainKind::PowerMean: return "PowerMean";
        case ChainKind::Degenerate: return "Degenerate";
        case ChainKind::Split: return "Split";
    }
    return "?";
}

namespace {

std::optional<ChainKind> chain_kind_from_name(const std::string& name) {
    for (ChainKind k : {ChainKind::SeparatorTransfer, ChainKind::PowerMean, ChainKind::Degenerate,
                        ChainKind::Split})
        if (name == chain_kind_name(k)) return k;
    return std::nullopt;
}

bool at_least(const ProblemSpec& s) { return s.direction == ProblemDirection::SumAtLeast; }

Expr negated_f(const ProblemSpec& s) { return neg(s.f); }

/// (a, b, c, d) when f is exactly a cubic polynomial.
std::optional<std::array<BigRational, 4>> cubic_coeffs(const Expr& f) {
    if (!is_rational_expr(f)) return std::nullopt;
    RationalFunction rf = to_rational_function(f);
    if (rf.den.degree() != 0 || rf.num.degree() != 3) return std::nullopt;
    BigRational d0 = rf.den.coeff(0);
    return std::array<BigRational, 4>{rf.num.coeff(3) / d0, rf.num.coeff(2) / d0,
                                      rf.num.coeff(1) / d0, rf.num.coeff(0) / d0};
}

std::optional<ProofCertificate> try_direct(const ProblemSpec& spec, const Expr& l, int budget,
                                           std::vector<StrategyAttempt>& attempts) {
    StrategyAttempt at;
    at.strategy = Strategy::DirectSeparator;
    try {
        BigRational total = spec.constraint.transfer_total();
        Separator s = make_separator(spec.f, l, spec.x0);
        Direction dir = at_least(spec) ? Direction::FAboveG : Direction::FBelowG;
        SeparationOutcome out = verify_separation(spec.f, s, spec.domain, dir, budget);
        at.separation = out;
        if (out.status != SeparationOutcome::Status::Separated) {
            at.note = out.status == SeparationOutcome::Status::Fails ? "separation fails"
                                                                     : "separation inconclusive";
            attempts.push_back(std::move(at));
            return std::nullopt;
        }
        BigRational kt = s.k * total;
        BigRational nm = BigRational(spec.n) * s.m;
        BigRational transfer = kt + nm;
        bool reaches = at_least(spec) ? transfer >= spec.bound : transfer <= spec.bound;
        if (!reaches) {
            at.note = "transferred value does not reach the bound";
            attempts.push_back(std::move(at));
            return std::nullopt;
        }
        ProofCertificate cert;
        cert.spec = spec;
        cert.strategy = Strategy::DirectSeparator;
        cert.separator = s;
        cert.separation = out.proof;
        cert.chain_kind = ChainKind::SeparatorTransfer;
        cert.conclusion_chain = {{"k*total", kt},
                                 {"n*m", nm},
                                 {"transfer", transfer},
                                 {"bound", spec.bound}};
        return cert;
    } catch (const Error& e) {
        at.note = e.what();
        attempts.push_back(std::move(at));
        return std::nullopt;
    }
}

std::optional<ProofCertificate> finish_theorem(const ProblemSpec& spec, Strategy st,
                                               TheoremReport rep, bool negated,
                                               std::vector<StrategyAttempt>& attempts) {
    StrategyAttempt at;
    at.strategy = st;
    if (rep.verdict != TheoremReport::Verdict::Applies) {
        at.note = verdict_name(rep.verdict);
        at.report = std::move(rep);
        attempts.push_back(std::move(at));
        return std::nullopt;
    }
    if (rep.separation && rep.separation->proof &&
        rep.separation->proof->direction != Direction::FAboveG) {
        // an f <= g certificate concludes the opposite inequality
        at.note = "separation certifies the opposite direction";
        at.report = std::move(rep);
        attempts.push_back(std::move(at));
        return std::nullopt;
    }
    Expr wf = negated ? negated_f(spec) : spec.f;
    BigRational wb = negated ? -spec.bound : spec.bound;
    BigRational fx0;
    try {
        fx0 = evaluate_exact(wf, spec.x0);
    } catch (const Error&) {
        at.note = "f(x0) is not rational";
        at.report = std::move(rep);
        attempts.push_back(std::move(at));
        return std::nullopt;
    }
    BigRational nf = BigRational(spec.n) * fx0;
    if (nf < wb) {
        at.note = "n*f(x0) does not reach the bound";
        at.report = std::move(rep);
        attempts.push_back(std::move(at));
        return std::nullopt;
    }
    ProofCertificate cert;
    cert.spec = spec;
    cert.strategy = st;
    cert.negated = negated;
    cert.separator = rep.separator;
    if (rep.separation && rep.separation->proof) cert.separation = rep.separation->proof;
    cert.theorem_report = std::move(rep);
    cert.chain_kind = ChainKind::PowerMean;
    cert.conclusion_chain = {{"f(x0)", fx0}, {"n*f(x0)", nf}, {"bound", wb}};
    return cert;
}

std::optional<ProofCertificate> try_theorem1(const ProblemSpec& spec, int budget,
                                             std::vector<StrategyAttempt>& attempts) {
    const ConstraintKind& ck = spec.constraint;
    BigRational alpha;
    if (ck.variant == ConstraintKind::Variant::PowerSum && !ck.is_sum())
        alpha = ck.alpha;
    else if (ck.variant == ConstraintKind::Variant::Product)
        alpha = BigRational(0);
    else
        return std::nullopt;  // sum handled by the direct route, GeneralL has no alpha
    if (spec.x0.sign() <= 0) return std::nullopt;
    bool negated = !at_least(spec);
    Expr wf = negated ? negated_f(spec) : spec.f;
    TheoremReport rep = check_theorem1(wf, alpha, spec.x0, spec.n, spec.domain, budget);
    return finish_theorem(spec, Strategy::Theorem1, std::move(rep), negated, attempts);
}

std::optional<ProofCertificate> try_theorem2(const ProblemSpec& spec, const BigRational& alpha,
                                             int budget,
                                             std::vector<StrategyAttempt>& attempts) {
    if (!spec.constraint.is_sum() || alpha.is_zero() || spec.x0.sign() <= 0) return std::nullopt;
    bool negated = !at_least(spec);
    Expr wf = negated ? negated_f(spec) : spec.f;
    TheoremReport rep = check_theorem2(wf, alpha, spec.x0, spec.n, spec.domain, budget);
    return finish_theorem(spec, Strategy::Theorem2, std::move(rep), negated, attempts);
}

std::optional<ProofCertificate> try_theorem3(const ProblemSpec& spec,
                                             std::vector<StrategyAttempt>& attempts) {
    if (!spec.constraint.is_sum() || spec.x0.sign() <= 0) return std::nullopt;
    if (spec.domain.lower.kind == Endpoint::Kind::NegInf || spec.domain.lower.compare(BigRational(0)) < 0)
        return std::nullopt;  // the cubic criterion needs nonnegative variables
    bool negated = !at_least(spec);
    Expr wf = negated ? negated_f(spec) : spec.f;
    auto abcd = cubic_coeffs(wf);
    if (!abcd || (*abcd)[0].is_zero()) return std::nullopt;
    TheoremReport rep =
        check_theorem3((*abcd)[0], (*abcd)[1], (*abcd)[2], (*abcd)[3], spec.n, spec.x0);
    return finish_theorem(spec, Strategy::Theorem3Cubic, std::move(rep), negated, attempts);
}

std::optional<ProofCertificate> try_split(const ProblemSpec& spec, const BigRational& t,
                                          int budget, std::vector<StrategyAttempt>& attempts) {
    StrategyAttempt at;
    at.strategy = Strategy::DomainSplit;
    try {
        DomainSplitCertificate split = domain_split_prove(spec, t, budget);
        if (split.failed_subclaim != 0) {
            at.note = "sub-claim " + std::to_string(split.failed_subclaim) + ": " +
                      split.failure_note;
            at.separation = split.tangent_part;
            attempts.push_back(std::move(at));
            return std::nullopt;
        }
        if (split.n_f_x0 < spec.bound) {
            at.note = "n*f(x0) does not reach the bound";
            attempts.push_back(std::move(at));
            return std::nullopt;
        }
        ProofCertificate cert;
        cert.spec = spec;
        cert.strategy = Strategy::DomainSplit;
        cert.split_t = t;
        cert.separator = split.separator;
        if (split.tangent_part.proof) cert.separation = split.tangent_part.proof;
        cert.chain_kind = ChainKind::Split;
        cert.conclusion_chain = {{"n*f(x0)", split.n_f_x0},
                                 {"f(U)", split.f_at_U},
                                 {"bound", spec.bound}};
        cert.split = std::move(split);
        return cert;
    } catch (const Error& e) {
        at.note = e.what();
        attempts.push_back(std::move(at));
        return std::nullopt;
    }
}

std::optional<ProofCertificate> try_degenerate(const ProblemSpec& spec) {
    if (spec.n != 1) return std::nullopt;
    BigRational fx0;
    try {
        fx0 = evaluate_exact(spec.f, spec.x0);
    } catch (const Error&) {
        return std::nullopt;
    }
    bool ok = at_least(spec) ? fx0 >= spec.bound : fx0 <= spec.bound;
    if (!ok) return std::nullopt;
    // n = 1: the constraint pins x1 = x0 and the claim is f(x0) vs itself.
    ProofCertificate cert;
    cert.spec = spec;
    cert.strategy = Strategy::DirectSeparator;
    cert.chain_kind = ChainKind::Degenerate;
    cert.conclusion_chain = {{"f(x0)", fx0}, {"bound", spec.bound}};
    return cert;
}

BigRational power_of_l(const Expr& l) {
    if (l->kind == ExprKind::Var) return BigRational(1);
    if (l->kind == ExprKind::PowInt && l->a->kind == ExprKind::Var) return BigRational(l->ipow);
    if (l->kind == ExprKind::PowRat && l->a->kind == ExprKind::Var) return l->rpow;
    return BigRational(0);
}

}  // namespace

ProveResult prove(const ProblemSpec& spec, const ProveHint& hint) {
    std::vector<StrategyAttempt> attempts;
    int budget = hint.budget;
    std::vector<Strategy> tried;
    auto was_tried = [&](Strategy s) {
        return std::find(tried.begin(), tried.end(), s) != tried.end();
    };
    auto run = [&](Strategy s) -> std::optional<ProofCertificate> {
        tried.push_back(s);
        switch (s) {
            case Strategy::DirectSeparator:
                return try_direct(spec, hint.separator_l ? *hint.separator_l
                                                         : spec.constraint.separator_l(),
                                  budget, attempts);
            case Strategy::Theorem1:
                return try_theorem1(spec, budget, attempts);
            case Strategy::Theorem2: {
                BigRational alpha = hint.separator_l ? power_of_l(*hint.separator_l)
                                                     : spec.constraint.alpha;
                return try_theorem2(spec, alpha, budget, attempts);
            }
            case Strategy::Theorem3Cubic:
                return try_theorem3(spec, attempts);
            case Strategy::DomainSplit:
                if (!hint.split_t) return std::nullopt;
                return try_split(spec, *hint.split_t, budget, attempts);
        }
        return std::nullopt;
    };

    if (hint.strategy) {
        auto s = strategy_from_name(*hint.strategy);
        if (!s) throw Error("unknown strategy: " + *hint.strategy);
        if (auto cert = run(*s)) return *cert;
    }
    if (auto cert = try_degenerate(spec)) return *cert;
    for (Strategy s : {Strategy::Theorem3Cubic, Strategy::Theorem1, Strategy::DirectSeparator,
                       Strategy::DomainSplit}) {
        if (was_tried(s)) continue;
        if (auto cert = run(s)) return *cert;
    }

    Diagnosis d;
    d.attempts = attempts;
    bool tagged = false;
    for (const auto& a : attempts) {
        if (a.report && !a.report->conditions_pass()) {
            d.failed_strategy = a.strategy;
            for (const auto& c : a.report->conditions)
                if (!c.pass) d.failed_conditions.push_back(c);
            tagged = true;
            break;
        }
    }
    for (const auto& a : attempts) {
        if (a.separation && a.separation->status == SeparationOutcome::Status::Fails) {
            if (!tagged) {
                d.failed_strategy = a.strategy;
                tagged = true;
            }
            if (!d.witness) d.witness = a.separation->witness;
        }
    }
    if (!tagged && !attempts.empty()) d.failed_strategy = attempts.front().strategy;
    switch (spec.constraint.variant) {
        case ConstraintKind::Variant::Product:
            d.suggestion = "TryLogSeparator";
            break;
        case ConstraintKind::Variant::PowerSum:
            d.suggestion = spec.constraint.is_sum()
                               ? "TryDomainSplit"
                               : "TryPowerSeparator(" + spec.constraint.alpha.str() + ")";
            break;
        case ConstraintKind::Variant::GeneralL:
            d.suggestion = "TryDomainSplit";
            break;
    }
    return d;
}

std::vector<DiagnoseEntry> diagnose(const ProblemSpec& spec) {
    const ConstraintKind& ck = spec.constraint;
    Expr wf = at_least(spec) ? spec.f : negated_f(spec);
    RatInterval fp;
    try {
        fp = RatInterval::point(evaluate_exact(differentiate(wf), spec.x0));
    } catch (const Error&) {
        fp = evaluate_point_enclosure(differentiate(wf), spec.x0, BigRational(1, 1000000000));
    }
    std::string match_name;
    switch (ck.variant) {
        case ConstraintKind::Variant::PowerSum:
            match_name = format_expression(ck.separator_l());
            break;
        case ConstraintKind::Variant::Product:
            match_name = "ln(x)";
            break;
        case ConstraintKind::Variant::GeneralL:
            match_name = format_expression(ck.l);
            break;
    }
    BigRational constraint_alpha = ck.variant == ConstraintKind::Variant::PowerSum
                                       ? ck.alpha
                                       : BigRational(0);

    std::vector<DiagnoseEntry> entries;
    auto add = [&](const std::string& name, const std::string& cond, const RatInterval& value,
                   bool pass) {
        DiagnoseEntry e;
        e.l_name = name;
        e.condition = cond;
        e.value = value;
        e.pass = pass;
        e.score = (name == match_name ? 2 : 0) + (pass ? 1 : 0);
        entries.push_back(std::move(e));
    };
    // Tangent line: theorem-1 sign condition for the constraint's alpha.
    if (ck.variant == ConstraintKind::Variant::GeneralL) {
        add("x", "tangent:f'(x0)", fp, true);
    } else if (constraint_alpha.is_zero() && ck.variant == ConstraintKind::Variant::Product) {
        add("x", "t1:f'(x0)>=0", fp, fp.lo.sign() >= 0);
    } else {
        RatInterval v = fp * RatInterval::point(constraint_alpha - BigRational(1));
        add("x", "t1:(alpha-1)*f'(x0)<=0", v, v.hi.sign() <= 0);
    }
    for (long a : {2, 3}) {
        RatInterval v = fp * RatInterval::point(BigRational(a - 1));
        add(format_expression(pow_expr(variable(), a)), "t2:(alpha-1)*f'(x0)>=0", v,
            v.lo.sign() >= 0);
    }
    add("ln(x)", "log:k=f'(x0)", fp, true);
    if (ck.variant == ConstraintKind::Variant::GeneralL) {
        std::string n = format_expression(ck.l);
        bool present = false;
        for (const auto& e : entries) present = present || e.l_name == n;
        if (!present) add(n, "matches-constraint", fp, true);
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const DiagnoseEntry& a, const DiagnoseEntry& b) {
                         if (a.score != b.score) return a.score > b.score;
                         // Demote the plain tangent line on ties.
                         return a.l_name != "x" && b.l_name == "x";
                     });
    return entries;
}

namespace {

void emit_poly(std::ostream& os, const char* key, const Polynomial& p) {
    os << key;
    if (p.is_zero()) {
        os << " 0";
    } else {
        for (const auto& c : p.coeffs()) os << ' ' << c.str();
    }
    os << '\n';
}

Polynomial parse_poly(const std::vector<std::string>& toks, std::size_t from) {
    std::vector<BigRational> cs;
    for (std::size_t i = from; i < toks.size(); ++i) cs.push_back(BigRational::parse(toks[i]));
    return Polynomial(std::move(cs));
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

void emit_separation(std::ostream& os, const SeparationProof& sp) {
    os << "[separation]\n";
    os << "direction " << direction_name(sp.direction) << '\n';
    os << "x0 " << sp.x0.str() << '\n';
    os << "on " << sp.domain.str() << '\n';
    os << "route " << (sp.polynomial_route ? "polynomial" : "interval") << '\n';
    if (sp.polynomial_route) {
        emit_poly(os, "numerator", sp.poly.numerator);
        emit_poly(os, "denominator", sp.poly.denominator);
        emit_poly(os, "quotient", sp.poly.quotient);
        os << "denominator_sign " << sign_kind_name(sp.poly.denominator_sign.kind) << '\n';
        os << "quotient_sign " << sign_kind_name(sp.poly.quotient_sign.kind) << '\n';
    } else {
        os << "hull " << sp.interval.hull.lo.str() << ' ' << sp.interval.hull.hi.str() << '\n';
        os << "tangency " << sp.interval.tangency_box.lo.str() << ' '
           << sp.interval.tangency_box.hi.str() << '\n';
        os << "h2 " << sp.interval.second_derivative.lo.str() << ' '
           << sp.interval.second_derivative.hi.str() << '\n';
        os << "boxes " << sp.interval.boxes.size() << '\n';
        for (const auto& b : sp.interval.boxes)
            os << "box " << b.box.lo.str() << ' ' << b.box.hi.str() << ' ' << b.sign << '\n';
    }
}

}  // namespace

std::string serialize_certificate(const ProofCertificate& cert) {
    std::ostringstream os;
    const ProblemSpec& s = cert.spec;
    os << "certificate 1\n";
    os << "[problem]\n";
    os << "name " << s.name << '\n';
    os << "vars " << s.n << '\n';
    os << "domain " << s.domain.str() << '\n';
    os << "function " << format_expression(s.f) << '\n';
    os << "constraint " << s.constraint.str() << '\n';
    os << "point " << s.x0.str() << '\n';
    os << "direction " << (at_least(s) ? "at_least" : "at_most") << '\n';
    os << "bound " << s.bound.str() << '\n';
    os << "[strategy]\n";
    os << "kind " << strategy_name(cert.strategy) << '\n';
    os << "negated " << (cert.negated ? 1 : 0) << '\n';
    if (cert.strategy == Strategy::DomainSplit) os << "split_t " << cert.split_t.str() << '\n';
    if (cert.separator) {
        os << "[separator]\n";
        os << "l " << format_expression(cert.separator->l) << '\n';
        os << "k " << cert.separator->k.str() << '\n';
        os << "m " << cert.separator->m.str() << '\n';
        os << "x0 " << cert.separator->x0.str() << '\n';
    }
    if (cert.separation) emit_separation(os, *cert.separation);
    if (cert.theorem_report) {
        const TheoremReport& tr = *cert.theorem_report;
        os << "[theorem]\n";
        os << "kind " << theorem_name(tr.theorem) << '\n';
        os << "subdomain " << tr.required_subdomain.str() << '\n';
        for (const auto& c : tr.conditions)
            os << "condition " << c.name << ' ' << c.value.lo.str() << ' ' << c.value.hi.str()
               << ' ' << (c.pass ? "pass" : "fail") << '\n';
        os << "verdict " << verdict_name(tr.verdict) << '\n';
    }
    if (cert.split) {
        os << "[split]\n";
        os << "t " << cert.split->t.str() << '\n';
        os << "U " << cert.split->U.str() << '\n';
        os << "f_at_U " << cert.split->f_at_U.str() << '\n';
        os << "n_f_x0 " << cert.split->n_f_x0.str() << '\n';
    }
    os << "[conclusion]\n";
    os << "kind " << chain_kind_name(cert.chain_kind) << '\n';
    if (cert.chain_kind == ChainKind::SeparatorTransfer)
        os << "total " << s.constraint.transfer_total().str() << '\n';
    for (const auto& st : cert.conclusion_chain)
        os << "step " << st.label << ' ' << st.value.str() << '\n';
    os << "verdict Proven\n";
    return os.str();
}

ProofCertificate parse_certificate(const std::string& text) {
    ProofCertificate cert;
    std::istringstream is(text);
    std::string line, section;
    bool have_version = false;
    Separator sep;
    bool have_sep = false;
    SeparationProof sp;
    bool have_sp = false;
    TheoremReport tr;
    bool have_tr = false;
    DomainSplitCertificate split;
    bool have_split = false;
    long boxes_left = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.front() == '[') {
            section = line;
            continue;
        }
        auto sp_pos = line.find(' ');
        std::string key = line.substr(0, sp_pos);
        std::string rest = sp_pos == std::string::npos ? "" : line.substr(sp_pos + 1);
        if (!have_version) {
            if (key != "certificate" || rest != "1") throw Error("bad certificate header");
            have_version = true;
            continue;
        }
        if (section == "[problem]") {
            if (key == "name") cert.spec.name = rest;
            else if (key == "vars") cert.spec.n = std::stol(rest);
            else if (key == "domain") cert.spec.domain = DomainInterval::parse(rest);
            else if (key == "function") cert.spec.f = parse_expression(rest);
            else if (key == "constraint") cert.spec.constraint = ConstraintKind::parse(rest);
            else if (key == "point") cert.spec.x0 = BigRational::parse(rest);
            else if (key == "direction")
                cert.spec.direction = rest == "at_least" ? ProblemDirection::SumAtLeast
                                                         : ProblemDirection::SumAtMost;
            else if (key == "bound") cert.spec.bound = BigRational::parse(rest);
            else throw Error("unknown certificate key: " + key);
        } else if (section == "[strategy]") {
            if (key == "kind") {
                auto st = strategy_from_name(rest);
                if (!st) throw Error("unknown strategy: " + rest);
                cert.strategy = *st;
            } else if (key == "negated") {
                cert.negated = rest == "1";
            } else if (key == "split_t") {
                cert.split_t = BigRational::parse(rest);
            } else {
                throw Error("unknown certificate key: " + key);
            }
        } else if (section == "[separator]") {
            have_sep = true;
            if (key == "l") sep.l = parse_expression(rest);
            else if (key == "k") sep.k = BigRational::parse(rest);
            else if (key == "m") sep.m = BigRational::parse(rest);
            else if (key == "x0") sep.x0 = BigRational::parse(rest);
            else throw Error("unknown certificate key: " + key);
        } else if (section == "[separation]") {
            have_sp = true;
            auto toks = split_tokens(rest);
            if (key == "direction") {
                auto d = direction_from_name(rest);
                if (!d) throw Error("bad direction: " + rest);
                sp.direction = *d;
            } else if (key == "x0") {
                sp.x0 = BigRational::parse(rest);
            } else if (key == "on") {
                sp.domain = DomainInterval::parse(rest);
            } else if (key == "route") {
                sp.polynomial_route = rest == "polynomial";
            } else if (key == "numerator") {
                sp.poly.numerator = parse_poly(toks, 0);
            } else if (key == "denominator") {
                sp.poly.denominator = parse_poly(toks, 0);
            } else if (key == "quotient") {
                sp.poly.quotient = parse_poly(toks, 0);
            } else if (key == "denominator_sign") {
                auto k2 = sign_kind_from_name(rest);
                if (!k2) throw Error("bad sign kind: " + rest);
                sp.poly.denominator_sign.kind = *k2;
            } else if (key == "quotient_sign") {
                auto k2 = sign_kind_from_name(rest);
                if (!k2) throw Error("bad sign kind: " + rest);
                sp.poly.quotient_sign.kind = *k2;
            } else if (key == "hull") {
                sp.interval.hull = RatInterval(BigRational::parse(toks[0]),
                                               BigRational::parse(toks[1]));
            } else if (key == "tangency") {
                sp.interval.tangency_box = RatInterval(BigRational::parse(toks[0]),
                                                       BigRational::parse(toks[1]));
            } else if (key == "h2") {
                sp.interval.second_derivative = RatInterval(BigRational::parse(toks[0]),
                                                            BigRational::parse(toks[1]));
            } else if (key == "boxes") {
                boxes_left = std::stol(rest);
            } else if (key == "box") {
                if (boxes_left <= 0) throw Error("unexpected box line");
                --boxes_left;
                sp.interval.boxes.push_back({RatInterval(BigRational::parse(toks[0]),
                                                         BigRational::parse(toks[1])),
                                             std::stoi(toks[2])});
            } else {
                throw Error("unknown certificate key: " + key);
            }
        } else if (section == "[theorem]") {
            have_tr = true;
            if (key == "kind") {
                if (rest == "T1") tr.theorem = TheoremReport::Theorem::T1;
                else if (rest == "T2") tr.theorem = TheoremReport::Theorem::T2;
                else if (rest == "T3") tr.theorem = TheoremReport::Theorem::T3;
                else throw Error("bad theorem: " + rest);
            } else if (key == "subdomain") {
                tr.required_subdomain = DomainInterval::parse(rest);
            } else if (key == "condition") {
                auto toks = split_tokens(rest);
                if (toks.size() != 4) throw Error("bad condition line");
                TheoremCondition c;
                c.name = toks[0];
                c.value = RatInterval(BigRational::parse(toks[1]), BigRational::parse(toks[2]));
                c.pass = toks[3] == "pass";
                tr.conditions.push_back(std::move(c));
            } else if (key == "verdict") {
                if (rest == "Applies") tr.verdict = TheoremReport::Verdict::Applies;
                else if (rest == "ConditionViolated")
                    tr.verdict = TheoremReport::Verdict::ConditionViolated;
                else tr.verdict = TheoremReport::Verdict::SeparationUnproven;
            } else {
                throw Error("unknown certificate key: " + key);
            }
        } else if (section == "[split]") {
            have_split = true;
            if (key == "t") split.t = BigRational::parse(rest);
            else if (key == "U") split.U = BigRational::parse(rest);
            else if (key == "f_at_U") split.f_at_U = BigRational::parse(rest);
            else if (key == "n_f_x0") split.n_f_x0 = BigRational::parse(rest);
            else throw Error("unknown certificate key: " + key);
        } else if (section == "[conclusion]") {
            if (key == "kind") {
                auto k2 = chain_kind_from_name(rest);
                if (!k2) throw Error("bad chain kind: " + rest);
                cert.chain_kind = *k2;
            } else if (key == "total") {
                // redundant with the constraint; checked by the verifier
            } else if (key == "step") {
                auto toks = split_tokens(rest);
                if (toks.size() != 2) throw Error("bad step line");
                cert.conclusion_chain.push_back({toks[0], BigRational::parse(toks[1])});
            } else if (key == "verdict") {
                if (rest != "Proven") throw Error("bad verdict: " + rest);
            } else {
                throw Error("unknown certificate key: " + key);
            }
        } else {
            throw Error("line outside a section: " + line);
        }
    }
    if (have_sep) cert.separator = sep;
    if (have_sp) cert.separation = sp;
    if (have_tr) cert.theorem_report = tr;
    if (have_split) cert.split = split;
    return cert;
}

std::string serialize_diagnosis(const Diagnosis& d) {
    std::ostringstream os;
    os << "diagnosis 1\n";
    os << "failed_strategy " << strategy_name(d.failed_strategy) << '\n';
    for (const auto& c : d.failed_conditions)
        os << "condition " << c.name << ' ' << c.value.lo.str() << ' ' << c.value.hi.str()
           << " fail\n";
    if (d.witness)
        os << "witness " << d.witness->point.str() << ' ' << d.witness->value.lo.str() << ' '
           << d.witness->value.hi.str() << '\n';
    os << "suggestion " << d.suggestion << '\n';
    for (const auto& a : d.attempts)
        os << "attempt " << strategy_name(a.strategy) << ' ' << a.note << '\n';
    return os.str();
}

namespace {

std::optional<BigRational> chain_value(const ProofCertificate& cert, const std::string& label) {
    for (const auto& s : cert.conclusion_chain)
        if (s.label == label) return s.value;
    return std::nullopt;
}

}  // namespace

VerifyResult verify_certificate(const ProofCertificate& cert) {
    auto invalid = [](std::string r) { return VerifyResult{false, std::move(r)}; };
    const ProblemSpec& spec = cert.spec;
    if (!spec.f) return invalid("missing function");
    Expr wf = cert.negated ? neg(spec.f) : spec.f;
    BigRational wb = cert.negated ? -spec.bound : spec.bound;

    // Conclusion chain arithmetic, re-evaluated exactly.
    switch (cert.chain_kind) {
        case ChainKind::SeparatorTransfer: {
            if (!cert.separator) return invalid("missing separator");
            BigRational total;
            try {
                total = spec.constraint.transfer_total();
            } catch (const Error&) {
                return invalid("constraint total is not transferable");
            }
            auto kt = chain_value(cert, "k*total");
            auto nm = chain_value(cert, "n*m");
            auto tr = chain_value(cert, "transfer");
            auto bd = chain_value(cert, "bound");
            if (!kt || !nm || !tr || !bd) return invalid("conclusion chain incomplete");
            if (*kt != cert.separator->k * total) return invalid("conclusion arithmetic: k*total");
            if (*nm != BigRational(spec.n) * cert.separator->m)
                return invalid("conclusion arithmetic: n*m");
            if (*tr != *kt + *nm) return invalid("conclusion arithmetic: transfer");
            if (*bd != spec.bound) return invalid("conclusion arithmetic: bound");
            bool ok = at_least(spec) ? *tr >= *bd : *tr <= *bd;
            if (!ok) return invalid("conclusion arithmetic: transfer does not imply the bound");
            if (!cert.separation) return invalid("missing separation");
            Direction need = at_least(spec) ? Direction::FAboveG : Direction::FBelowG;
            if (cert.separation->direction != need) return invalid("separation direction mismatch");
            if (cert.negated) return invalid("direct transfer must not be negated");
            break;
        }
        case ChainKind::PowerMean: {
            auto fx = chain_value(cert, "f(x0)");
            auto nf = chain_value(cert, "n*f(x0)");
            auto bd = chain_value(cert, "bound");
            if (!fx || !nf || !bd) return invalid("conclusion chain incomplete");
            BigRational fx0;
            try {
                fx0 = evaluate_exact(wf, spec.x0);
            } catch (const Error&) {
                return invalid("f(x0) is not rational");
            }
            if (*fx != fx0) return invalid("conclusion arithmetic: f(x0)");
            if (*nf != BigRational(spec.n) * fx0) return invalid("conclusion arithmetic: n*f(x0)");
            if (*bd != wb) return invalid("conclusion arithmetic: bound");
            if (*nf < *bd) return invalid("conclusion arithmetic: n*f(x0) below the bound");
            if (!cert.theorem_report) return invalid("missing theorem report");
            if (cert.theorem_report->verdict != TheoremReport::Verdict::Applies)
                return invalid("theorem verdict is not Applies");
            if (!cert.separation) return invalid("missing separation");
            if (cert.separation->direction != Direction::FAboveG)
                return invalid("separation direction mismatch");
            break;
        }
        case ChainKind::Degenerate: {
            if (spec.n != 1) return invalid("degenerate chain requires n = 1");
            auto fx = chain_value(cert, "f(x0)");
            auto bd = chain_value(cert, "bound");
            if (!fx || !bd) return invalid("conclusion chain incomplete");
            BigRational fx0;
            try {
                fx0 = evaluate_exact(spec.f, spec.x0);
            } catch (const Error&) {
                return invalid("f(x0) is not rational");
            }
            if (*fx != fx0) return invalid("conclusion arithmetic: f(x0)");
            if (*bd != spec.bound) return invalid("conclusion arithmetic: bound");
            bool ok = at_least(spec) ? fx0 >= spec.bound : fx0 <= spec.bound;
            if (!ok) return invalid("conclusion arithmetic: f(x0) vs bound");
            return {true, ""};
        }
        case ChainKind::Split: {
            if (!cert.split) return invalid("missing split data");
            if (!at_least(spec) || cert.negated) return invalid("split requires at_least");
            auto nf = chain_value(cert, "n*f(x0)");
            auto fu = chain_value(cert, "f(U)");
            auto bd = chain_value(cert, "bound");
            if (!nf || !fu || !bd) return invalid("conclusion chain incomplete");
            BigRational U = BigRational(spec.n) * spec.x0;
            if (spec.domain.upper.kind == Endpoint::Kind::Rational &&
                spec.domain.upper.value < U)
                U = spec.domain.upper.value;
            if (cert.split->U != U) return invalid("split U mismatch");
            BigRational fx0, fU;
            try {
                fx0 = evaluate_exact(spec.f, spec.x0);
                fU = evaluate_exact(spec.f, U);
            } catch (const Error&) {
                return invalid("split values are not rational");
            }
            if (*nf != BigRational(spec.n) * fx0) return invalid("conclusion arithmetic: n*f(x0)");
            if (*fu != fU) return invalid("conclusion arithmetic: f(U)");
            if (*bd != spec.bound) return invalid("conclusion arithmetic: bound");
            if (fU < *nf) return invalid("conclusion arithmetic: f(U) below n*f(x0)");
            if (*nf < *bd) return invalid("conclusion arithmetic: n*f(x0) below the bound");
            // Re-certify the non-tangent sub-claims.
            try {
                if (expression_sign_on(spec.f, spec.domain, 40).kind !=
                    ExprSignResult::Kind::Positive)
                    return invalid("nonnegativity of f not re-certified");
                if (cert.split->t < U &&
                    monotonicity_check(spec.f, DomainInterval::closed(cert.split->t, U), false, 40)
                            .status != MonotonicityResult::Status::Certified)
                    return invalid("monotonicity not re-certified");
            } catch (const Error&) {
                return invalid("split sub-claims not re-certified");
            }
            break;
        }
    }

    // Tangency re-derivation from raw data.
    if (cert.separator) {
        try {
            auto [k, m] = separator_coefficients(wf, cert.separator->l, cert.separator->x0);
            if (k != cert.separator->k) return invalid("tangency re-derivation mismatch: k");
            if (m != cert.separator->m) return invalid("tangency re-derivation mismatch: m");
        } catch (const Error&) {
            return invalid("tangency re-derivation failed");
        }
        if (cert.separator->x0 != spec.x0) return invalid("separator point mismatch");
    }

    // Separation re-check.
    if (cert.separation) {
        if (!cert.separator) return invalid("separation without separator");
        const SeparationProof& sp2 = *cert.separation;
        Expr g = add(mul(constant(cert.separator->k), cert.separator->l),
                     constant(cert.separator->m));
        Expr hplus = sp2.direction == Direction::FAboveG ? sub(wf, g) : sub(g, wf);
        if (sp2.polynomial_route) {
            if (!is_rational_expr(hplus)) return invalid("route mismatch");
            RationalFunction rf = to_rational_function(hplus);
            if (!(rf.num == sp2.poly.numerator)) return invalid("numerator mismatch");
            if (!(rf.den == sp2.poly.denominator)) return invalid("denominator mismatch");
            Polynomial square(std::vector<BigRational>{spec.x0 * spec.x0,
                                                       BigRational(-2) * spec.x0, BigRational(1)});
            Polynomial rebuilt = square * sp2.poly.quotient;
            if (!(rebuilt == sp2.poly.numerator)) return invalid("quotient reconstruction mismatch");
            SignVerdict dsv = sign_on_interval(sp2.poly.denominator, sp2.domain);
            if (dsv.kind != sp2.poly.denominator_sign.kind)
                return invalid("denominator sign mismatch");
            if (dsv.kind == SignKind::Mixed) return invalid("denominator changes sign");
            if (!rf.num.is_zero()) {
                SignVerdict qsv = sign_on_interval(sp2.poly.quotient, sp2.domain);
                if (qsv.kind != sp2.poly.quotient_sign.kind) return invalid("quotient sign mismatch");
                bool ok = dsv.nonnegative() ? qsv.nonnegative() : qsv.nonpositive();
                if (!ok) return invalid("quotient sign does not certify separation");
            }
        } else {
            Expr h2 = differentiate(differentiate(hplus));
            const IntervalCertificate& ic = sp2.interval;
            try {
                RatInterval enc = evaluate_enclosure(
                    h2, ic.tangency_box, max(ic.tangency_box.width(), BigRational(1, 8)));
                if (enc.definite_sign() <= 0)
                    return invalid("tangency second derivative not re-certified");
            } catch (const Error&) {
                return invalid("tangency second derivative not re-certified");
            }
            if (!ic.tangency_box.contains(sp2.x0)) return invalid("x0 outside tangency box");
            if (sp2.domain.lower.is_finite() &&
                sp2.domain.lower.enclosure(BigRational(1, 1000)).lo < ic.hull.lo)
                return invalid("hull does not cover the domain");
            if (sp2.domain.upper.is_finite() &&
                sp2.domain.upper.enclosure(BigRational(1, 1000)).hi > ic.hull.hi)
                return invalid("hull does not cover the domain");
            std::vector<RatInterval> cover;
            cover.push_back(ic.tangency_box);
            for (const auto& b : ic.boxes) {
                if (b.sign <= 0) return invalid("certificate contains a negative box");
                try {
                    RatInterval enc = evaluate_enclosure(
                        hplus, b.box, max(b.box.width() / BigRational(16), BigRational(1, 1000000)));
                    if (enc.definite_sign() <= 0) return invalid("box sign not re-certified");
                } catch (const Error&) {
                    return invalid("box sign not re-certified");
                }
                cover.push_back(b.box);
            }
            std::sort(cover.begin(), cover.end(),
                      [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
            BigRational covered = ic.hull.lo;
            for (const auto& c : cover) {
                if (c.lo > covered) return invalid("coverage gap in interval certificate");
                covered = max(covered, c.hi);
            }
            if (covered < ic.hull.hi) return invalid("coverage gap in interval certificate");
        }
    } else if (cert.chain_kind == ChainKind::SeparatorTransfer) {
        return invalid("missing separation");
    }

    // Theorem conditions, recomputed from raw data.
    if (cert.theorem_report) {
        const TheoremReport& tr = *cert.theorem_report;
        if (tr.theorem == TheoremReport::Theorem::T3) {
            auto abcd = cubic_coeffs(wf);
            if (!abcd) return invalid("theorem 3 function is not cubic");
            BigRational v1 = BigRational(2) * (*abcd)[0] * spec.x0 + (*abcd)[1];
            BigRational v2 = BigRational(spec.n + 2) * (*abcd)[0] * spec.x0 + (*abcd)[1];
            if (v1.sign() < 0 || v2.sign() < 0) return invalid("theorem 3 conditions fail");
        } else {
            BigRational alpha = tr.theorem == TheoremReport::Theorem::T1
                                    ? (spec.constraint.variant == ConstraintKind::Variant::Product
                                           ? BigRational(0)
                                           : spec.constraint.alpha)
                                    : (cert.separator ? power_of_l(cert.separator->l)
                                                      : BigRational(0));
            BigRational fp;
            try {
                fp = evaluate_exact(differentiate(wf), spec.x0);
            } catch (const Error&) {
                return invalid("f'(x0) is not rational");
            }
            BigRational v = (alpha - BigRational(1)) * fp;
            bool ok = tr.theorem == TheoremReport::Theorem::T1 ? v.sign() <= 0 : v.sign() >= 0;
            if (!ok) return invalid("theorem sign condition fails on recheck");
        }
        for (const auto& c : tr.conditions)
            if (!c.pass) return invalid("theorem report carries a failed condition");
    }

    return {true, ""};
}

}  // namespace ineq
