#include <chrono>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "ineq/problem_file.hpp"

namespace {

using namespace ineq;

ProveHint merged_hint(const ProblemFile& pf, const std::string& strategy, int budget) {
    ProveHint hint = pf.hint;
    if (!strategy.empty()) hint.strategy = strategy;
    if (budget > 0) hint.budget = budget;
    return hint;
}

int cmd_prove(const std::string& path, const std::string& strategy, int budget) {
    ProblemFile pf = load_problem(path);
    ProveResult res = prove(pf.spec, merged_hint(pf, strategy, budget));
    if (auto* cert = std::get_if<ProofCertificate>(&res)) {
        std::cout << serialize_certificate(*cert);
        return 0;
    }
    std::cout << serialize_diagnosis(std::get<Diagnosis>(res));
    return 1;
}

int cmd_diagnose(const std::string& path, long samples, std::uint64_t seed) {
    ProblemFile pf = load_problem(path);
    std::cout << "diagnose " << pf.spec.name << '\n';
    int rank = 1;
    for (const auto& e : diagnose(pf.spec)) {
        std::cout << rank++ << ' ' << e.l_name << ' ' << e.condition << " ["
                  << e.value.lo.str() << ", " << e.value.hi.str() << "] "
                  << (e.pass ? "pass" : "fail") << " score=" << e.score << '\n';
    }
    if (samples > 0) {
        SampleCheckResult r = jensen_sample_check(pf.spec, samples, seed);
        if (r.counterexample) {
            std::cout << "counterexample after " << r.trials_run << " trials:";
            for (const auto& q : r.point) std::cout << ' ' << q.str();
            std::cout << "\nlhs in [" << r.lhs.lo.str() << ", " << r.lhs.hi.str() << "] vs bound "
                      << r.rhs.str() << '\n';
        } else {
            std::cout << "no counterexample in " << r.trials_run << " trials\n";
        }
    }
    return 0;
}

int cmd_plot(const std::string& path, long samples, const BigRational& eps) {
    if (samples < 2) throw Error("--samples must be >= 2");
    ProblemFile pf = load_problem(path);
    const ProblemSpec& spec = pf.spec;
    if (!spec.domain.lower.is_finite() || !spec.domain.upper.is_finite())
        throw Error("plot requires a bounded domain");
    RatInterval lo = spec.domain.lower.enclosure(eps);
    RatInterval hi = spec.domain.upper.enclosure(eps);
    BigRational a = lo.mid(), b = hi.mid();
    // Open endpoints are excluded by insetting the grid one step inward.
    BigRational inset = (b - a) / BigRational(samples + 1);
    if (spec.domain.lower_open) a = a + inset;
    if (spec.domain.upper_open) b = b - inset;

    Expr l = pf.hint.separator_l ? *pf.hint.separator_l : variable();
    auto [k, m] = separator_coefficients_enclosure(spec.f, l, spec.x0, eps);
    Expr g = add(mul(constant(k.mid()), l), constant(m.mid()));

    std::cout << "x,f,g\n";
    BigRational step = (b - a) / BigRational(samples - 1);
    for (long i = 0; i < samples; ++i) {
        BigRational x = i + 1 == samples ? b : a + step * BigRational(i);
        RatInterval fv = evaluate_point_enclosure(spec.f, x, eps);
        RatInterval gv = evaluate_point_enclosure(g, x, eps);
        std::cout << x.decimal(12) << ',' << fv.mid().decimal(12) << ',' << gv.mid().decimal(12)
                  << '\n';
    }
    return 0;
}

std::string chain_headline(const ProofCertificate& cert) {
    const char* key = "transfer";
    switch (cert.chain_kind) {
        case ChainKind::SeparatorTransfer: key = "transfer"; break;
        case ChainKind::PowerMean:
        case ChainKind::Split: key = "n*f(x0)"; break;
        case ChainKind::Degenerate: key = "f(x0)"; break;
    }
    for (const auto& s : cert.conclusion_chain)
        if (s.label == key) return s.value.str();
    return "?";
}

std::string quotient_str(const Polynomial& p) {
    std::string out;
    if (p.is_zero()) return "0";
    for (const auto& c : p.coeffs()) {
        if (!out.empty()) out += ' ';
        out += c.str();
    }
    return out;
}

int cmd_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".ineq") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    bool all_ok = true;
    std::cout << "name expected actual status\n";
    for (const auto& file : files) {
        std::string name = file.stem().string();
        std::string expected = "proven", actual, detail;
        bool ok = true;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ProblemFile pf = load_problem(file.string());
            auto it = pf.expectations.find("expect_verdict");
            if (it != pf.expectations.end()) expected = it->second;
            ProveResult res = prove(pf.spec, pf.hint);
            auto want = [&](const char* key) -> const std::string* {
                auto e = pf.expectations.find(key);
                return e == pf.expectations.end() ? nullptr : &e->second;
            };
            if (auto* cert = std::get_if<ProofCertificate>(&res)) {
                actual = "proven";
                if (auto* s = want("expect_strategy"); s && *s != strategy_name(cert->strategy)) {
                    ok = false;
                    detail = "strategy=" + std::string(strategy_name(cert->strategy));
                }
                if (auto* s = want("expect_k");
                    s && (!cert->separator ||
                          cert->separator->k != BigRational::parse(*s))) {
                    ok = false;
                    detail = "k=" + (cert->separator ? cert->separator->k.str() : "-");
                }
                if (auto* s = want("expect_m");
                    s && (!cert->separator ||
                          cert->separator->m != BigRational::parse(*s))) {
                    ok = false;
                    detail = "m=" + (cert->separator ? cert->separator->m.str() : "-");
                }
                if (auto* s = want("expect_quotient");
                    s && (!cert->separation || !cert->separation->polynomial_route ||
                          quotient_str(cert->separation->poly.quotient) != *s)) {
                    ok = false;
                    detail = "quotient mismatch";
                }
                if (auto* s = want("expect_chain"); s && chain_headline(*cert) != *s) {
                    ok = false;
                    detail = "chain=" + chain_headline(*cert);
                }
                VerifyResult vr = verify_certificate(*cert);
                if (!vr.valid) {
                    ok = false;
                    detail = "re-verify: " + vr.reason;
                }
            } else {
                actual = "diagnosis";
                const Diagnosis& d = std::get<Diagnosis>(res);
                if (auto* s = want("expect_suggestion"); s && *s != d.suggestion) {
                    ok = false;
                    detail = "suggestion=" + d.suggestion;
                }
            }
            if (expected != actual) ok = false;
        } catch (const std::exception& e) {
            actual = "error";
            detail = e.what();
            ok = false;
        }
        auto t1 = std::chrono::steady_clock::now();
        std::cerr << name << ' '
                  << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                  << "ms\n";
        std::cout << name << ' ' << expected << ' ' << actual << ' ' << (ok ? "ok" : "MISMATCH");
        if (!ok && !detail.empty()) std::cout << " (" << detail << ')';
        std::cout << '\n';
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"separating-tangent inequality prover"};
    app.require_subcommand(1);

    std::string path, strategy, dir = "corpus", eps_text = "1/1000000000000";
    int budget = 0;
    long samples = 100, diag_samples = 0;
    std::uint64_t seed = 42;

    auto* prove_cmd = app.add_subcommand("prove", "prove a problem file");
    prove_cmd->add_option("path", path)->required();
    prove_cmd->add_option("--strategy", strategy, "force a strategy");
    prove_cmd->add_option("--budget", budget, "bisection depth budget");

    auto* diag_cmd = app.add_subcommand("diagnose", "rank separator candidates");
    diag_cmd->add_option("path", path)->required();
    diag_cmd->add_option("--samples", diag_samples, "stochastic falsifier trials (0 = off)");
    diag_cmd->add_option("--seed", seed, "falsifier seed");

    auto* plot_cmd = app.add_subcommand("plot", "sample f and g as CSV");
    plot_cmd->add_option("path", path)->required();
    plot_cmd->add_option("--samples", samples, "number of sample points");
    plot_cmd->add_option("--eps", eps_text, "enclosure width target");

    auto* corpus_cmd = app.add_subcommand("corpus", "run the problem corpus");
    corpus_cmd->add_option("dir", dir);

    CLI11_PARSE(app, argc, argv);

    try {
        if (prove_cmd->parsed()) return cmd_prove(path, strategy, budget);
        if (diag_cmd->parsed()) return cmd_diagnose(path, diag_samples, seed);
        if (plot_cmd->parsed()) return cmd_plot(path, samples, BigRational::parse(eps_text));
        if (corpus_cmd->parsed()) return cmd_corpus(dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
