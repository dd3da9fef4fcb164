#pragma once

#include <variant>

#include "ineq/theorems.hpp"

namespace ineq {

enum class Strategy { DirectSeparator, Theorem1, Theorem2, Theorem3Cubic, DomainSplit };

const char* strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(const std::string& name);

/// How the conclusion chain reaches the bound: separator transfer
/// (k*total + n*m), the theorem form (n*f(x0)), the n=1 degeneracy, or the
/// split composition.
enum class ChainKind { SeparatorTransfer, PowerMean, Degenerate, Split };

const char* chain_kind_name(ChainKind k);

struct ChainStep {
    std::string label;  // no spaces; e.g. "k*total", "n*m", "transfer", "bound"
    BigRational value;
};

struct ProofCertificate {
    ProblemSpec spec;
    Strategy strategy = Strategy::DirectSeparator;
    bool negated = false;  // theorem routes prove SumAtLeast of -f
    BigRational split_t;   // DomainSplit only
    std::optional<Separator> separator;
    std::optional<SeparationProof> separation;
    std::optional<TheoremReport> theorem_report;
    std::optional<DomainSplitCertificate> split;
    ChainKind chain_kind = ChainKind::SeparatorTransfer;
    std::vector<ChainStep> conclusion_chain;
};

struct StrategyAttempt {
    Strategy strategy = Strategy::DirectSeparator;
    std::optional<TheoremReport> report;
    std::optional<SeparationOutcome> separation;
    std::string note;
};

struct Diagnosis {
    Strategy failed_strategy = Strategy::DirectSeparator;
    std::vector<TheoremCondition> failed_conditions;
    std::optional<ExprSignWitness> witness;
    std::string suggestion;
    std::vector<StrategyAttempt> attempts;
};

struct ProveHint {
    std::optional<std::string> strategy;
    std::optional<Expr> separator_l;
    std::optional<BigRational> split_t;
    int budget = 40;
};

using ProveResult = std::variant<ProofCertificate, Diagnosis>;

/// Fixed strategy order: hint, Theorem 3 (cubic + sum), Theorem 1 (power-sum
/// or product constraint), direct separator from the constraint's l, domain
/// split when a threshold hint is given. First success wins.
ProveResult prove(const ProblemSpec& spec, const ProveHint& hint = {});

struct VerifyResult {
    bool valid = false;
    std::string reason;  // empty when valid
};

/// Independent re-check: re-derives tangency, re-multiplies the quotient,
/// re-runs sign verdicts, and re-evaluates the conclusion chain.
VerifyResult verify_certificate(const ProofCertificate& cert);

/// Cheap sign-condition ranking of separator families, best first.
struct DiagnoseEntry {
    std::string l_name;
    std::string condition;
    RatInterval value;
    bool pass = false;
    int score = 0;
};

std::vector<DiagnoseEntry> diagnose(const ProblemSpec& spec);

/// Flat ordered key-value text document; parse(serialize(c)) round-trips
/// bit-exactly.
std::string serialize_certificate(const ProofCertificate& cert);
ProofCertificate parse_certificate(const std::string& text);

std::string serialize_diagnosis(const Diagnosis& d);

}  // namespace ineq
