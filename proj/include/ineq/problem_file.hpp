#pragma once

#include <map>

#include "ineq/prover.hpp"

namespace ineq {

/// A .ineq document: the problem spec, optional proof hints, and optional
/// expected-outcome annotations used by the corpus runner.
struct ProblemFile {
    ProblemSpec spec;
    ProveHint hint;
    std::map<std::string, std::string> expectations;  // expect_* keys, verbatim values
    bool budget_given = false;  // whether the file carried an explicit budget line
};

/// Parses the line-oriented "key value" format ('#' comments, blank lines
/// allowed). Unknown keys raise ParseError; an x0 that does not satisfy
/// n*l(x0) = total raises InconsistentSpec.
ProblemFile parse_problem(const std::string& text);

ProblemFile load_problem(const std::string& path);

/// Lossless re-emission: emit(parse(t)) is a fixpoint for canonical input.
std::string emit_problem(const ProblemFile& pf);

}  // namespace ineq
