#pragma once

#include <string>
#include <vector>

#include "schubert/pieri.hpp"

namespace schubert {

struct SuiteResult {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Word-independence of the localization values over every reduced word of
/// every element of S_n, plus the degree-one closed form against the
/// subsequence formula.
SuiteResult verify_billey_independence(int n);

/// Three-way agreement of the superiority rule, the column recursion and the
/// triangular solve for every (k, m, w).
SuiteResult verify_oracle_agreement(int n);

/// Same check over `samples` distinct random (w, k, m) tuples.
SuiteResult verify_oracle_agreement_sampled(int n, int samples, unsigned seed);

/// Every structure constant is a nonnegative integer combination of
/// monomials in the simple roots, homogeneous of the complementary degree.
SuiteResult verify_positivity(int n);

/// Combinatorics of the superior sets: transposition flags, prefix closure,
/// and the four transition laws between S_w(k,p) and S_w(k-1,p-1); plus the
/// value invariances used alongside them.
SuiteResult verify_lemmas(int n);

/// Specializing all variables to zero reproduces the classical 0/1 rule.
SuiteResult verify_classical_limit(int n);

/// Runs the named suite ("all" for every suite); throws std::invalid_argument
/// for unknown names.
std::vector<SuiteResult> verify_suite(const std::string& name, int n);

}  // namespace schubert
