#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mzv/rational.hpp"
#include "mzv/words.hpp"

namespace mzv {

enum class SuiteKind { Symbolic, Numeric };

struct SuiteCase {
    std::string instance;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    /// |lhs - rhs| for numeric cases; number of differing terms for symbolic ones.
    double discrepancy = 0;
    /// Combined evaluator bound of both sides (numeric cases only).
    double bound = 0;
    std::string reason;
};

struct SuiteInfo {
    std::string name;
    std::string statement;  // the identity being checked, in words
    std::string range;      // instance enumeration
    SuiteKind kind = SuiteKind::Numeric;
    bool implemented = true;
    double tolerance = 0;
};

struct SuiteResult {
    SuiteInfo info;
    std::vector<SuiteCase> cases;
    double worst_bound = 0;

    bool passed() const;
    std::size_t failures() const;
    std::string summary() const;
};

struct SuiteParams {
    /// Lowers the main size parameter (weight or n) of a suite below its registered cap.
    std::optional<int> max_weight;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo& suite_info(const std::string& name);

/// Runs one registered suite; throws DomainError for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteParams& params = {});

/// Every registry entry, in registry order.
std::vector<SuiteResult> run_all(const SuiteParams& params = {});

// ---- building blocks, exposed for tests -------------------------------------

/// Compositions of n into k positive parts, in lexicographic order.
std::vector<std::vector<int>> compositions(int n, int k);

/// I(n, k): compositions of n into k parts with first part >= 2.
std::vector<std::vector<int>> admissible_compositions(int n, int k);

/// The duality involution computed from the block form (1+b, {1}^{a-1}, ...).
std::vector<int> tau_blocks(const std::vector<int>& s);

/// Coefficient of zeta(s) in the weighted sum formula with prefix sums S_i.
Rational gx_weight(const std::vector<int>& s);

/// Closed form of x0^{r-1}x1 shuffled with x0^{s-1}x1 as binary words.
WordSumQ euler_decomposition_formula(int r, int s);

/// sum_t (sum over shuffle index pairs of prod_i c(i)) z_t for compositions r and s.
WordSumQ generalized_decomposition(const std::vector<int>& r, const std::vector<int>& s);

/// Brute force: shuffle the binary words and translate back to compositions.
WordSumQ brute_force_decomposition(const std::vector<int>& r, const std::vector<int>& s);

} // namespace mzv
