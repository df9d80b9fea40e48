#pragma once

// Identity verification suites and their reports.

#include <string>
#include <vector>

#include "arbor/mzv.hpp"

namespace arbor {

struct ReportRow {
    std::string identity;
    std::string lhs;
    std::string rhs;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<ReportRow> rows;

    bool all_pass() const;
    std::size_t failures() const;
};

enum class ReportFormat { text, tsv, json };

std::string format_report(const Report& report, ReportFormat format);

/// Quasi-shuffle, shuffle and Euler relations, 2ζ(2)² = 5ζ(4), the character
/// property on all convergent pairs of total weight <= max_weight, and the
/// Hoffman regularization relation for convergent words of weight <= max_weight.
Report verify_relations(int max_weight = 5, double tol = kDefaultTolerance);

/// ζ_sh ∘ s = ρ ∘ ζ_qsh on every Y-word of weight <= max_weight.
Report verify_bmz(int max_weight = 4, double tol = kDefaultTolerance);

/// Exact bialgebra identities for forests with <= max_vertices vertices and
/// words up to length 5.
Report verify_hopf(int max_vertices = 4);

/// Brute-force nested tree sums against the word expansion for convergent
/// Y-trees with <= max_vertices vertices decorated by y1, y2, y3.
Report verify_oracle(int max_vertices = 3, int bound = 5000, double tol = kDefaultTolerance);

/// Every published example, checked exactly or numerically.
Report run_selftest(double tol = kDefaultTolerance);

}  // namespace arbor
