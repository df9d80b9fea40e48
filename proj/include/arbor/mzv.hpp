#pragma once

// Numerical multiple zeta values
//
//   ζ(n1, ..., nr) = Σ_{k1 > k2 > ... > kr >= 1} 1 / (k1^n1 ... kr^nr),  n1 >= 2.
//
// Evaluation splits every chain at a cut-off M:
//
//   ζ(n1..nr) = Σ_j T(n1..nj; M) · H_M(n_{j+1}..nr)
//
// where H_M is the finite nested sum with all indices <= M and
// T(n1..nj; M) = Σ_{k1 > ... > kj > M} Π k_i^{-n_i} is the tail. Tails are
// expanded in powers of 1/M: at depth one by Euler-Maclaurin, deeper by
// substituting the expansion of the previous depth and applying
// Euler-Maclaurin term by term. The reported error bound combines the series
// truncation (measured by dropping the highest retained orders) and a
// floating-point rounding estimate; M doubles until the bound meets `tol`.

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "arbor/lincomb.hpp"
#include "arbor/words.hpp"

namespace arbor {

struct MzvIndex {
    std::vector<int> exponents;

    int weight() const;
    int depth() const { return static_cast<int>(exponents.size()); }
    bool convergent() const { return exponents.empty() || exponents.front() >= 2; }

    friend auto operator<=>(const MzvIndex&, const MzvIndex&) = default;
    friend bool operator==(const MzvIndex&, const MzvIndex&) = default;
};

MzvIndex mzv_index(const YWord& w);
/// `zeta(3,1)`, or `1` for the empty index.
std::string to_string(const MzvIndex& idx);

/// Raised for divergent input (an MZV with n1 = 1, a non-convergent word or
/// forest) to numerical routines that require convergence.
class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct MzvValue {
    double value = 0.0;
    double error_bound = 0.0;
};

inline constexpr double kMinTolerance = 1e-12;
inline constexpr double kDefaultTolerance = 1e-9;

/// ζ(idx) with a certified absolute error <= tol. Throws DivergenceError if
/// n1 = 1 and std::invalid_argument if tol < 1e-12.
MzvValue evaluate_mzv(const MzvIndex& idx, double tol = kDefaultTolerance);

inline double eval_mzv(const MzvIndex& idx, double tol = kDefaultTolerance) {
    return evaluate_mzv(idx, tol).value;
}

/// Thread-safe memo over evaluate_mzv at a fixed tolerance.
class MzvCache {
public:
    explicit MzvCache(double tol = kDefaultTolerance) : tol_(tol) {}

    double operator()(const MzvIndex& idx) const;
    double tolerance() const { return tol_; }

private:
    double tol_;
    mutable std::shared_mutex mutex_;
    mutable std::map<MzvIndex, double> values_;
};

/// ζ of convergent Y-words, extended linearly. Throws DivergenceError for a
/// non-convergent word.
double zeta_word_y(const YWord& w, const MzvCache& zeta);
double zeta_word_y(const LinComb<YWord>& a, const MzvCache& zeta);

/// ζ of convergent X-words (x0 ... x1), read directly as iterated-integral
/// words, extended linearly.
double zeta_word_x(const XWord& v, const MzvCache& zeta);
double zeta_word_x(const LinComb<XWord>& a, const MzvCache& zeta);

/// Tail expansion helper exposed for testing: coefficients a_c of
/// Σ_{k > M} k^{-s} ~ Σ_c a_c M^{-c}, for c <= max_order.
std::map<int, double> power_tail_series(int s, int max_order);

/// Even Bernoulli numbers B_{2p} as doubles, p = 0..
double bernoulli_even(int p);

}  // namespace arbor
