#pragma once

// Univariate polynomials in the regularization variable θ with coefficients
// in C (symbolic word combinations, or reals after evaluation).

#include <cmath>
#include <map>
#include <optional>
#include <string>

#include "arbor/lincomb.hpp"
#include "arbor/rational.hpp"

namespace arbor {

// Coefficient-ring hooks. A coefficient type needs a zero test and scaling by
// a rational.
inline bool is_zero_coeff(double x) { return x == 0.0; }
inline double scale_coeff(const Rational& c, double x) { return c.to_double() * x; }
inline bool is_zero_coeff(const Rational& x) { return x.is_zero(); }
inline Rational scale_coeff(const Rational& c, const Rational& x) { return c * x; }
template <typename B>
bool is_zero_coeff(const LinComb<B>& x) { return x.empty(); }
template <typename B>
LinComb<B> scale_coeff(const Rational& c, const LinComb<B>& x) { return scale(c, x); }

template <typename C>
class ThetaPoly {
public:
    using Coeffs = std::map<int, C>;

    ThetaPoly() = default;

    static ThetaPoly constant(C c) { return monomial(0, std::move(c)); }
    static ThetaPoly monomial(int degree, C c) {
        ThetaPoly p;
        p.add_term(degree, c);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or std::nullopt for the zero polynomial ("−∞").
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.rbegin()->first;
    }
    const Coeffs& coeffs() const { return coeffs_; }

    C coefficient(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? C{} : it->second;
    }

    void add_term(int degree, const C& c) {
        if (is_zero_coeff(c)) return;
        auto [it, inserted] = coeffs_.try_emplace(degree, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_coeff(it->second)) coeffs_.erase(it);
        }
    }

    ThetaPoly& operator+=(const ThetaPoly& o) {
        for (const auto& [k, c] : o.coeffs_) add_term(k, c);
        return *this;
    }
    ThetaPoly& operator-=(const ThetaPoly& o) {
        for (const auto& [k, c] : o.coeffs_) add_term(k, scale_coeff(Rational(-1), c));
        return *this;
    }
    friend ThetaPoly operator+(ThetaPoly a, const ThetaPoly& b) { return a += b; }
    friend ThetaPoly operator-(ThetaPoly a, const ThetaPoly& b) { return a -= b; }

    friend ThetaPoly scale(const Rational& s, const ThetaPoly& p) {
        ThetaPoly r;
        for (const auto& [k, c] : p.coeffs_) r.add_term(k, scale_coeff(s, c));
        return r;
    }

    /// Multiplication by θ^shift.
    ThetaPoly shifted(int shift) const {
        ThetaPoly r;
        for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k + shift, c);
        return r;
    }

    /// n-th formal derivative in θ.
    ThetaPoly derive(int n = 1) const {
        ThetaPoly r;
        for (const auto& [k, c] : coeffs_) {
            if (k < n) continue;
            r.add_term(k - n, scale_coeff(factorial(k) / factorial(k - n), c));
        }
        return r;
    }

    /// Product with a coefficient-level multiplication.
    template <typename Mul>
    friend ThetaPoly multiply(const ThetaPoly& a, const ThetaPoly& b, Mul&& mul) {
        ThetaPoly r;
        for (const auto& [i, ca] : a.coeffs_)
            for (const auto& [j, cb] : b.coeffs_) r.add_term(i + j, mul(ca, cb));
        return r;
    }

    friend bool operator==(const ThetaPoly& a, const ThetaPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    Coeffs coeffs_;
};

using RealThetaPoly = ThetaPoly<double>;

inline RealThetaPoly operator*(const RealThetaPoly& a, const RealThetaPoly& b) {
    return multiply(a, b, [](double x, double y) { return x * y; });
}

/// Largest absolute coefficient difference.
inline double max_coeff_residual(const RealThetaPoly& a, const RealThetaPoly& b) {
    double worst = 0.0;
    for (const auto& [k, c] : a.coeffs()) worst = std::max(worst, std::abs(c - b.coefficient(k)));
    for (const auto& [k, c] : b.coeffs()) worst = std::max(worst, std::abs(c - a.coefficient(k)));
    return worst;
}

std::string format_real(double x, int significant = 12);

/// Human-readable `a*θ^2 + b*θ + c` using the letter `theta`.
std::string to_string(const RealThetaPoly& p);

}  // namespace arbor
