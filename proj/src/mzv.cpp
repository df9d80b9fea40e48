#include "arbor/mzv.hpp"

#include <cmath>
#include <limits>

#include "arbor/rational.hpp"

namespace arbor {

int MzvIndex::weight() const {
    int w = 0;
    for (int n : exponents) w += n;
    return w;
}

MzvIndex mzv_index(const YWord& w) {
    MzvIndex idx;
    idx.exponents.reserve(w.length());
    for (const auto& l : w.letters) idx.exponents.push_back(l.index);
    return idx;
}

std::string to_string(const MzvIndex& idx) {
    if (idx.exponents.empty()) return "1";
    std::string s = "zeta(";
    for (std::size_t i = 0; i < idx.exponents.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(idx.exponents[i]);
    }
    return s + ")";
}

namespace {

std::vector<Rational> bernoulli_table(int count) {
    // B_0..B_{count-1} from Σ_{k<m+1} C(m+1,k) B_k = 0.
    std::vector<Rational> b(static_cast<std::size_t>(count));
    b[0] = Rational(1);
    for (int m = 1; m < count; ++m) {
        Rational acc(0);
        Rational binom(1);  // C(m+1, k)
        for (int k = 0; k < m; ++k) {
            acc += binom * b[static_cast<std::size_t>(k)];
            binom = binom * Rational(m + 1 - k) / Rational(k + 1);
        }
        b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
    }
    return b;
}

constexpr int kMaxBernoulli = 120;

}  // namespace

double bernoulli_even(int p) {
    static const std::vector<double> values = [] {
        auto table = bernoulli_table(kMaxBernoulli + 1);
        std::vector<double> even;
        for (int i = 0; i <= kMaxBernoulli; i += 2) even.push_back(table[static_cast<std::size_t>(i)].to_double());
        return even;
    }();
    if (p < 0 || static_cast<std::size_t>(p) >= values.size()) throw std::out_of_range("Bernoulli index");
    return values[static_cast<std::size_t>(p)];
}

// Σ_{k>M} k^{-s} = M^{1-s}/(s-1) - M^{-s}/2 + Σ_{p>=1} B_{2p}/(2p)! (s)_{2p-1} M^{-s-2p+1} + R
std::map<int, double> power_tail_series(int s, int max_order) {
    if (s < 2) throw std::invalid_argument("power tail needs s >= 2");
    std::map<int, double> out;
    if (s - 1 <= max_order) out[s - 1] += 1.0 / (s - 1);
    if (s <= max_order) out[s] += -0.5;
    double rising = s;        // (s)_{2p-1}
    double inv_fact = 0.5;    // 1/(2p)!
    for (int p = 1; s + 2 * p - 1 <= max_order; ++p) {
        if (p > 1) {
            rising *= static_cast<double>(s + 2 * p - 3) * static_cast<double>(s + 2 * p - 2);
            inv_fact /= static_cast<double>(2 * p - 1) * static_cast<double>(2 * p);
        }
        out[s + 2 * p - 1] += bernoulli_even(p) * inv_fact * rising;
    }
    return out;
}

namespace {

double eval_series(const std::map<int, double>& series, double cutoff, int max_order) {
    double acc = 0.0;
    // Smallest terms first.
    for (auto it = series.rbegin(); it != series.rend(); ++it)
        if (it->first <= max_order) acc += it->second * std::pow(cutoff, -it->first);
    return acc;
}

double abs_series(const std::map<int, double>& series, double cutoff) {
    double acc = 0.0;
    for (const auto& [c, a] : series) acc += std::abs(a) * std::pow(cutoff, -c);
    return acc;
}

struct Attempt {
    double value;
    double error;
};

Attempt evaluate_at(const std::vector<int>& n, int cutoff, int max_order) {
    const std::size_t r = n.size();
    const double m = cutoff;

    // head[j] = H_M(n_{j}..n_{r-1}) (0-based), head[r] = 1.
    std::vector<double> head(r + 1, 0.0);
    head[r] = 1.0;
    {
        // level[k] = Σ over chains starting at index j with first value <= k.
        std::vector<double> prev(static_cast<std::size_t>(cutoff) + 1, 1.0);  // empty chain
        for (std::size_t j = r; j-- > 0;) {
            std::vector<double> cur(static_cast<std::size_t>(cutoff) + 1, 0.0);
            for (int k = 1; k <= cutoff; ++k)
                cur[static_cast<std::size_t>(k)] =
                    cur[static_cast<std::size_t>(k) - 1] +
                    std::pow(static_cast<double>(k), -n[j]) *
                        (j + 1 == r ? 1.0 : prev[static_cast<std::size_t>(k) - 1]);
            head[j] = cur[static_cast<std::size_t>(cutoff)];
            prev = std::move(cur);
        }
    }

    // tail[j] = T(n_0..n_{j-1}; M) as a series in 1/M.
    double value = head[0];
    double truncation = 0.0;
    double magnitude = std::abs(head[0]);
    std::map<int, double> series;
    for (std::size_t j = 0; j < r; ++j) {
        std::map<int, double> next;
        if (j == 0) {
            next = power_tail_series(n[0], max_order);
        } else {
            for (const auto& [c, a] : series) {
                if (n[j] + c - 1 > max_order) break;
                for (const auto& [d, b] : power_tail_series(n[j] + c, max_order)) next[d] += a * b;
            }
        }
        series = std::move(next);
        const double tail = eval_series(series, m, max_order);
        const double reduced = eval_series(series, m, max_order - 6);
        const double h = head[j + 1];
        value += tail * h;
        magnitude += std::abs(tail * h) + abs_series(series, m) * h;
        truncation += std::abs(tail - reduced) * h;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double rounding = eps * magnitude * (16.0 * (static_cast<double>(r) + 2.0) + m * static_cast<double>(r));
    return {value, truncation + rounding};
}

}  // namespace

MzvValue evaluate_mzv(const MzvIndex& idx, double tol) {
    if (!(tol >= kMinTolerance)) throw std::invalid_argument("tolerance must be >= 1e-12");
    for (int e : idx.exponents)
        if (e < 1) throw std::invalid_argument("MZV exponents must be positive");
    if (!idx.convergent()) throw DivergenceError(to_string(idx) + " diverges (leading exponent 1)");
    if (idx.exponents.empty()) return {1.0, 0.0};

    constexpr int kMaxOrder = 48;
    Attempt best{0.0, std::numeric_limits<double>::infinity()};
    for (int cutoff = 32; cutoff <= 4096; cutoff *= 2) {
        best = evaluate_at(idx.exponents, cutoff, kMaxOrder);
        if (best.error <= tol) return {best.value, best.error};
    }
    throw std::runtime_error("could not certify " + to_string(idx) + " to tolerance " + std::to_string(tol));
}

double MzvCache::operator()(const MzvIndex& idx) const {
    {
        std::shared_lock lock(mutex_);
        if (auto it = values_.find(idx); it != values_.end()) return it->second;
    }
    double v = evaluate_mzv(idx, tol_).value;
    std::unique_lock lock(mutex_);
    return values_.try_emplace(idx, v).first->second;
}

double zeta_word_y(const YWord& w, const MzvCache& zeta) {
    if (!is_convergent(w)) throw DivergenceError("word " + to_string(w) + " is not convergent");
    return zeta(mzv_index(w));
}

double zeta_word_y(const LinComb<YWord>& a, const MzvCache& zeta) {
    double acc = 0.0;
    for (const auto& [w, c] : a) acc += c.to_double() * zeta_word_y(w, zeta);
    return acc;
}

double zeta_word_x(const XWord& v, const MzvCache& zeta) {
    if (!is_convergent(v)) throw DivergenceError("word " + to_string(v) + " is not convergent");
    // Each x1 closes a block x0^{n-1} x1 contributing the exponent n.
    MzvIndex idx;
    int run = 0;
    for (auto l : v.letters) {
        ++run;
        if (l == XLetter::x1) {
            idx.exponents.push_back(run);
            run = 0;
        }
    }
    return zeta(idx);
}

double zeta_word_x(const LinComb<XWord>& a, const MzvCache& zeta) {
    double acc = 0.0;
    for (const auto& [v, c] : a) acc += c.to_double() * zeta_word_x(v, zeta);
    return acc;
}

}  // namespace arbor
