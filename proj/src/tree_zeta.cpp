#include "arbor/tree_zeta.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace arbor {

double zeta_tree_y(const YForest& f, const MzvCache& zeta) {
    if (auto why = divergence_reason(f); !why.empty()) throw DivergenceError(to_string(f) + ": " + why);
    return zeta_word_y(arborify_y(f), zeta);
}

double zeta_tree_x(const XForest& f, const MzvCache& zeta) {
    if (auto why = divergence_reason(f); !why.empty()) throw DivergenceError(to_string(f) + ": " + why);
    return zeta_word_x(arborify_x(f), zeta);
}

namespace {

// weights[k] = Σ over admissible maps of the subtree with root value k.
std::vector<double> subtree_sums(const YTree& t, int bound) {
    const auto size = static_cast<std::size_t>(bound) + 2;
    std::vector<double> weights(size, 0.0);
    for (int k = 1; k <= bound; ++k) weights[static_cast<std::size_t>(k)] = std::pow(k, -t.decoration().index);
    for (const auto& child : t.children()) {
        auto child_weights = subtree_sums(child, bound);
        // above[k] = Σ_{k < m <= bound} child_weights[m]
        double above = 0.0;
        for (int k = bound; k >= 1; --k) {
            weights[static_cast<std::size_t>(k)] *= above;
            above += child_weights[static_cast<std::size_t>(k)];
        }
    }
    return weights;
}

}  // namespace

double brute_tree_sum(const YTree& t, int bound) {
    if (bound < 1) return 0.0;
    auto weights = subtree_sums(t, bound);
    double total = 0.0;
    for (int k = bound; k >= 1; --k) total += weights[static_cast<std::size_t>(k)];
    return total;
}

namespace {

// For the subtree t with root value forced above p:
//   full sum    A_t(p) <= c * p^{-s}  (p >= 1)
//   omitted part of the box sum <= tail, uniformly in p.
struct Envelope {
    double c = 0.0;
    double s = 0.0;
    double tail = 0.0;
};

Envelope envelope(const YTree& t, int bound) {
    const int n = t.decoration().index;
    std::vector<Envelope> kids;
    double c_prod = 1.0, a = n;
    for (const auto& child : t.children()) {
        kids.push_back(envelope(child, bound));
        c_prod *= kids.back().c;
        a += kids.back().s;
    }
    const double inf = std::numeric_limits<double>::infinity();
    if (a <= 1.0 || !std::isfinite(c_prod)) return {inf, 0.0, inf};
    Envelope e{c_prod / (a - 1.0), a - 1.0, 0.0};
    // Root above the box: Σ_{k>bound} k^{-a} <= bound^{1-a}/(a-1).
    e.tail = c_prod * std::pow(bound, 1.0 - a) / (a - 1.0);
    // Root inside the box, some descendant outside:
    // Π A_i - Π A_i^box <= Σ_i tail_i Π_{j≠i} A_j.
    for (std::size_t i = 0; i < kids.size(); ++i) {
        double others = 1.0, s_others = 0.0;
        for (std::size_t j = 0; j < kids.size(); ++j)
            if (j != i) {
                others *= kids[j].c;
                s_others += kids[j].s;
            }
        double sum = 0.0;
        for (int k = bound; k >= 1; --k) sum += std::pow(k, -(n + s_others));
        e.tail += kids[i].tail * others * sum;
    }
    return e;
}

}  // namespace

double brute_tree_tail_bound(const YTree& t, int bound) {
    if (bound < 1) return std::numeric_limits<double>::infinity();
    return envelope(t, bound).tail;
}

}  // namespace arbor
