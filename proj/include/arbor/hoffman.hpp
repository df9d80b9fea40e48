#pragma once

// Hoffman's exponential and logarithm: explicit Hopf algebra isomorphisms
// between the shuffle and quasi-shuffle algebras on the same letters, with
// exp(u ⧢ v) = exp(u) * exp(v) for the quasi-shuffle product *.
//
//   exp u = Σ_I 1/(i1! ... ir!) I[u]
//   log u = Σ_I (-1)^{k-r}/(i1 ... ir) I[u]
//
// where I = (i1, ..., ir) runs over compositions of k = |u| and I[u] merges
// consecutive blocks of u through the internal product.

#include <optional>
#include <vector>

#include "arbor/words.hpp"

namespace arbor {

using Composition = std::vector<int>;

/// All 2^{k-1} compositions of k in lexicographic order, e.g. k = 3 gives
/// (1,1,1), (1,2), (2,1), (3).
std::vector<Composition> compositions(int k);

/// I[u] for the index-sum product on Y. Throws std::invalid_argument when the
/// parts do not sum to |u|.
YWord apply_composition(const Composition& parts, const YWord& u);

/// I[u] for an arbitrary internal product; std::nullopt when some block
/// product vanishes.
template <typename L>
std::optional<Word<L>> apply_composition(const Composition& parts, const Word<L>& u,
                                         const std::type_identity_t<InternalProduct<L>>& product);

LinComb<YWord> exp_map(const YWord& u);
LinComb<YWord> log_map(const YWord& u);
LinComb<YWord> exp_map(const LinComb<YWord>& a);
LinComb<YWord> log_map(const LinComb<YWord>& a);

/// exp/log for a caller-supplied internal product. With the zero product
/// both reduce to the identity.
template <typename L>
LinComb<Word<L>> exp_map(const Word<L>& u, const std::type_identity_t<InternalProduct<L>>& product);
template <typename L>
LinComb<Word<L>> log_map(const Word<L>& u, const std::type_identity_t<InternalProduct<L>>& product);

// ---------------------------------------------------------------------------

template <typename L>
std::optional<Word<L>> apply_composition(const Composition& parts, const Word<L>& u,
                                         const std::type_identity_t<InternalProduct<L>>& product) {
    std::size_t total = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        total += static_cast<std::size_t>(p);
    }
    if (total != u.length()) throw std::invalid_argument("composition does not match word length");
    Word<L> out;
    std::size_t pos = 0;
    for (int p : parts) {
        std::optional<L> block = u[pos];
        for (int j = 1; j < p && block; ++j) block = product(*block, u[pos + static_cast<std::size_t>(j)]);
        if (!block) return std::nullopt;
        out.letters.push_back(*block);
        pos += static_cast<std::size_t>(p);
    }
    return out;
}

namespace detail {

template <typename L, typename Weight>
LinComb<Word<L>> composition_sum(const Word<L>& u, const InternalProduct<L>& product, Weight&& weight) {
    if (u.empty()) return LinComb<Word<L>>::basis(u);
    LinComb<Word<L>> out;
    for (const auto& parts : compositions(static_cast<int>(u.length())))
        if (auto w = apply_composition<L>(parts, u, product)) out.add_term(*w, weight(parts));
    return out;
}

Rational exp_weight(const Composition& parts);
Rational log_weight(const Composition& parts);

}  // namespace detail

template <typename L>
LinComb<Word<L>> exp_map(const Word<L>& u, const std::type_identity_t<InternalProduct<L>>& product) {
    return detail::composition_sum<L>(u, product, detail::exp_weight);
}

template <typename L>
LinComb<Word<L>> log_map(const Word<L>& u, const std::type_identity_t<InternalProduct<L>>& product) {
    return detail::composition_sum<L>(u, product, detail::log_weight);
}

}  // namespace arbor
