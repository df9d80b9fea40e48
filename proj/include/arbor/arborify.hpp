#pragma once

// Simple (shuffle) and contracting (quasi-shuffle) arborification: the Hopf
// algebra morphisms from decorated forests onto words fixed by
// arborify(B+^d(f)) = arborify(f) · d (right concatenation), together with the
// ladder sections and the ladder-based arborified substitution.

#include <map>
#include <stdexcept>

#include "arbor/forests.hpp"
#include "arbor/words.hpp"

namespace arbor {

enum class Flavor { simple, contracting };

namespace detail {

template <typename D, typename Product>
const LinComb<Word<D>>& arborify_tree(const Tree<D>& t, std::map<Tree<D>, LinComb<Word<D>>>& memo,
                                      Product& product) {
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    LinComb<Word<D>> below = LinComb<Word<D>>::basis(Word<D>{});
    for (const auto& child : t.children()) below = product(below, arborify_tree(child, memo, product));
    LinComb<Word<D>> out;
    for (const auto& [w, c] : below) out.add_term(w.appended(t.decoration()), c);
    return memo.emplace(t, std::move(out)).first->second;
}

template <typename D, typename Product>
LinComb<Word<D>> arborify_forest(const Forest<D>& f, Product product) {
    std::map<Tree<D>, LinComb<Word<D>>> memo;
    LinComb<Word<D>> acc = LinComb<Word<D>>::basis(Word<D>{});
    for (const auto& t : f.trees()) acc = product(acc, arborify_tree(t, memo, product));
    return acc;
}

}  // namespace detail

/// Simple arborification onto (Q<X>, ⧢).
inline LinComb<XWord> arborify_x(const XForest& f) {
    return detail::arborify_forest(
        f, [](const LinComb<XWord>& a, const LinComb<XWord>& b) { return shuffle(a, b); });
}

/// Contracting arborification onto (Q<Y>, quasi-shuffle).
inline LinComb<YWord> arborify_y(const YForest& f) {
    return detail::arborify_forest(
        f, [](const LinComb<YWord>& a, const LinComb<YWord>& b) { return quasi_shuffle(a, b); });
}

inline LinComb<XWord> arborify_x(const LinComb<XForest>& a) {
    return a.map_linear([](const XForest& f) { return arborify_x(f); });
}
inline LinComb<YWord> arborify_y(const LinComb<YForest>& a) {
    return a.map_linear([](const YForest& f) { return arborify_y(f); });
}

/// The ladder whose top leaf carries the first letter and whose root carries
/// the last one. Throws std::invalid_argument for the empty word.
template <typename L>
Tree<L> ladder(const Word<L>& w) {
    if (w.empty()) throw std::invalid_argument("the empty word has no ladder");
    Tree<L> t(w[0]);
    for (std::size_t i = 1; i < w.length(); ++i) t = Tree<L>(w[i], {t});
    return t;
}

inline XTree ladder_x(const XWord& w) { return ladder(w); }
inline YTree ladder_y(const YWord& w) { return ladder(w); }

/// Ladder as a forest; the empty word maps to the empty forest.
template <typename L>
Forest<L> ladder_forest(const Word<L>& w) {
    return w.empty() ? Forest<L>{} : Forest<L>(ladder(w));
}

/// Ladder-based arborified substitution: ladder ∘ s ∘ arborify_y.
LinComb<XForest> s_tree(const YForest& f);

/// Every leaf decoration has index >= 2.
bool is_convergent_tree(const YForest& f);
/// Every root is x1 and every leaf is x0 (so single vertices never are).
bool is_convergent_tree(const XForest& f);

/// First offending vertex for a non-convergent forest, for diagnostics.
/// Returns an empty string when the forest is convergent.
std::string divergence_reason(const YForest& f);
std::string divergence_reason(const XForest& f);

}  // namespace arbor
