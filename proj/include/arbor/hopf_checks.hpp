#pragma once

// Bialgebra identities checked term by term on single basis elements. Each
// check recomputes both sides independently and compares exactly.

#include <array>

#include "arbor/arborify.hpp"
#include "arbor/forests.hpp"
#include "arbor/words.hpp"

namespace arbor::hopf {

template <typename B>
using Triple = std::array<B, 3>;

/// (Δ ⊗ id) Δ x  and  (id ⊗ Δ) Δ x  as combinations of triples.
template <typename B, typename Coproduct>
bool coassociative(const B& x, Coproduct&& delta) {
    LinComb<Triple<B>> left, right;
    for (const auto& [p, c] : delta(x)) {
        for (const auto& [q, d] : delta(p.left)) left.add_term(Triple<B>{q.left, q.right, p.right}, c * d);
        for (const auto& [q, d] : delta(p.right)) right.add_term(Triple<B>{p.left, q.left, q.right}, c * d);
    }
    return left == right;
}

/// (ε ⊗ id) Δ x = x = (id ⊗ ε) Δ x, with ε the coefficient of the unit.
template <typename B, typename Coproduct>
bool counital(const B& x, Coproduct&& delta) {
    LinComb<B> left, right;
    for (const auto& [p, c] : delta(x)) {
        if (p.left == B{}) left.add_term(p.right, c);
        if (p.right == B{}) right.add_term(p.left, c);
    }
    return left == LinComb<B>::basis(x) && right == LinComb<B>::basis(x);
}

/// Δ(B+^d f) = B+^d f ⊗ 1 + (id ⊗ B+^d) Δ f
template <typename D>
bool cocycle(const D& d, const Forest<D>& f) {
    ForestTensor<D> rhs;
    Forest<D> grafted(b_plus(d, f));
    rhs.add_term({grafted, Forest<D>{}}, Rational(1));
    for (const auto& [p, c] : coproduct_bck(f)) rhs.add_term({p.left, Forest<D>(b_plus(d, p.right))}, c);
    return coproduct_bck(grafted) == rhs;
}

/// Δ(f g) = Δ(f) Δ(g) componentwise.
template <typename D>
bool multiplicative(const Forest<D>& f, const Forest<D>& g) {
    auto mul = [](const Forest<D>& a, const Forest<D>& b) { return LinComb<Forest<D>>::basis(a * b); };
    return coproduct_bck(f * g) == tensor_product(coproduct_bck(f), coproduct_bck(g), mul);
}

/// (a ⊗ a) Δ_BCK f = Δ_deconcat a(f) for an arborification a.
template <typename D, typename Arborify>
bool coalgebra_morphism(const Forest<D>& f, Arborify&& arborify) {
    auto lhs = tensor_map<Word<D>>(coproduct_bck(f), arborify, arborify);
    return lhs == deconcat(arborify(f));
}

/// a(f g) = a(f) * a(g) for the matching word product.
template <typename D, typename Arborify, typename Product>
bool algebra_morphism(const Forest<D>& f, const Forest<D>& g, Arborify&& arborify, Product&& product) {
    return arborify(f * g) == product(arborify(f), arborify(g));
}

/// Δ(u * v) = Δ(u) * Δ(v) for a word product (shuffle or quasi-shuffle).
template <typename L, typename Product>
bool word_bialgebra(const Word<L>& u, const Word<L>& v, Product&& product) {
    auto lhs = deconcat(product(LinComb<Word<L>>::basis(u), LinComb<Word<L>>::basis(v)));
    auto rhs = tensor_product(deconcat(u), deconcat(v), [&](const Word<L>& a, const Word<L>& b) {
        return product(LinComb<Word<L>>::basis(a), LinComb<Word<L>>::basis(b));
    });
    return lhs == rhs;
}

}  // namespace arbor::hopf
