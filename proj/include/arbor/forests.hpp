#pragma once

// Decorated non-planar rooted trees and forests (the Butcher-Connes-Kreimer
// Hopf algebra): canonical form, grafting B+, product, grading, counit and
// the admissible-cut coproduct.

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/lincomb.hpp"
#include "arbor/words.hpp"

namespace arbor {

/// A decorated rooted tree. Children are kept sorted by the canonical order,
/// so structural equality is equality of non-planar trees.
template <typename D>
class Tree {
public:
    explicit Tree(D decoration, std::vector<Tree> children = {})
        : decoration_(std::move(decoration)), children_(std::move(children)) {
        std::sort(children_.begin(), children_.end());
        vertices_ = 1;
        for (const auto& c : children_) vertices_ += c.vertices_;
    }

    const D& decoration() const { return decoration_; }
    const std::vector<Tree>& children() const { return children_; }
    int vertex_count() const { return vertices_; }
    bool is_leaf() const { return children_.empty(); }

    /// Canonical total order: vertex count, root decoration, then the sorted
    /// child lists lexicographically.
    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
        if (auto c = a.vertices_ <=> b.vertices_; c != 0) return c;
        if (a.decoration_ < b.decoration_) return std::strong_ordering::less;
        if (b.decoration_ < a.decoration_) return std::strong_ordering::greater;
        return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(),
                                                      b.children_.begin(), b.children_.end());
    }
    friend bool operator==(const Tree& a, const Tree& b) {
        return a.vertices_ == b.vertices_ && a.decoration_ == b.decoration_ && a.children_ == b.children_;
    }

private:
    D decoration_;
    std::vector<Tree> children_;
    int vertices_ = 1;
};

/// A commutative monomial in trees; the empty forest is the unit.
template <typename D>
class Forest {
public:
    Forest() = default;
    explicit Forest(std::vector<Tree<D>> trees) : trees_(std::move(trees)) {
        std::sort(trees_.begin(), trees_.end());
        for (const auto& t : trees_) vertices_ += t.vertex_count();
    }
    Forest(Tree<D> tree) : trees_{std::move(tree)} {  // NOLINT(google-explicit-constructor)
        vertices_ = trees_.front().vertex_count();
    }

    bool empty() const { return trees_.empty(); }
    const std::vector<Tree<D>>& trees() const { return trees_; }
    int grade() const { return vertices_; }

    friend Forest operator*(const Forest& f, const Forest& g) {
        std::vector<Tree<D>> all;
        all.reserve(f.trees_.size() + g.trees_.size());
        std::merge(f.trees_.begin(), f.trees_.end(), g.trees_.begin(), g.trees_.end(),
                   std::back_inserter(all));
        Forest r;
        r.trees_ = std::move(all);
        r.vertices_ = f.vertices_ + g.vertices_;
        return r;
    }

    friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
        if (auto c = a.vertices_ <=> b.vertices_; c != 0) return c;
        return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(),
                                                      b.trees_.begin(), b.trees_.end());
    }
    friend bool operator==(const Forest& a, const Forest& b) { return a.trees_ == b.trees_; }

private:
    std::vector<Tree<D>> trees_;
    int vertices_ = 0;
};

using XTree = Tree<XLetter>;
using YTree = Tree<YLetter>;
using XForest = Forest<XLetter>;
using YForest = Forest<YLetter>;

/// Grafting operator B+^d: the trees of f become the root's subtrees.
template <typename D>
Tree<D> b_plus(const D& d, const Forest<D>& f) {
    return Tree<D>(d, f.trees());
}

template <typename D>
Forest<D> forest_product(const Forest<D>& f, const Forest<D>& g) {
    return f * g;
}

template <typename D>
LinComb<Forest<D>> forest_product(const LinComb<Forest<D>>& a, const LinComb<Forest<D>>& b) {
    return bilinear_extend([](const Forest<D>& f, const Forest<D>& g) { return LinComb<Forest<D>>::basis(f * g); },
                           a, b);
}

template <typename D>
Rational counit(const Forest<D>& f) {
    return f.empty() ? Rational(1) : Rational(0);
}

template <typename D>
int grade(const Forest<D>& f) {
    return f.grade();
}

// ---------------------------------------------------------------------------
// Text form.
//   tree   := decoration ( '(' tree (',' tree)* ')' )?
//   forest := tree (';' tree)* | 'e'

template <typename D>
std::string to_string(const Tree<D>& t) {
    std::string s = LetterTraits<D>::name(t.decoration());
    if (!t.is_leaf()) {
        s += '(';
        for (std::size_t i = 0; i < t.children().size(); ++i) {
            if (i) s += ',';
            s += to_string(t.children()[i]);
        }
        s += ')';
    }
    return s;
}

template <typename D>
std::string to_string(const Forest<D>& f) {
    if (f.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < f.trees().size(); ++i) {
        if (i) s += ';';
        s += to_string(f.trees()[i]);
    }
    return s;
}

namespace detail {

template <typename D>
class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    Forest<D> forest() {
        skip_ws();
        if (peek() == 'e') {
            std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (at_end()) return Forest<D>{};
            pos_ = save;
        }
        std::vector<Tree<D>> trees;
        trees.push_back(tree());
        skip_ws();
        while (peek() == ';') {
            ++pos_;
            trees.push_back(tree());
            skip_ws();
        }
        expect_end();
        return Forest<D>(std::move(trees));
    }

    Tree<D> single_tree() {
        Tree<D> t = tree();
        expect_end();
        return t;
    }

private:
    Tree<D> tree() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected a decoration", start);
        auto token = text_.substr(start, pos_ - start);
        auto d = LetterTraits<D>::parse(token);
        if (!d)
            throw ParseError("unknown decoration '" + std::string(token) + "' for alphabet " +
                                 std::string(1, LetterTraits<D>::prefix),
                             start);
        std::vector<Tree<D>> children;
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            children.push_back(tree());
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                children.push_back(tree());
                skip_ws();
            }
            if (peek() != ')') throw ParseError("expected ',' or ')'", pos_);
            ++pos_;
        }
        return Tree<D>(*d, std::move(children));
    }

    void expect_end() {
        skip_ws();
        if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <typename D>
Tree<D> parse_tree(std::string_view text) {
    return detail::TreeParser<D>(text).single_tree();
}

template <typename D>
Forest<D> parse_forest(std::string_view text) {
    return detail::TreeParser<D>(text).forest();
}

// ---------------------------------------------------------------------------
// Coproduct.

template <typename D>
using ForestTensor = LinComb<TensorPair<Forest<D>>>;

namespace detail {

template <typename D>
ForestTensor<D> forest_coproduct_memo(const Forest<D>& f, std::map<Tree<D>, ForestTensor<D>>& memo);

// Δ(B+^d(g)) = B+^d(g) ⊗ 1 + (id ⊗ B+^d) Δ(g)
template <typename D>
const ForestTensor<D>& tree_coproduct_memo(const Tree<D>& t, std::map<Tree<D>, ForestTensor<D>>& memo) {
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    Forest<D> below(t.children());
    ForestTensor<D> result;
    result.add_term(TensorPair<Forest<D>>{Forest<D>(t), Forest<D>{}}, Rational(1));
    for (const auto& [pair, c] : forest_coproduct_memo(below, memo))
        result.add_term(TensorPair<Forest<D>>{pair.left, Forest<D>(b_plus(t.decoration(), pair.right))}, c);
    return memo.emplace(t, std::move(result)).first->second;
}

template <typename D>
ForestTensor<D> forest_coproduct_memo(const Forest<D>& f, std::map<Tree<D>, ForestTensor<D>>& memo) {
    ForestTensor<D> acc;
    acc.add_term(TensorPair<Forest<D>>{Forest<D>{}, Forest<D>{}}, Rational(1));
    auto mul = [](const Forest<D>& a, const Forest<D>& b) { return LinComb<Forest<D>>::basis(a * b); };
    for (const auto& t : f.trees()) acc = tensor_product(acc, tree_coproduct_memo(t, memo), mul);
    return acc;
}

}  // namespace detail

/// BCK coproduct: sum over admissible cuts of crown ⊗ trunk.
template <typename D>
ForestTensor<D> coproduct_bck(const Forest<D>& f) {
    std::map<Tree<D>, ForestTensor<D>> memo;
    return detail::forest_coproduct_memo(f, memo);
}

template <typename D>
ForestTensor<D> coproduct_bck(const LinComb<Forest<D>>& a) {
    std::map<Tree<D>, ForestTensor<D>> memo;
    ForestTensor<D> r;
    for (const auto& [f, c] : a) r.add_scaled(detail::forest_coproduct_memo(f, memo), c);
    return r;
}

// ---------------------------------------------------------------------------
// Enumeration.

namespace detail {

// Appends to `out` every multiset of trees drawn from pool[start..] (pool is
// canonically sorted) with total vertex count `remaining`, in nondecreasing
// order, each prefixed by `prefix`.
template <typename D>
void multisets_of_size(const std::vector<Tree<D>>& pool, std::size_t start, int remaining,
                       std::vector<Tree<D>>& prefix, std::vector<std::vector<Tree<D>>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        if (pool[i].vertex_count() > remaining) break;  // pool is sorted by size first
        prefix.push_back(pool[i]);
        multisets_of_size(pool, i, remaining - pool[i].vertex_count(), prefix, out);
        prefix.pop_back();
    }
}

template <typename D>
std::vector<Tree<D>> trees_up_to(int n, const std::vector<D>& decorations) {
    std::vector<Tree<D>> pool;  // canonically sorted, sizes 1..k
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Tree<D>>> below;
        std::vector<Tree<D>> prefix;
        multisets_of_size(pool, 0, k - 1, prefix, below);
        std::vector<Tree<D>> fresh;
        for (const auto& d : decorations)
            for (const auto& kids : below) fresh.emplace_back(d, kids);
        std::sort(fresh.begin(), fresh.end());
        pool.insert(pool.end(), fresh.begin(), fresh.end());
    }
    return pool;
}

}  // namespace detail

/// All distinct canonical trees with exactly n vertices, decorations drawn
/// from `decorations`, in canonical order.
template <typename D>
std::vector<Tree<D>> enumerate_trees(int n, std::vector<D> decorations) {
    if (n < 1 || decorations.empty()) return {};
    std::sort(decorations.begin(), decorations.end());
    decorations.erase(std::unique(decorations.begin(), decorations.end()), decorations.end());
    std::vector<Tree<D>> out;
    for (auto& t : detail::trees_up_to(n, decorations))
        if (t.vertex_count() == n) out.push_back(std::move(t));
    return out;
}

/// All distinct forests with exactly n vertices (n = 0 gives the empty forest).
template <typename D>
std::vector<Forest<D>> enumerate_forests(int n, std::vector<D> decorations) {
    if (n < 0) return {};
    if (n == 0) return {Forest<D>{}};
    std::sort(decorations.begin(), decorations.end());
    decorations.erase(std::unique(decorations.begin(), decorations.end()), decorations.end());
    auto pool = detail::trees_up_to(n, decorations);
    std::vector<std::vector<Tree<D>>> sets;
    std::vector<Tree<D>> prefix;
    detail::multisets_of_size(pool, 0, n, prefix, sets);
    std::vector<Forest<D>> out;
    out.reserve(sets.size());
    for (auto& s : sets) out.emplace_back(std::move(s));
    std::sort(out.begin(), out.end());
    return out;
}

/// y1, ..., yk
inline std::vector<YLetter> y_decorations(int k) {
    std::vector<YLetter> out;
    for (int i = 1; i <= k; ++i) out.push_back(YLetter{i});
    return out;
}

}  // namespace arbor
