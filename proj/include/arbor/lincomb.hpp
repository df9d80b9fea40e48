#pragma once

// Formal finite rational linear combinations over an ordered basis.
//
// A basis type B must be totally ordered (operator<) and printable through an
// ADL-visible `to_string(const B&)`. Terms are collected in a map keyed by the
// basis order; printing uses the lexicographic order of the serialized basis
// elements so that output does not depend on the internal key order.

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "arbor/rational.hpp"

namespace arbor {

template <typename B>
class LinComb {
public:
    using Basis = B;
    using Map = std::map<B, Rational>;

    LinComb() = default;
    LinComb(std::initializer_list<std::pair<const B, Rational>> terms) {
        for (const auto& [b, c] : terms) add_term(b, c);
    }

    /// The combination {b: 1}.
    static LinComb basis(B b) {
        LinComb r;
        r.terms_.emplace(std::move(b), Rational(1));
        return r;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Rational coefficient(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const B& b, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add_term(B&& b, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(std::move(b), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// this += c * other
    void add_scaled(const LinComb& other, const Rational& c) {
        if (c.is_zero()) return;
        for (const auto& [b, v] : other.terms_) add_term(b, v * c);
    }

    LinComb& operator+=(const LinComb& o) { add_scaled(o, Rational(1)); return *this; }
    LinComb& operator-=(const LinComb& o) { add_scaled(o, Rational(-1)); return *this; }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(const LinComb& a) { return scale(Rational(-1), a); }

    friend LinComb scale(const Rational& c, const LinComb& a) {
        LinComb r;
        if (c.is_zero()) return r;
        for (const auto& [b, v] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), b, v * c);
        return r;
    }
    friend LinComb operator*(const Rational& c, const LinComb& a) { return scale(c, a); }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    /// Σ_{u,v} a(u) b(v) f(u, v) for a basis-level product f.
    template <typename F>
    friend LinComb bilinear_extend(F&& f, const LinComb& a, const LinComb& b) {
        LinComb r;
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) r.add_scaled(f(u, v), cu * cv);
        return r;
    }

    /// Linear extension of a basis map B -> LinComb<C>.
    template <typename F>
    auto map_linear(F&& f) const {
        using Out = std::decay_t<decltype(f(std::declval<const B&>()))>;
        Out r;
        for (const auto& [b, c] : terms_) r.add_scaled(f(b), c);
        return r;
    }

    /// Terms sorted by serialized basis element.
    std::vector<std::pair<B, Rational>> terms_in_print_order() const {
        std::vector<std::pair<std::string, const typename Map::value_type*>> keyed;
        keyed.reserve(terms_.size());
        for (const auto& kv : terms_) keyed.emplace_back(to_string(kv.first), &kv);
        std::sort(keyed.begin(), keyed.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<std::pair<B, Rational>> out;
        out.reserve(keyed.size());
        for (const auto& [_, kv] : keyed) out.emplace_back(kv->first, kv->second);
        return out;
    }

    /// `c1*b1 + c2*b2 - c3*b3`, with `0` for the empty combination.
    std::string str() const {
        return str_with([](const B& b) { return to_string(b); });
    }

    template <typename Render>
    std::string str_with(Render&& render) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [b, c] : terms_in_print_order()) {
            if (first) {
                out += c.str();
            } else {
                out += c.sign() < 0 ? " - " : " + ";
                out += c.abs().str();
            }
            out += "*";
            out += render(b);
            first = false;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const LinComb& a) { return os << a.str(); }

private:
    Map terms_;
};

/// An element of B ⊗ B.
template <typename B>
struct TensorPair {
    B left;
    B right;

    friend auto operator<=>(const TensorPair&, const TensorPair&) = default;
    friend bool operator==(const TensorPair&, const TensorPair&) = default;
};

template <typename B>
std::string to_string(const TensorPair<B>& p) {
    return "(" + to_string(p.left) + " | " + to_string(p.right) + ")";
}

/// Componentwise product on tensor pairs: (a⊗b)(c⊗d) = ac ⊗ bd, for a
/// basis-level product `mul` returning LinComb<B>.
template <typename B, typename Mul>
LinComb<TensorPair<B>> tensor_product(const LinComb<TensorPair<B>>& x,
                                      const LinComb<TensorPair<B>>& y, Mul&& mul) {
    LinComb<TensorPair<B>> r;
    for (const auto& [p, cp] : x)
        for (const auto& [q, cq] : y) {
            auto left = mul(p.left, q.left);
            auto right = mul(p.right, q.right);
            Rational c = cp * cq;
            for (const auto& [l, cl] : left)
                for (const auto& [rr, cr] : right) r.add_term(TensorPair<B>{l, rr}, c * cl * cr);
        }
    return r;
}

/// (f ⊗ g) applied to a tensor combination, where f, g are basis maps into
/// LinComb<C>.
template <typename C, typename B, typename F, typename G>
LinComb<TensorPair<C>> tensor_map(const LinComb<TensorPair<B>>& x, F&& f, G&& g) {
    LinComb<TensorPair<C>> r;
    for (const auto& [p, c] : x) {
        auto left = f(p.left);
        auto right = g(p.right);
        for (const auto& [l, cl] : left)
            for (const auto& [rr, cr] : right) r.add_term(TensorPair<C>{l, rr}, c * cl * cr);
    }
    return r;
}

}  // namespace arbor
