#pragma once

// Words over the two MZV alphabets X = {x0, x1} and Y = {y1, y2, ...}, the
// shuffle and quasi-shuffle products, deconcatenation, and the substitution
// y_n -> x0^{n-1} x1.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "arbor/lincomb.hpp"

namespace arbor {

enum class XLetter : std::uint8_t { x0 = 0, x1 = 1 };

struct YLetter {
    int index = 1;  // >= 1

    friend auto operator<=>(const YLetter&, const YLetter&) = default;
    friend bool operator==(const YLetter&, const YLetter&) = default;
};

inline YLetter y(int n) {
    if (n < 1) throw std::invalid_argument("y-letter index must be >= 1");
    return YLetter{n};
}

template <typename L>
struct LetterTraits;

template <>
struct LetterTraits<XLetter> {
    static constexpr char prefix = 'x';
    static std::string name(XLetter l) { return l == XLetter::x0 ? "x0" : "x1"; }
    static std::optional<XLetter> parse(std::string_view token) {
        if (token == "x0") return XLetter::x0;
        if (token == "x1") return XLetter::x1;
        return std::nullopt;
    }
};

template <>
struct LetterTraits<YLetter> {
    static constexpr char prefix = 'y';
    static std::string name(YLetter l) { return "y" + std::to_string(l.index); }
    static std::optional<YLetter> parse(std::string_view token);
};

inline std::string to_string(XLetter l) { return LetterTraits<XLetter>::name(l); }
inline std::string to_string(YLetter l) { return LetterTraits<YLetter>::name(l); }

/// Thrown for malformed word, tree or forest text; `position` is a 0-based
/// character offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

template <typename L>
struct Word {
    std::vector<L> letters;

    Word() = default;
    Word(std::initializer_list<L> ls) : letters(ls) {}
    explicit Word(std::vector<L> ls) : letters(std::move(ls)) {}

    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
    const L& operator[](std::size_t i) const { return letters[i]; }

    Word concat(const Word& o) const {
        Word r = *this;
        r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
        return r;
    }
    Word appended(L l) const {
        Word r = *this;
        r.letters.push_back(l);
        return r;
    }
    Word slice(std::size_t from, std::size_t to) const {
        return Word(std::vector<L>(letters.begin() + from, letters.begin() + to));
    }

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;
};

using XWord = Word<XLetter>;
using YWord = Word<YLetter>;

template <typename L>
std::string to_string(const Word<L>& w) {
    if (w.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) s += '.';
        s += LetterTraits<L>::name(w[i]);
    }
    return s;
}

/// word := letter ('.' letter)* | 'e'. Whitespace around tokens is ignored.
template <typename L>
Word<L> parse_word(std::string_view text);

extern template Word<XLetter> parse_word<XLetter>(std::string_view);
extern template Word<YLetter> parse_word<YLetter>(std::string_view);

/// Y-weight is the index sum; X-weight is the length.
int weight(const YWord& w);
inline int weight(const XWord& w) { return static_cast<int>(w.length()); }

/// Internal product on letters; std::nullopt stands for the zero product.
template <typename L>
using InternalProduct = std::function<std::optional<L>(const L&, const L&)>;

/// [y_k y_l] = y_{k+l}
inline std::optional<YLetter> index_sum(const YLetter& a, const YLetter& b) {
    return YLetter{a.index + b.index};
}

template <typename L>
std::optional<L> zero_product(const L&, const L&) {
    return std::nullopt;
}

namespace detail {

template <typename L>
Word<L> prepend(const L& l, const Word<L>& w) {
    Word<L> r;
    r.letters.reserve(w.length() + 1);
    r.letters.push_back(l);
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
    return r;
}

// Suffix table: table[i][j] holds the product of u[i:] and v[j:].
template <typename L, typename Contract>
LinComb<Word<L>> stuffle_table(const Word<L>& u, const Word<L>& v, Contract&& contract) {
    const std::size_t p = u.length(), q = v.length();
    std::vector<std::vector<LinComb<Word<L>>>> table(p + 1, std::vector<LinComb<Word<L>>>(q + 1));
    table[p][q] = LinComb<Word<L>>::basis(Word<L>{});
    for (std::size_t i = p + 1; i-- > 0;) {
        for (std::size_t j = q + 1; j-- > 0;) {
            if (i == p && j == q) continue;
            LinComb<Word<L>> acc;
            if (i < p)
                for (const auto& [w, c] : table[i + 1][j]) acc.add_term(prepend(u[i], w), c);
            if (j < q)
                for (const auto& [w, c] : table[i][j + 1]) acc.add_term(prepend(v[j], w), c);
            if (i < p && j < q) {
                if (auto merged = contract(u[i], v[j]))
                    for (const auto& [w, c] : table[i + 1][j + 1]) acc.add_term(prepend(*merged, w), c);
            }
            table[i][j] = std::move(acc);
        }
    }
    return std::move(table[0][0]);
}

}  // namespace detail

/// Shuffle product u ⧢ v: sum over all (p,q)-shuffles.
template <typename L>
LinComb<Word<L>> shuffle(const Word<L>& u, const Word<L>& v) {
    return detail::stuffle_table(u, v, [](const L&, const L&) { return std::optional<L>{}; });
}

/// Quasi-shuffle product for an arbitrary commutative internal product.
template <typename L>
LinComb<Word<L>> quasi_shuffle(const Word<L>& u, const Word<L>& v,
                               const std::type_identity_t<InternalProduct<L>>& product) {
    return detail::stuffle_table(u, v, product);
}

/// Quasi-shuffle on Y with [y_k y_l] = y_{k+l}.
inline LinComb<YWord> quasi_shuffle(const YWord& u, const YWord& v) {
    return detail::stuffle_table(u, v, index_sum);
}

template <typename L>
LinComb<Word<L>> shuffle(const LinComb<Word<L>>& a, const LinComb<Word<L>>& b) {
    return bilinear_extend([](const Word<L>& u, const Word<L>& v) { return shuffle(u, v); }, a, b);
}

inline LinComb<YWord> quasi_shuffle(const LinComb<YWord>& a, const LinComb<YWord>& b) {
    return bilinear_extend([](const YWord& u, const YWord& v) { return quasi_shuffle(u, v); }, a, b);
}

/// Deconcatenation coproduct: Σ_r w[0:r] ⊗ w[r:].
template <typename L>
LinComb<TensorPair<Word<L>>> deconcat(const Word<L>& w) {
    LinComb<TensorPair<Word<L>>> r;
    for (std::size_t k = 0; k <= w.length(); ++k)
        r.add_term(TensorPair<Word<L>>{w.slice(0, k), w.slice(k, w.length())}, Rational(1));
    return r;
}

template <typename L>
LinComb<TensorPair<Word<L>>> deconcat(const LinComb<Word<L>>& a) {
    LinComb<TensorPair<Word<L>>> r;
    for (const auto& [w, c] : a) r.add_scaled(deconcat(w), c);
    return r;
}

/// y_{n1}...y_{nr} -> x0^{n1-1} x1 ... x0^{nr-1} x1
XWord s_map(const YWord& w);
LinComb<XWord> s_map(const LinComb<YWord>& a);

/// Inverse of s_map on X*x1 ∪ {e}. Throws std::invalid_argument otherwise.
YWord s_inverse(const XWord& v);
LinComb<YWord> s_inverse(const LinComb<XWord>& a);

/// All Y-words of the given weight (one per composition), in lexicographic
/// order of their index sequences; weight 0 gives the empty word.
std::vector<YWord> y_words_of_weight(int w);
/// All Y-words of length `length` with indices in 1..max_index.
std::vector<YWord> y_words_of_length(int length, int max_index);
/// All 2^length X-words of the given length.
std::vector<XWord> x_words_of_length(int length);

/// Empty, or first letter is not y1.
bool is_convergent(const YWord& w);
/// Empty, or of the form x0 ... x1.
bool is_convergent(const XWord& v);

}  // namespace arbor
