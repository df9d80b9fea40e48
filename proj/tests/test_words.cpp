#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "arbor/hopf_checks.hpp"
#include "arbor/mzv.hpp"
#include "arbor/words.hpp"

using namespace arbor;

namespace {

YWord yw(std::string_view s) { return parse_word<YLetter>(s); }
XWord xw(std::string_view s) { return parse_word<XLetter>(s); }

// Shuffles as subsets: choose which of the p+q output slots hold u's letters.
template <typename L>
LinComb<Word<L>> shuffle_by_subsets(const Word<L>& u, const Word<L>& v) {
    const std::size_t n = u.length() + v.length();
    LinComb<Word<L>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != u.length()) continue;
        std::vector<L> letters;
        std::size_t i = 0, j = 0;
        for (std::size_t k = 0; k < n; ++k) letters.push_back(mask >> k & 1 ? u[i++] : v[j++]);
        out.add_term(Word<L>(letters), Rational(1));
    }
    return out;
}

// Quasi-shuffles as pairs of strictly increasing maps into {0..r-1} whose
// images cover it; a slot hit by both words gets the index sum.
LinComb<YWord> quasi_shuffle_by_surjections(const YWord& u, const YWord& v) {
    const int p = static_cast<int>(u.length()), q = static_cast<int>(v.length());
    LinComb<YWord> out;
    for (int r = std::max(p, q); r <= p + q; ++r) {
        for (unsigned mu = 0; mu < (1u << r); ++mu) {
            if (std::popcount(mu) != p) continue;
            for (unsigned mv = 0; mv < (1u << r); ++mv) {
                if (std::popcount(mv) != q || (mu | mv) != (1u << r) - 1) continue;
                std::vector<YLetter> letters(r, YLetter{0});
                int i = 0, j = 0;
                for (int k = 0; k < r; ++k) {
                    int idx = 0;
                    if (mu >> k & 1) idx += u[i++].index;
                    if (mv >> k & 1) idx += v[j++].index;
                    letters[k] = YLetter{idx};
                }
                out.add_term(YWord(letters), Rational(1));
            }
        }
    }
    return out;
}

Rational total(const auto& lc) {
    Rational s;
    for (const auto& [_, c] : lc) s += c;
    return s;
}

}  // namespace

TEST_CASE("word grammar") {
    CHECK(to_string(yw("y2.y13.y1")) == "y2.y13.y1");
    CHECK(yw("e").empty());
    CHECK(to_string(XWord{}) == "e");
    CHECK(yw(" y2 . y3 ") == YWord{y(2), y(3)});
    CHECK_THROWS_AS(yw("y0"), ParseError);
    CHECK_THROWS_AS(yw("y2..y3"), ParseError);
    CHECK_THROWS_AS(xw("x2"), ParseError);
    CHECK_THROWS_AS(xw(""), ParseError);
    try {
        yw("y2.z3");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("round-trip of printed words") {
    for (int len = 0; len <= 4; ++len)
        for (const auto& w : y_words_of_length(len, 3)) CHECK(yw(to_string(w)) == w);
    for (int len = 0; len <= 5; ++len)
        for (const auto& v : x_words_of_length(len)) CHECK(xw(to_string(v)) == v);
}

TEST_CASE("shuffle examples") {
    CHECK(shuffle(XWord{}, xw("x0.x1")) == LinComb<XWord>::basis(xw("x0.x1")));
    CHECK(shuffle(xw("x1"), xw("x1")) == LinComb<XWord>{{xw("x1.x1"), 2}});
    auto prod = shuffle(xw("x0.x1"), xw("x0.x0.x1"));
    CHECK(total(prod) == Rational(10));
    // ζ(2,3) + 3ζ(3,2) + 6ζ(4,1)
    LinComb<XWord> expected{{xw("x0.x1.x0.x0.x1"), 1}, {xw("x0.x0.x1.x0.x1"), 3}, {xw("x0.x0.x0.x1.x1"), 6}};
    CHECK(prod == expected);
}

TEST_CASE("quasi-shuffle examples") {
    CHECK(quasi_shuffle(yw("y2"), yw("y3")) ==
          LinComb<YWord>{{yw("y2.y3"), 1}, {yw("y3.y2"), 1}, {yw("y5"), 1}});
    CHECK(quasi_shuffle(yw("y1"), yw("y1")) == LinComb<YWord>{{yw("y1.y1"), 2}, {yw("y2"), 1}});
    CHECK(quasi_shuffle(YWord{}, yw("y4.y1")) == LinComb<YWord>::basis(yw("y4.y1")));
}

TEST_CASE("shuffle against subset enumeration") {
    std::vector<XWord> words;
    for (int len = 0; len <= 4; ++len)
        for (const auto& v : x_words_of_length(len)) words.push_back(v);
    for (const auto& a : words)
        for (const auto& b : words)
            if (a.length() + b.length() <= 7) CHECK(shuffle(a, b) == shuffle_by_subsets(a, b));
}

TEST_CASE("quasi-shuffle against surjection enumeration") {
    std::vector<YWord> words;
    for (int len = 0; len <= 3; ++len)
        for (const auto& w : y_words_of_length(len, 3)) words.push_back(w);
    for (const auto& a : words)
        for (const auto& b : words) CHECK(quasi_shuffle(a, b) == quasi_shuffle_by_surjections(a, b));
}

TEST_CASE("products are commutative and associative") {
    std::mt19937 rng(11);
    auto ys = y_words_of_length(2, 3);
    auto more = y_words_of_length(1, 4);
    ys.insert(ys.end(), more.begin(), more.end());
    std::uniform_int_distribution<std::size_t> pick(0, ys.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = LinComb<YWord>::basis(ys[pick(rng)]);
        const auto b = LinComb<YWord>::basis(ys[pick(rng)]);
        const auto c = LinComb<YWord>::basis(ys[pick(rng)]);
        CHECK(quasi_shuffle(a, b) == quasi_shuffle(b, a));
        CHECK(quasi_shuffle(quasi_shuffle(a, b), c) == quasi_shuffle(a, quasi_shuffle(b, c)));
        const auto sa = s_map(a), sb = s_map(b), sc = s_map(c);
        CHECK(shuffle(sa, sb) == shuffle(sb, sa));
        CHECK(shuffle(shuffle(sa, sb), sc) == shuffle(sa, shuffle(sb, sc)));
    }
}

TEST_CASE("deconcatenation") {
    using T = TensorPair<YWord>;
    CHECK(deconcat(YWord{}) == LinComb<T>{{T{{}, {}}, 1}});
    CHECK(deconcat(yw("y2.y3")) ==
          LinComb<T>{{T{{}, yw("y2.y3")}, 1}, {T{yw("y2"), yw("y3")}, 1}, {T{yw("y2.y3"), {}}, 1}});
    auto d = deconcat(xw("x0.x1.x1"));
    CHECK(d.size() == 4);
    for (const auto& [_, c] : d) CHECK(c == Rational(1));
}

TEST_CASE("the block map s and its inverse") {
    CHECK(s_map(yw("y1")) == xw("x1"));
    CHECK(s_map(yw("y2")) == xw("x0.x1"));
    CHECK(s_map(yw("y3.y2")) == xw("x0.x0.x1.x0.x1"));
    CHECK(s_inverse(xw("x0.x1")) == yw("y2"));
    CHECK(s_inverse(XWord{}).empty());
    CHECK(s_inverse(xw("x1.x0.x1")) == yw("y1.y2"));
    CHECK_THROWS_AS(s_inverse(xw("x1.x0")), std::invalid_argument);
    for (int w = 0; w <= 6; ++w)
        for (const auto& word : y_words_of_weight(w)) {
            CHECK(s_inverse(s_map(word)) == word);
            CHECK(static_cast<int>(s_map(word).length()) == w);
        }
}

TEST_CASE("convergence predicates") {
    CHECK(is_convergent(yw("y2.y1")));
    CHECK(!is_convergent(yw("y1.y2")));
    CHECK(is_convergent(YWord{}));
    CHECK(is_convergent(xw("x0.x1.x1")));
    CHECK(!is_convergent(xw("x1.x0.x1")));
    CHECK(!is_convergent(xw("x0.x0")));
    for (int w = 1; w <= 6; ++w)
        for (const auto& word : y_words_of_weight(w)) CHECK(is_convergent(word) == is_convergent(s_map(word)));
}

TEST_CASE("word enumeration") {
    for (int w = 1; w <= 8; ++w) CHECK(y_words_of_weight(w).size() == (std::size_t{1} << (w - 1)));
    CHECK(y_words_of_length(3, 2).size() == 8);
    CHECK(x_words_of_length(4).size() == 16);
}

TEST_CASE("the block map intertwines the two zeta readings") {
    MzvCache zeta(1e-10);
    for (int w = 2; w <= 5; ++w)
        for (const auto& word : y_words_of_weight(w)) {
            if (!is_convergent(word)) continue;
            CHECK(zeta_word_y(word, zeta) == doctest::Approx(zeta_word_x(s_map(word), zeta)).epsilon(1e-12));
        }
}

TEST_CASE("random products up to total length 8") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> index(1, 4), length(0, 4);
    auto random_y = [&](int len) {
        YWord w;
        for (int i = 0; i < len; ++i) w = w.appended(y(index(rng)));
        return w;
    };
    for (int trial = 0; trial < 40; ++trial) {
        const int la = length(rng), lb = length(rng);
        const auto a = random_y(la), b = random_y(lb), c = random_y(std::max(0, 8 - la - lb) % 3);
        CHECK(quasi_shuffle(a, b) == quasi_shuffle(b, a));
        const auto A = LinComb<YWord>::basis(a), B = LinComb<YWord>::basis(b), C = LinComb<YWord>::basis(c);
        CHECK(quasi_shuffle(quasi_shuffle(A, B), C) == quasi_shuffle(A, quasi_shuffle(B, C)));
        const auto xa = s_map(a).slice(0, std::min<std::size_t>(4, s_map(a).length()));
        const auto xb = s_map(b).slice(0, std::min<std::size_t>(4, s_map(b).length()));
        CHECK(shuffle(xa, xb) == shuffle(xb, xa));
    }
}

TEST_CASE("quasi-shuffle with zero internal product is the shuffle") {
    for (int la = 0; la <= 3; ++la)
        for (int lb = 0; lb <= 3; ++lb)
            for (const auto& u : x_words_of_length(la))
                for (const auto& v : x_words_of_length(lb))
                    CHECK(quasi_shuffle<XLetter>(u, v, zero_product<XLetter>) == shuffle(u, v));
}

TEST_CASE("deconcatenation is coassociative and compatible with the products") {
    auto delta = [](const YWord& w) { return deconcat(w); };
    for (int len = 0; len <= 6; ++len)
        for (const auto& w : y_words_of_length(len, 2)) {
            CHECK(hopf::coassociative(w, delta));
            CHECK(hopf::counital(w, delta));
        }
    auto sh = [](const auto& a, const auto& b) { return shuffle(a, b); };
    auto qsh = [](const LinComb<YWord>& a, const LinComb<YWord>& b) { return quasi_shuffle(a, b); };
    for (int la = 0; la <= 3; ++la)
        for (int lb = 0; la + lb <= 5; ++lb) {
            for (const auto& u : x_words_of_length(la))
                for (const auto& v : x_words_of_length(lb)) CHECK(hopf::word_bialgebra(u, v, sh));
            for (const auto& u : y_words_of_length(la, 2))
                for (const auto& v : y_words_of_length(lb, 2)) CHECK(hopf::word_bialgebra(u, v, qsh));
        }
}

TEST_CASE("s is a monoid morphism and a bijection on convergent words") {
    const auto ys = y_words_of_length(2, 3);
    for (const auto& u : ys)
        for (const auto& v : ys) CHECK(s_map(u.concat(v)) == s_map(u).concat(s_map(v)));
    for (int w = 1; w <= 6; ++w) {
        std::set<XWord> images;
        for (const auto& word : y_words_of_weight(w))
            if (is_convergent(word)) images.insert(s_map(word));
        std::size_t convergent_x = 0;
        for (const auto& v : x_words_of_length(w)) convergent_x += is_convergent(v) ? 1 : 0;
        CHECK(images.size() == convergent_x);
        for (const auto& v : images) CHECK(is_convergent(v));
    }
}
