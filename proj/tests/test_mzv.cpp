#include <doctest.h>

#include <cmath>
#include <numbers>
#include <thread>

#include "arbor/mzv.hpp"

using namespace arbor;

namespace {

constexpr double pi = std::numbers::pi;

double z(std::vector<int> e, double tol = 1e-12) { return eval_mzv(MzvIndex{std::move(e)}, tol); }

// Nested partial sum Σ_{bound >= k1 > ... > kr >= 1} Π k_i^{-n_i}, innermost first.
double truncated_mzv(const std::vector<int>& e, int bound) {
    std::vector<double> inner(bound + 2, 1.0);  // inner[k] = sum over indices < k
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        std::vector<double> next(bound + 2, 0.0);
        double acc = 0.0;
        for (int k = 1; k <= bound + 1; ++k) {
            next[k] = acc;
            if (k <= bound) acc += inner[k] * std::pow(static_cast<double>(k), -*it);
        }
        inner.swap(next);
    }
    return inner[bound + 1];
}

}  // namespace

TEST_CASE("single values") {
    CHECK(z({2}) == doctest::Approx(pi * pi / 6).epsilon(1e-14));
    CHECK(z({4}) == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-14));
    CHECK(z({6}) == doctest::Approx(std::pow(pi, 6) / 945).epsilon(1e-14));
    CHECK(z({3}) == doctest::Approx(1.2020569031595942).epsilon(1e-14));
    CHECK(z({}) == 1.0);
}

TEST_CASE("closed forms of depth two and three") {
    CHECK(std::abs(z({2, 1}) - z({3})) <= 2e-12);
    CHECK(z({3, 1}) == doctest::Approx(std::pow(pi, 4) / 360).epsilon(1e-12));
    CHECK(z({2, 2}) == doctest::Approx(std::pow(pi, 4) / 120).epsilon(1e-12));
    CHECK(z({2, 1, 1}) == doctest::Approx(z({4})).epsilon(1e-12));
    CHECK(z({3, 1, 1}) == doctest::Approx(2 * z({5}) - z({2}) * z({3})).epsilon(1e-12));
    CHECK(z({2, 2, 2}) == doctest::Approx(std::pow(pi, 6) / 5040).epsilon(1e-12));
    CHECK(z({4, 2}) == doctest::Approx(z({3}) * z({3}) - 4 * std::pow(pi, 6) / 2835).epsilon(1e-12));
}

TEST_CASE("against truncated nested sums") {
    // The omitted tail is about (log N)^{r-1} / N, under 1e-4 up to depth 3.
    constexpr int bound = 2'000'000;
    for (int w = 2; w <= 6; ++w)
        for (const auto& word : y_words_of_weight(w)) {
            if (!is_convergent(word) || word.length() > 3) continue;
            auto idx = mzv_index(word);
            CAPTURE(to_string(idx));
            CHECK(std::abs(truncated_mzv(idx.exponents, bound) - eval_mzv(idx, 1e-10)) <= 1e-4);
        }
}

TEST_CASE("error bounds are honoured") {
    for (double tol : {1e-6, 1e-9, 1e-12}) {
        auto v = evaluate_mzv(MzvIndex{{3, 1, 2}}, tol);
        CHECK(v.error_bound <= tol);
        CHECK(std::abs(v.value - z({3, 1, 2})) <= tol + 1e-12);
    }
}

TEST_CASE("rejections") {
    CHECK_THROWS_AS(eval_mzv(MzvIndex{{1, 2}}), DivergenceError);
    CHECK_THROWS_AS(eval_mzv(MzvIndex{{2}}, 1e-13), std::invalid_argument);
    MzvCache cache;
    CHECK_THROWS_AS(zeta_word_y(parse_word<YLetter>("y1.y3"), cache), DivergenceError);
    CHECK_THROWS_AS(zeta_word_x(parse_word<XLetter>("x0.x1.x0"), cache), DivergenceError);
}

TEST_CASE("index notation") {
    CHECK(to_string(mzv_index(parse_word<YLetter>("y3.y1"))) == "zeta(3,1)");
    CHECK(to_string(MzvIndex{}) == "1");
    CHECK(MzvIndex{{3, 1, 2}}.weight() == 6);
    CHECK(MzvIndex{{3, 1, 2}}.depth() == 3);
}

TEST_CASE("power tail series") {
    for (int s : {2, 3, 5}) {
        const int m = 50;
        double naive = 0.0;
        for (int k = 2'000'000; k > m; --k) naive += std::pow(static_cast<double>(k), -s);
        naive += 1.0 / ((s - 1) * std::pow(2'000'000.5, s - 1));
        double series = 0.0;
        for (const auto& [c, a] : power_tail_series(s, 30)) series += a * std::pow(static_cast<double>(m), -c);
        CHECK(series == doctest::Approx(naive).epsilon(1e-9));
    }
    CHECK(bernoulli_even(0) == 1.0);
    CHECK(bernoulli_even(1) == doctest::Approx(1.0 / 6));
    CHECK(bernoulli_even(2) == doctest::Approx(-1.0 / 30));
}

TEST_CASE("word values and products") {
    MzvCache zeta(1e-11);
    auto yw = [](std::string_view s) { return parse_word<YLetter>(s); };
    auto xw = [](std::string_view s) { return parse_word<XLetter>(s); };
    const double z2z3 = z({2}) * z({3});
    CHECK(std::abs(zeta_word_y(quasi_shuffle(yw("y2"), yw("y3")), zeta) - z2z3) <= 1e-9);
    CHECK(std::abs(zeta_word_x(shuffle(xw("x0.x1"), xw("x0.x0.x1")), zeta) - z2z3) <= 1e-9);
}

TEST_CASE("character property on all convergent pairs up to weight 8") {
    MzvCache zeta(1e-11);
    std::vector<YWord> conv;
    for (int w = 2; w <= 6; ++w)
        for (const auto& word : y_words_of_weight(w))
            if (is_convergent(word)) conv.push_back(word);
    for (const auto& u : conv)
        for (const auto& v : conv) {
            if (weight(u) + weight(v) > 8) continue;
            const double prod = zeta_word_y(u, zeta) * zeta_word_y(v, zeta);
            CHECK(std::abs(zeta_word_y(quasi_shuffle(u, v), zeta) - prod) <= 1e-8);
            CHECK(std::abs(zeta_word_x(shuffle(s_map(u), s_map(v)), zeta) - prod) <= 1e-8);
        }
}

TEST_CASE("cache under concurrent use") {
    MzvCache zeta(1e-10);
    std::vector<std::thread> pool;
    std::vector<double> got(8);
    for (int i = 0; i < 8; ++i)
        pool.emplace_back([&, i] { got[i] = zeta(MzvIndex{{2 + i % 3, 1}}); });
    for (auto& t : pool) t.join();
    for (int i = 0; i < 8; ++i) CHECK(got[i] == doctest::Approx(z({2 + i % 3, 1})).epsilon(1e-9));
}
