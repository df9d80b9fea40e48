// Acceptance gate: one pass/fail line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "arbor/commands.hpp"
#include "arbor/hoffman.hpp"
#include "arbor/hopf_checks.hpp"
#include "arbor/regularize.hpp"
#include "arbor/tree_zeta.hpp"
#include "arbor/verify.hpp"

namespace {

struct VLetter {
    std::string name;
    friend auto operator<=>(const VLetter&, const VLetter&) = default;
};

std::string inner(const std::string& s) { return s.front() == '[' ? s.substr(1, s.size() - 2) : s; }

std::optional<VLetter> bracket(const VLetter& a, const VLetter& b) {
    return VLetter{"[" + inner(a.name) + inner(b.name) + "]"};
}

}  // namespace

namespace arbor {
template <>
struct LetterTraits<VLetter> {
    static std::string name(const VLetter& l) { return l.name; }
};
}  // namespace arbor

using namespace arbor;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

// A budget of 0 means the criterion has no runtime limit.
void criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = budget_seconds <= 0 || secs < budget_seconds;
    const bool pass = out.pass && in_time;
    if (!pass) ++failures;
    char budget[32] = "";
    if (budget_seconds > 0) std::snprintf(budget, sizeof budget, ", budget %.0f s", budget_seconds);
    std::printf("criterion %d %s: %s (%.3f s%s) %s\n", id, title, pass ? "PASS" : "FAIL", secs, budget,
                out.detail.c_str());
}

YWord yw(std::string_view s) { return parse_word<YLetter>(s); }
XWord xw(std::string_view s) { return parse_word<XLetter>(s); }

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

Outcome paper_expansions() {
    const bool ok = expand_command(Flavor::contracting, "y3(y1,y2)") == "1*y1.y2.y3 + 1*y2.y1.y3 + 1*y3.y3" &&
                    expand_command(Flavor::simple, "x1(x0,x1(x0))") == "2*x0.x0.x1.x1 + 1*x0.x1.x0.x1" &&
                    expand_command(Flavor::simple, "x1(x0,x0(x0))") == "3*x0.x0.x0.x1" &&
                    zeta_command("x1(x0,x1(x0))", false, 1e-9).combination == "2*zeta(3,1) + 1*zeta(2,2)" &&
                    zeta_command("x1(x0,x0(x0))", false, 1e-9).combination == "3*zeta(4)";
    return {ok, "3 expansions compared symbol for symbol"};
}

Outcome relation_suite() {
    constexpr double tol = 1e-9, limit = 1e-8;
    MzvCache zeta(tol);
    auto z = [&](std::vector<int> e) { return zeta(MzvIndex{std::move(e)}); };
    const double z2z3 = z({2}) * z({3});
    const double residuals[] = {
        std::abs(zeta_word_y(quasi_shuffle(yw("y2"), yw("y3")), zeta) - z2z3),
        std::abs(zeta_word_x(shuffle(xw("x0.x1"), xw("x0.x0.x1")), zeta) - z2z3),
        std::abs(z({2, 1}) - z({3})),
        std::abs(2 * z({2}) * z({2}) - 5 * z({4})),
    };
    double worst = 0.0;
    for (double r : residuals) worst = std::max(worst, r);
    const auto suite = verify_relations(5, tol);
    return {worst <= limit && suite.all_pass(),
            "max residual " + sci(worst) + ", suite " + std::to_string(suite.rows.size() - suite.failures()) + "/" +
                std::to_string(suite.rows.size())};
}

Outcome coproduct_examples() {
    using T = TensorPair<YForest>;
    using C = ForestTensor<YLetter>;
    const YForest dot = parse_tree<YLetter>("y1"), l2 = parse_tree<YLetter>("y1(y1)"),
                  cherry = parse_tree<YLetter>("y1(y1,y1)");
    const bool ladder_ok = coproduct_bck(l2) == C{{T{l2, {}}, 1}, {T{{}, l2}, 1}, {T{dot, dot}, 1}};
    const bool cherry_ok =
        coproduct_bck(cherry) == C{{T{cherry, {}}, 1}, {T{{}, cherry}, 1}, {T{dot, l2}, 2}, {T{dot * dot, dot}, 1}};
    return {ladder_ok && cherry_ok, "ladder and cherry"};
}

Outcome hoffman_examples() {
    using VWord = Word<VLetter>;
    using VC = LinComb<VWord>;
    auto w = [](std::initializer_list<const char*> names) {
        std::vector<VLetter> ls;
        for (auto n : names) ls.push_back(VLetter{n});
        return VWord(ls);
    };
    auto e = [](const VWord& u) { return exp_map<VLetter>(u, bracket); };
    auto l = [](const VWord& u) { return log_map<VLetter>(u, bracket); };
    const VWord u1 = w({"v1"}), u2 = w({"v1", "v2"}), u3 = w({"v1", "v2", "v3"});
    const Rational half(1, 2);
    bool ok = e(u1) == VC{{u1, 1}} && l(u1) == VC{{u1, 1}} &&
              e(u2) == VC{{u2, 1}, {w({"[v1v2]"}), half}} && l(u2) == VC{{u2, 1}, {w({"[v1v2]"}), -half}} &&
              e(u3) == VC{{u3, 1}, {w({"[v1v2]", "v3"}), half}, {w({"v1", "[v2v3]"}), half},
                          {w({"[v1v2v3]"}), Rational(1, 6)}} &&
              l(u3) == VC{{u3, 1}, {w({"[v1v2]", "v3"}), -half}, {w({"v1", "[v2v3]"}), -half},
                          {w({"[v1v2v3]"}), Rational(1, 3)}};
    int words = 0;
    for (int len = 0; len <= 5; ++len)
        for (const auto& v : y_words_of_length(len, 3)) {
            ok = ok && exp_map(log_map(v)) == LinComb<YWord>::basis(v);
            ++words;
        }
    return {ok, "6 displays, exp(log w) = w on " + std::to_string(words) + " words"};
}

Outcome comparison_theorem() {
    double worst = 0.0;
    int words = 0;
    for (int w = 0; w <= 4; ++w)
        for (const auto& word : y_words_of_weight(w)) {
            worst = std::max(worst, check_bmz(word, 1e-9));
            ++words;
        }
    // deg(rho(P) - P) <= deg(P) - 2 on random P up to degree 8.
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> coef(-4.0, 4.0);
    MzvCache zeta(1e-10);
    const auto zn = zeta_provider(zeta);
    bool degree_ok = true;
    for (int trial = 0; trial < 90; ++trial) {
        const int deg = trial % 9;
        RealThetaPoly p;
        for (int k = 0; k <= deg; ++k) p.add_term(k, coef(rng));
        const auto diff = rho(p, zn) - p;
        if (!diff.is_zero() && p.degree() && *diff.degree() > *p.degree() - 2) degree_ok = false;
    }
    return {words == 16 && worst <= 1e-8 && degree_ok,
            std::to_string(words) + " words, max residual " + sci(worst) + ", rho degree property " +
                (degree_ok ? "holds" : "violated")};
}

Outcome regularization_relation() {
    MzvCache zeta(1e-9);
    double worst = 0.0;
    int words = 0;
    for (int w = 0; w <= 5; ++w)
        for (const auto& word : y_words_of_weight(w)) {
            if (!is_convergent(word)) continue;
            worst = std::max(worst, std::abs(zeta_word_x(hoffman_reg_relation(word), zeta)));
            ++words;
        }
    const bool symbolic =
        hoffman_reg_relation(yw("y2")) == LinComb<XWord>{{xw("x0.x1.x1"), 1}, {xw("x0.x0.x1"), -1}};
    return {symbolic && worst <= 1e-8, std::to_string(words) + " words, max residual " + sci(worst)};
}

Outcome hopf_suite() {
    std::vector<YForest> ys;
    std::vector<XForest> xs;
    for (int n = 0; n <= 4; ++n) {
        for (auto& f : enumerate_forests(n, y_decorations(2))) ys.push_back(f);
        for (auto& f : enumerate_forests(n, std::vector<XLetter>{XLetter::x0, XLetter::x1})) xs.push_back(f);
    }
    auto delta = [](const YForest& f) { return coproduct_bck(f); };
    auto ay = [](const YForest& f) { return arborify_y(f); };
    auto ax = [](const XForest& f) { return arborify_x(f); };
    bool ok = true;
    int checks = 0;
    for (const auto& f : ys) {
        ok = ok && hopf::coassociative(f, delta) && hopf::coalgebra_morphism(f, ay);
        if (f.grade() <= 3) ok = ok && hopf::cocycle(y(1), f) && hopf::cocycle(y(2), f);
        checks += 2;
    }
    for (const auto& f : xs) {
        ok = ok && hopf::coalgebra_morphism(f, ax);
        ++checks;
    }
    for (int len = 1; len <= 5; ++len) {
        for (const auto& v : x_words_of_length(len)) ok = ok && arborify_x(ladder_forest(v)) == LinComb<XWord>::basis(v);
        for (const auto& w : y_words_of_length(len, 3))
            ok = ok && arborify_y(ladder_forest(w)) == LinComb<YWord>::basis(w);
    }
    return {ok, std::to_string(ys.size()) + " Y-forests, " + std::to_string(xs.size()) + " X-forests, " +
                    std::to_string(checks) + " forest checks"};
}

Outcome oracle_equivalence() {
    MzvCache zeta(1e-10);
    bool ok = true;
    int trees = 0;
    double worst_ratio = 0.0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_trees(n, std::vector<YLetter>{y(2), y(3)})) {
            const double gap = std::abs(brute_tree_sum(t, 5000) - zeta_tree_y(t, zeta));
            const double bound = brute_tree_tail_bound(t, 5000);
            ok = ok && gap <= bound;
            worst_ratio = std::max(worst_ratio, gap / bound);
            ++trees;
        }
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.3f", worst_ratio);
    return {ok, std::to_string(trees) + " trees, largest gap/bound " + ratio};
}

Outcome tree_census() {
    const std::size_t expected[] = {1, 1, 2, 4, 9};
    std::string got;
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
        const auto count = enumerate_trees(n, y_decorations(1)).size();
        ok = ok && count == expected[n - 1];
        got += (n > 1 ? "," : "") + std::to_string(count);
    }
    return {ok, "counts " + got};
}

}  // namespace

int main() {
    criterion(1, "paper expansions (exact)", 1, paper_expansions);
    criterion(2, "relation suite (numeric)", 30, relation_suite);
    criterion(3, "coproduct examples (exact)", 0, coproduct_examples);
    criterion(4, "Hoffman examples (exact)", 0, hoffman_examples);
    criterion(5, "comparison theorem at weight <= 4", 120, comparison_theorem);
    criterion(6, "Hoffman regularization relation", 0, regularization_relation);
    criterion(7, "Hopf property suite (exact)", 60, hopf_suite);
    criterion(8, "oracle equivalence", 120, oracle_equivalence);
    criterion(9, "tree census", 0, tree_census);
    std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
