#include "arbor/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "arbor/arborify.hpp"
#include "arbor/commands.hpp"
#include "arbor/hoffman.hpp"
#include "arbor/hopf_checks.hpp"
#include "arbor/regularize.hpp"
#include "arbor/theta_poly.hpp"
#include "arbor/tree_zeta.hpp"

namespace arbor {

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& r : rows)
        if (!r.pass) ++n;
    return n;
}

std::string format_report(const Report& report, ReportFormat format) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::json: {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& r : report.rows)
                rows.push_back({{"identity", r.identity},
                                {"lhs", r.lhs},
                                {"rhs", r.rhs},
                                {"residual", r.residual},
                                {"tolerance", r.tolerance},
                                {"pass", r.pass}});
            nlohmann::json doc = {{"suite", report.suite},
                                  {"rows", rows},
                                  {"failures", report.failures()},
                                  {"pass", report.all_pass()}};
            os << doc.dump(2) << "\n";
            break;
        }
        case ReportFormat::tsv:
            os << "identity\tlhs\trhs\tresidual\ttolerance\tpass\n";
            for (const auto& r : report.rows)
                os << r.identity << '\t' << r.lhs << '\t' << r.rhs << '\t' << format_real(r.residual) << '\t'
                   << format_real(r.tolerance) << '\t' << (r.pass ? "pass" : "FAIL") << '\n';
            break;
        case ReportFormat::text:
            for (const auto& r : report.rows)
                os << (r.pass ? "[pass] " : "[FAIL] ") << r.identity << "\n       lhs = " << r.lhs
                   << "\n       rhs = " << r.rhs << "\n       residual " << format_real(r.residual)
                   << " (tolerance " << format_real(r.tolerance) << ")\n";
            os << report.suite << ": " << (report.rows.size() - report.failures()) << "/" << report.rows.size()
               << " passed\n";
            break;
    }
    return os.str();
}

namespace {

ReportRow numeric_row(std::string identity, double lhs, double rhs, double tolerance) {
    const double residual = std::abs(lhs - rhs);
    return {std::move(identity), format_real(lhs), format_real(rhs), residual, tolerance, residual <= tolerance};
}

template <typename T>
ReportRow exact_row(std::string identity, const T& lhs, const T& rhs, std::string lhs_text, std::string rhs_text) {
    const bool equal = lhs == rhs;
    return {std::move(identity), std::move(lhs_text), std::move(rhs_text), equal ? 0.0 : 1.0, 0.0, equal};
}

ReportRow string_row(std::string identity, const std::string& got, const std::string& expected) {
    return exact_row(std::move(identity), got, expected, got, expected);
}

// Count of failing cases over a family, as one exact row.
ReportRow count_row(std::string identity, std::size_t cases, std::size_t failures) {
    return {std::move(identity), std::to_string(cases) + " cases", std::to_string(cases - failures) + " hold",
            static_cast<double>(failures), 0.0, failures == 0};
}

std::vector<YWord> convergent_nonempty_y_words(int max_weight) {
    std::vector<YWord> out;
    for (int w = 2; w <= max_weight; ++w)
        for (auto& word : y_words_of_weight(w))
            if (is_convergent(word)) out.push_back(std::move(word));
    return out;
}

}  // namespace

Report verify_relations(int max_weight, double tol) {
    Report report{"relations", {}};
    MzvCache zeta(tol);
    const double row_tol = 10.0 * tol;
    auto z = [&](std::vector<int> idx) { return zeta(MzvIndex{std::move(idx)}); };

    report.rows.push_back(numeric_row("quasi-shuffle: zeta(2,3)+zeta(3,2)+zeta(5) = zeta(2)zeta(3)",
                                      zeta_word_y(quasi_shuffle(YWord{y(2)}, YWord{y(3)}), zeta), z({2}) * z({3}),
                                      row_tol));

    const auto sh = shuffle(parse_word<XLetter>("x0.x1"), parse_word<XLetter>("x0.x0.x1"));
    LinComb<XWord> published;
    published.add_term(s_map(YWord{y(2), y(3)}), Rational(1));
    published.add_term(s_map(YWord{y(3), y(2)}), Rational(3));
    published.add_term(s_map(YWord{y(4), y(1)}), Rational(6));
    report.rows.push_back(exact_row("shuffle expansion: x0.x1 sh x0.x0.x1 = zeta(2,3)+3zeta(3,2)+6zeta(4,1)", sh,
                                    published, sh.str(), published.str()));
    report.rows.push_back(numeric_row("shuffle: zeta(2,3)+3zeta(3,2)+6zeta(4,1) = zeta(2)zeta(3)",
                                      zeta_word_x(sh, zeta), z({2}) * z({3}), row_tol));
    report.rows.push_back(numeric_row("Euler: zeta(2,1) = zeta(3)", z({2, 1}), z({3}), row_tol));
    report.rows.push_back(numeric_row("2zeta(2)^2 = 5zeta(4)", 2 * z({2}) * z({2}), 5 * z({4}), row_tol));

    const auto reg_y2 = hoffman_reg_relation(YWord{y(2)});
    const LinComb<XWord> reg_y2_expected{{parse_word<XLetter>("x0.x1.x1"), Rational(1)},
                                         {parse_word<XLetter>("x0.x0.x1"), Rational(-1)}};
    report.rows.push_back(exact_row("regularization relation for y2 is zeta(2,1) - zeta(3)", reg_y2,
                                    reg_y2_expected, reg_y2.str(), reg_y2_expected.str()));

    const auto words = convergent_nonempty_y_words(max_weight);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j) {
            const auto& u = words[i];
            const auto& v = words[j];
            if (weight(u) + weight(v) > max_weight) continue;
            report.rows.push_back(numeric_row("quasi-shuffle character " + to_string(u) + " * " + to_string(v),
                                              zeta_word_y(quasi_shuffle(u, v), zeta),
                                              zeta_word_y(u, zeta) * zeta_word_y(v, zeta), row_tol));
            const auto su = s_map(u), sv = s_map(v);
            report.rows.push_back(numeric_row("shuffle character " + to_string(su) + " sh " + to_string(sv),
                                              zeta_word_x(shuffle(su, sv), zeta),
                                              zeta_word_x(su, zeta) * zeta_word_x(sv, zeta), row_tol));
        }

    for (const auto& w : convergent_nonempty_y_words(max_weight)) {
        const auto relation = hoffman_reg_relation(w);
        bool all_convergent = true;
        for (const auto& [v, c] : relation) all_convergent = all_convergent && is_convergent(v);
        if (!all_convergent) {
            report.rows.push_back({"regularization relation " + to_string(w), relation.str(), "convergent words",
                                   1.0, 0.0, false});
            continue;
        }
        report.rows.push_back(
            numeric_row("regularization relation " + to_string(w), zeta_word_x(relation, zeta), 0.0, row_tol));
    }
    return report;
}

Report verify_bmz(int max_weight, double tol) {
    Report report{"bmz", {}};
    for (int w = 0; w <= max_weight; ++w)
        for (const auto& word : y_words_of_weight(w)) {
            MzvCache zeta(tol);
            MzvCache singles(std::max(tol / 10.0, kMinTolerance));
            const auto lhs = eval_reg(reg_sh(s_map(word)), zeta);
            const auto rhs = rho(eval_reg(reg_qsh(word), zeta), zeta_provider(singles));
            const double residual = max_coeff_residual(lhs, rhs);
            report.rows.push_back({"zeta_sh(s(" + to_string(word) + ")) = rho(zeta_qsh(" + to_string(word) + "))",
                                   to_string(lhs), to_string(rhs), residual, 10.0 * tol, residual <= 10.0 * tol});
        }
    return report;
}

Report verify_hopf(int max_vertices) {
    Report report{"hopf", {}};
    const std::vector<YLetter> two{y(1), y(2)};
    const std::vector<YLetter> three{y(1), y(2), y(3)};
    const std::vector<XLetter> xs{XLetter::x0, XLetter::x1};

    auto forests_up_to = [](int n, const auto& decorations) {
        using D = typename std::decay_t<decltype(decorations)>::value_type;
        std::vector<Forest<D>> out;
        for (int k = 0; k <= n; ++k)
            for (auto& f : enumerate_forests(k, decorations)) out.push_back(std::move(f));
        return out;
    };
    auto delta_y = [](const YForest& f) { return coproduct_bck(f); };
    auto delta_w = [](const YWord& w) { return deconcat(w); };
    auto arb_x = [](const XForest& f) { return arborify_x(f); };
    auto arb_y = [](const YForest& f) { return arborify_y(f); };

    const auto y2 = forests_up_to(max_vertices, two);
    const auto y3 = forests_up_to(max_vertices, three);
    const auto x2 = forests_up_to(max_vertices, xs);

    std::size_t bad = 0;
    for (const auto& f : y2) bad += !hopf::coassociative(f, delta_y);
    report.rows.push_back(count_row("BCK coproduct is coassociative", y2.size(), bad));

    bad = 0;
    for (const auto& f : y2) bad += !hopf::counital(f, delta_y);
    report.rows.push_back(count_row("BCK counit axioms", y2.size(), bad));

    bad = 0;
    std::size_t cases = 0;
    for (const auto& f : y2)
        for (const auto& d : two) {
            ++cases;
            bad += !hopf::cocycle(d, f);
        }
    report.rows.push_back(count_row("B+ is a 1-cocycle", cases, bad));

    bad = cases = 0;
    for (const auto& f : y2)
        for (const auto& g : y2) {
            if (f.grade() + g.grade() > max_vertices || g < f) continue;
            ++cases;
            bad += !hopf::multiplicative(f, g);
        }
    report.rows.push_back(count_row("BCK coproduct is multiplicative", cases, bad));

    bad = 0;
    for (const auto& f : x2) bad += !hopf::coalgebra_morphism(f, arb_x);
    report.rows.push_back(count_row("simple arborification is a coalgebra morphism", x2.size(), bad));

    bad = 0;
    for (const auto& f : y3) bad += !hopf::coalgebra_morphism(f, arb_y);
    report.rows.push_back(count_row("contracting arborification is a coalgebra morphism", y3.size(), bad));

    const int half = std::max(1, max_vertices / 2 + 1);
    bad = cases = 0;
    for (const auto& f : x2)
        for (const auto& g : x2) {
            if (f.grade() > half || g.grade() > half) continue;
            ++cases;
            bad += !hopf::algebra_morphism(f, g, arb_x, [](const auto& a, const auto& b) { return shuffle(a, b); });
        }
    report.rows.push_back(count_row("simple arborification is an algebra morphism", cases, bad));

    bad = cases = 0;
    for (const auto& f : y2)
        for (const auto& g : y2) {
            if (f.grade() > half || g.grade() > half) continue;
            ++cases;
            bad += !hopf::algebra_morphism(f, g, arb_y,
                                           [](const auto& a, const auto& b) { return quasi_shuffle(a, b); });
        }
    report.rows.push_back(count_row("contracting arborification is an algebra morphism", cases, bad));

    bad = cases = 0;
    for (int len = 1; len <= 5; ++len)
        for (const auto& w : x_words_of_length(len)) {
            ++cases;
            bad += !(arborify_x(ladder_forest(w)) == LinComb<XWord>::basis(w));
        }
    report.rows.push_back(count_row("simple arborification of ladder(w) is w", cases, bad));

    bad = cases = 0;
    for (int len = 1; len <= 5; ++len)
        for (const auto& w : y_words_of_length(len, 3)) {
            ++cases;
            bad += !(arborify_y(ladder_forest(w)) == LinComb<YWord>::basis(w));
        }
    report.rows.push_back(count_row("contracting arborification of ladder(w) is w", cases, bad));

    bad = cases = 0;
    for (const auto& f : y3) {
        ++cases;
        bad += !(arborify_x(s_tree(f)) == s_map(arborify_y(f)));
    }
    report.rows.push_back(count_row("arborified substitution commutes with s", cases, bad));

    bad = cases = 0;
    for (int len = 0; len <= 5; ++len)
        for (const auto& w : y_words_of_length(len, 3)) {
            ++cases;
            bad += !hopf::coassociative(w, delta_w);
            const auto unit = LinComb<YWord>::basis(w);
            bad += !(exp_map(log_map(w)) == unit) || !(log_map(exp_map(w)) == unit);
        }
    report.rows.push_back(count_row("deconcatenation coassociative and exp/log mutually inverse", cases, bad));
    return report;
}

Report verify_oracle(int max_vertices, int bound, double tol) {
    Report report{"oracle", {}};
    MzvCache zeta(tol);
    for (int n = 1; n <= max_vertices; ++n)
        for (const auto& t : enumerate_trees(n, y_decorations(3))) {
            const YForest f(t);
            if (!is_convergent_tree(f)) continue;
            const double exact = zeta_tree_y(f, zeta);
            const double partial = brute_tree_sum(t, bound);
            const double tail = brute_tree_tail_bound(t, bound);
            const double gap = exact - partial;
            const double allowed = tail + 10.0 * tol;
            const bool pass = gap >= -10.0 * tol && gap <= allowed;
            report.rows.push_back({"nested sum over " + to_string(t) + " up to " + std::to_string(bound),
                                   format_real(exact), format_real(partial), gap, allowed, pass});
        }
    return report;
}

Report run_selftest(double tol) {
    Report report{"selftest", {}};
    MzvCache zeta(tol);
    const double row_tol = 10.0 * tol;
    auto yw = [](std::string_view s) { return parse_word<YLetter>(s); };
    auto xw = [](std::string_view s) { return parse_word<XLetter>(s); };
    auto z = [&](std::vector<int> idx) { return zeta(MzvIndex{std::move(idx)}); };

    // words
    report.rows.push_back(string_row("y2 * y3", quasi_shuffle(yw("y2"), yw("y3")).str(), "1*y2.y3 + 1*y3.y2 + 1*y5"));
    report.rows.push_back(string_row("s(y2)", to_string(s_map(yw("y2"))), "x0.x1"));

    // forests
    report.rows.push_back(string_row("B+^y2(e)", to_string(b_plus(y(2), YForest{})), "y2"));
    const auto ladder2 = parse_forest<YLetter>("y1(y1)");
    report.rows.push_back(string_row("coproduct of the 2-vertex ladder", coproduct_bck(ladder2).str(),
                                     "1*(e | y1(y1)) + 1*(y1 | y1) + 1*(y1(y1) | e)"));
    const auto cherry = parse_forest<YLetter>("y1(y1,y1)");
    report.rows.push_back(string_row("coproduct of the cherry", coproduct_bck(cherry).str(),
                                     "1*(e | y1(y1,y1)) + 2*(y1 | y1(y1)) + 1*(y1(y1,y1) | e) + 1*(y1;y1 | y1)"));
    report.rows.push_back(exact_row("counit(e) = 1", counit(YForest{}), Rational(1), counit(YForest{}).str(), "1"));
    report.rows.push_back(exact_row("counit(single vertex) = 0", counit(parse_forest<YLetter>("y1")), Rational(0),
                                    counit(parse_forest<YLetter>("y1")).str(), "0"));
    {
        std::string counts;
        for (int n = 1; n <= 5; ++n) counts += (n > 1 ? "," : "") + std::to_string(enumerate_trees(n, y_decorations(1)).size());
        report.rows.push_back(string_row("rooted tree census n = 1..5", counts, "1,1,2,4,9"));
    }

    // arborification
    report.rows.push_back(string_row("expand --contracting y3(y1,y2)", expand_command(Flavor::contracting, "y3(y1,y2)"),
                                     "1*y1.y2.y3 + 1*y2.y1.y3 + 1*y3.y3"));
    report.rows.push_back(string_row("expand --simple x1(x0,x1(x0))", expand_command(Flavor::simple, "x1(x0,x1(x0))"),
                                     "2*x0.x0.x1.x1 + 1*x0.x1.x0.x1"));
    report.rows.push_back(string_row("expand --simple x1(x0,x0(x0))", expand_command(Flavor::simple, "x1(x0,x0(x0))"),
                                     "3*x0.x0.x0.x1"));
    report.rows.push_back(string_row("x1(x0,x1(x0)) is convergent",
                                     is_convergent_tree(parse_forest<XLetter>("x1(x0,x1(x0))")) ? "true" : "false",
                                     "true"));
    report.rows.push_back(string_row("zeta x1(x0,x1(x0))", zeta_command("x1(x0,x1(x0))", false, tol).combination,
                                     "2*zeta(3,1) + 1*zeta(2,2)"));
    report.rows.push_back(string_row("zeta x1(x0,x0(x0))", zeta_command("x1(x0,x0(x0))", false, tol).combination,
                                     "3*zeta(4)"));

    // Hoffman exp/log on distinct letters v1 = y1, v2 = y2, v3 = y4 so that
    // every bracket [v_i ... v_j] is a distinct letter.
    report.rows.push_back(string_row("exp v1", exp_map(yw("y1")).str(), "1*y1"));
    report.rows.push_back(string_row("log v1", log_map(yw("y1")).str(), "1*y1"));
    report.rows.push_back(string_row("exp v1v2", exp_map(yw("y1.y2")).str(), "1*y1.y2 + 1/2*y3"));
    report.rows.push_back(string_row("log v1v2", log_map(yw("y1.y2")).str(), "1*y1.y2 - 1/2*y3"));
    report.rows.push_back(string_row("exp v1v2v3", exp_map(yw("y1.y2.y4")).str(),
                                     "1*y1.y2.y4 + 1/2*y1.y6 + 1/2*y3.y4 + 1/6*y7"));
    report.rows.push_back(string_row("log v1v2v3", log_map(yw("y1.y2.y4")).str(),
                                     "1*y1.y2.y4 - 1/2*y1.y6 - 1/2*y3.y4 + 1/3*y7"));

    // zeta values
    const double pi = std::numbers::pi;
    report.rows.push_back(numeric_row("zeta(2) = pi^2/6", z({2}), pi * pi / 6, row_tol));
    report.rows.push_back(numeric_row("zeta(4) = pi^4/90", z({4}), std::pow(pi, 4) / 90, row_tol));
    report.rows.push_back(numeric_row("zeta(2,1) = zeta(3)", z({2, 1}), z({3}), row_tol));
    report.rows.push_back(numeric_row("zeta(2,3)+zeta(3,2)+zeta(5) = zeta(2)zeta(3)",
                                      z({2, 3}) + z({3, 2}) + z({5}), z({2}) * z({3}), row_tol));
    report.rows.push_back(numeric_row("zeta(2,3)+3zeta(3,2)+6zeta(4,1) = zeta(2)zeta(3)",
                                      z({2, 3}) + 3 * z({3, 2}) + 6 * z({4, 1}), z({2}) * z({3}), row_tol));
    report.rows.push_back(numeric_row("2zeta(2)^2 = 5zeta(4)", 2 * z({2}) * z({2}), 5 * z({4}), row_tol));
    report.rows.push_back(numeric_row("zeta of x1(x0,x1(x0)) = 2zeta(3,1)+zeta(2,2)",
                                      zeta_tree_x(parse_forest<XLetter>("x1(x0,x1(x0))"), zeta),
                                      2 * z({3, 1}) + z({2, 2}), row_tol));
    report.rows.push_back(numeric_row("zeta of x1(x0,x0(x0)) = 3zeta(4)",
                                      zeta_tree_x(parse_forest<XLetter>("x1(x0,x0(x0))"), zeta), 3 * z({4}),
                                      row_tol));

    // regularization and rho
    const auto theta = SymbolicRegValue::monomial(1, LinComb<YWord>::basis(YWord{}));
    report.rows.push_back(exact_row("reg_qsh(y1) = theta", reg_qsh(yw("y1")), theta, to_string(reg_qsh(yw("y1"))),
                                    to_string(theta)));
    report.rows.push_back(exact_row("reg_sh(x1) = theta", reg_sh(xw("x1")), theta, to_string(reg_sh(xw("x1"))),
                                    to_string(theta)));
    const auto zp = zeta_provider(zeta);
    const auto one = RealThetaPoly::constant(1.0);
    const auto th = RealThetaPoly::monomial(1, 1.0);
    report.rows.push_back({"rho(1) = 1", to_string(rho(one, zp)), to_string(one),
                           max_coeff_residual(rho(one, zp), one), 0.0, rho(one, zp) == one});
    report.rows.push_back({"rho(theta) = theta", to_string(rho(th, zp)), to_string(th),
                           max_coeff_residual(rho(th, zp), th), 0.0, rho(th, zp) == th});
    const auto reg_y2 = hoffman_reg_relation(yw("y2"));
    report.rows.push_back(string_row("regularization relation for y2", reg_y2.str(), "-1*x0.x0.x1 + 1*x0.x1.x1"));
    return report;
}

}  // namespace arbor
