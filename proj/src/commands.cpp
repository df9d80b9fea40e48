#include "arbor/commands.hpp"

#include <cctype>

#include "arbor/hoffman.hpp"
#include "arbor/tree_zeta.hpp"

namespace arbor {

namespace {

char alphabet_of(std::string_view text) {
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) return c;
    return '\0';
}

}  // namespace

std::string expand_command(Flavor flavor, std::string_view forest_text) {
    const char first = alphabet_of(forest_text);
    if (flavor == Flavor::simple) {
        if (first == 'y') throw UsageError("simple arborification takes x-decorated forests");
        return arborify_x(parse_forest<XLetter>(forest_text)).str();
    }
    if (first == 'x') throw UsageError("contracting arborification takes y-decorated forests");
    return arborify_y(parse_forest<YLetter>(forest_text)).str();
}

ZetaExpansion zeta_command(std::string_view text, bool as_word, double tol) {
    MzvCache zeta(tol);
    ZetaExpansion out;
    out.tolerance = tol;
    if (alphabet_of(text) == 'x') {
        LinComb<XWord> words;
        if (as_word) {
            words = LinComb<XWord>::basis(parse_word<XLetter>(text));
            if (!is_convergent(words.begin()->first))
                throw DivergenceError("word " + to_string(words.begin()->first) +
                                      " is not convergent (needs the form x0...x1)");
        } else {
            auto f = parse_forest<XLetter>(text);
            if (auto why = divergence_reason(f); !why.empty()) throw DivergenceError(why);
            words = arborify_x(f);
        }
        out.combination = words.str_with([](const XWord& v) { return to_string(mzv_index(s_inverse(v))); });
        out.value = zeta_word_x(words, zeta);
        return out;
    }
    LinComb<YWord> words;
    if (as_word) {
        words = LinComb<YWord>::basis(parse_word<YLetter>(text));
        if (!is_convergent(words.begin()->first))
            throw DivergenceError("word " + to_string(words.begin()->first) +
                                  " is not convergent (leading letter y1)");
    } else {
        auto f = parse_forest<YLetter>(text);
        if (auto why = divergence_reason(f); !why.empty()) throw DivergenceError(why);
        words = arborify_y(f);
    }
    out.combination = words.str_with([](const YWord& w) { return to_string(mzv_index(w)); });
    out.value = zeta_word_y(words, zeta);
    return out;
}

std::string enumerate_command(int n, int decorations, int cap) {
    if (n < 1) throw UsageError("vertex count must be >= 1");
    if (n > cap) throw UsageError("vertex count " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
    if (decorations < 1) throw UsageError("need at least one decoration");
    auto trees = enumerate_trees(n, y_decorations(decorations));
    std::string out = std::to_string(trees.size()) + " trees with " + std::to_string(n) + " vertices\n";
    for (const auto& t : trees) out += to_string(t) + "\n";
    return out;
}

std::string hoffman_command(std::string_view which, std::string_view word_text) {
    auto w = parse_word<YLetter>(word_text);
    if (which == "exp") return exp_map(w).str();
    if (which == "log") return log_map(w).str();
    throw UsageError("hoffman expects 'exp' or 'log'");
}

}  // namespace arbor
