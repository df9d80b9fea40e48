#include "arbor/arborify.hpp"

namespace arbor {

LinComb<XForest> s_tree(const YForest& f) {
    LinComb<XForest> out;
    for (const auto& [w, c] : arborify_y(f)) out.add_term(ladder_forest(s_map(w)), c);
    return out;
}

namespace {

std::string y_leaf_problem(const YTree& t) {
    if (t.is_leaf())
        return t.decoration().index < 2
                   ? "leaf decorated " + to_string(t.decoration()) + " makes the sum divergent"
                   : std::string{};
    for (const auto& c : t.children())
        if (auto r = y_leaf_problem(c); !r.empty()) return r;
    return {};
}

std::string x_leaf_problem(const XTree& t) {
    if (t.is_leaf())
        return t.decoration() != XLetter::x0 ? "leaf decorated x1 makes the integral divergent"
                                             : std::string{};
    for (const auto& c : t.children())
        if (auto r = x_leaf_problem(c); !r.empty()) return r;
    return {};
}

}  // namespace

std::string divergence_reason(const YForest& f) {
    for (const auto& t : f.trees())
        if (auto r = y_leaf_problem(t); !r.empty()) return r;
    return {};
}

std::string divergence_reason(const XForest& f) {
    for (const auto& t : f.trees()) {
        if (t.decoration() != XLetter::x1) return "root decorated x0 makes the integral divergent";
        if (auto r = x_leaf_problem(t); !r.empty()) return r;
    }
    return {};
}

bool is_convergent_tree(const YForest& f) { return divergence_reason(f).empty(); }
bool is_convergent_tree(const XForest& f) { return divergence_reason(f).empty(); }

}  // namespace arbor
