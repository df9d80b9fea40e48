#include "arbor/hoffman.hpp"

namespace arbor {

std::vector<Composition> compositions(int k) {
    std::vector<Composition> out;
    if (k < 1) return out;
    // Depth-first with parts tried in increasing order yields lexicographic order.
    Composition current;
    auto recurse = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = 1; part <= remaining; ++part) {
            current.push_back(part);
            self(self, remaining - part);
            current.pop_back();
        }
    };
    recurse(recurse, k);
    return out;
}

YWord apply_composition(const Composition& parts, const YWord& u) {
    return *apply_composition<YLetter>(parts, u, index_sum);
}

namespace detail {

Rational exp_weight(const Composition& parts) {
    Rational w(1);
    for (int p : parts) w /= factorial(static_cast<unsigned>(p));
    return w;
}

Rational log_weight(const Composition& parts) {
    int k = 0;
    Rational w(1);
    for (int p : parts) {
        k += p;
        w /= Rational(p);
    }
    return (k - static_cast<int>(parts.size())) % 2 == 0 ? w : -w;
}

}  // namespace detail

LinComb<YWord> exp_map(const YWord& u) { return exp_map<YLetter>(u, index_sum); }
LinComb<YWord> log_map(const YWord& u) { return log_map<YLetter>(u, index_sum); }

LinComb<YWord> exp_map(const LinComb<YWord>& a) {
    return a.map_linear([](const YWord& w) { return exp_map(w); });
}
LinComb<YWord> log_map(const LinComb<YWord>& a) {
    return a.map_linear([](const YWord& w) { return log_map(w); });
}

}  // namespace arbor
