#include "arbor/regularize.hpp"

#include <map>

namespace arbor {

namespace {

std::size_t leading_count(const YWord& w) {
    std::size_t a = 0;
    while (a < w.length() && w[a].index == 1) ++a;
    return a;
}

std::size_t leading_count(const XWord& v) {
    std::size_t a = 0;
    while (a < v.length() && v[a] == XLetter::x1) ++a;
    return a;
}

// For w = y1^a u (a >= 1), y1 * (y1^{a-1} u) = a·w + (terms with fewer
// leading y1), so the character property determines reg(w) from words that
// are strictly smaller in the leading count.
const SymbolicRegValue& reg_qsh_memo(const YWord& w, std::map<YWord, SymbolicRegValue>& memo) {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    SymbolicRegValue result;
    const std::size_t a = leading_count(w);
    if (a == 0) {
        result = SymbolicRegValue::constant(LinComb<YWord>::basis(w));
    } else {
        YWord rest = w.slice(1, w.length());
        SymbolicRegValue acc = reg_qsh_memo(rest, memo).shifted(1);
        Rational own(0);
        for (const auto& [t, c] : quasi_shuffle(YWord{YLetter{1}}, rest)) {
            if (t == w) {
                own = c;
                continue;
            }
            acc -= scale(c, reg_qsh_memo(t, memo));
        }
        result = scale(own.inverse(), acc);
    }
    return memo.emplace(w, std::move(result)).first->second;
}

const SymbolicRegValue& reg_sh_memo(const XWord& v, std::map<XWord, SymbolicRegValue>& memo) {
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    SymbolicRegValue result;
    const std::size_t a = leading_count(v);
    if (a == 0) {
        result = SymbolicRegValue::constant(LinComb<YWord>::basis(s_inverse(v)));
    } else {
        XWord rest = v.slice(1, v.length());
        SymbolicRegValue acc = reg_sh_memo(rest, memo).shifted(1);
        Rational own(0);
        for (const auto& [t, c] : shuffle(XWord{XLetter::x1}, rest)) {
            if (t == v) {
                own = c;
                continue;
            }
            acc -= scale(c, reg_sh_memo(t, memo));
        }
        result = scale(own.inverse(), acc);
    }
    return memo.emplace(v, std::move(result)).first->second;
}

}  // namespace

SymbolicRegValue reg_qsh(const YWord& w) {
    std::map<YWord, SymbolicRegValue> memo;
    return reg_qsh_memo(w, memo);
}

SymbolicRegValue reg_qsh(const LinComb<YWord>& a) {
    std::map<YWord, SymbolicRegValue> memo;
    SymbolicRegValue out;
    for (const auto& [w, c] : a) out += scale(c, reg_qsh_memo(w, memo));
    return out;
}

SymbolicRegValue reg_sh(const XWord& v) {
    if (!v.empty() && v.letters.back() != XLetter::x1)
        throw std::invalid_argument("shuffle regularization needs a word ending in x1, got " + to_string(v));
    std::map<XWord, SymbolicRegValue> memo;
    return reg_sh_memo(v, memo);
}

SymbolicRegValue reg_sh(const LinComb<XWord>& a) {
    std::map<XWord, SymbolicRegValue> memo;
    SymbolicRegValue out;
    for (const auto& [v, c] : a) {
        if (!v.empty() && v.letters.back() != XLetter::x1)
            throw std::invalid_argument("shuffle regularization needs words ending in x1, got " + to_string(v));
        out += scale(c, reg_sh_memo(v, memo));
    }
    return out;
}

SymbolicRegValue qsh_product(const SymbolicRegValue& a, const SymbolicRegValue& b) {
    return multiply(a, b, [](const LinComb<YWord>& x, const LinComb<YWord>& y) { return quasi_shuffle(x, y); });
}

SymbolicRegValue sh_product(const SymbolicRegValue& a, const SymbolicRegValue& b) {
    return multiply(a, b, [](const LinComb<YWord>& x, const LinComb<YWord>& y) {
        return s_inverse(shuffle(s_map(x), s_map(y)));
    });
}

RealThetaPoly eval_reg(const SymbolicRegValue& s, const MzvCache& zeta) {
    RealThetaPoly out;
    for (const auto& [k, c] : s.coeffs()) out.add_term(k, zeta_word_y(c, zeta));
    return out;
}

ZetaProvider zeta_provider(const MzvCache& zeta) {
    return [&zeta](int n) { return zeta(MzvIndex{{n}}); };
}

RealThetaPoly rho(const RealThetaPoly& p, const ZetaProvider& zeta_n) {
    // D = Σ_{n>=2} (-1)^n ζ(n)/n (d/dθ)^n lowers the degree by at least two,
    // so exp(D) p is a finite sum.
    auto derivation = [&](const RealThetaPoly& q) {
        RealThetaPoly out;
        auto deg = q.degree();
        if (!deg) return out;
        for (int n = 2; n <= *deg; ++n) {
            const double factor = (n % 2 == 0 ? 1.0 : -1.0) * zeta_n(n) / n;
            const RealThetaPoly d = q.derive(n);
            for (const auto& [k, c] : d.coeffs()) out.add_term(k, factor * c);
        }
        return out;
    };
    RealThetaPoly result = p;
    RealThetaPoly term = p;
    for (int k = 1; !term.is_zero(); ++k) {
        term = scale(Rational(1, k), derivation(term));
        result += term;
    }
    return result;
}

double check_bmz(const YWord& w, double tol) {
    MzvCache words(tol);
    MzvCache singles(std::max(tol / 10.0, kMinTolerance));
    const RealThetaPoly lhs = eval_reg(reg_sh(s_map(w)), words);
    const RealThetaPoly rhs = rho(eval_reg(reg_qsh(w), words), zeta_provider(singles));
    return max_coeff_residual(lhs, rhs);
}

LinComb<XWord> hoffman_reg_relation(const YWord& w) {
    if (!is_convergent(w)) throw DivergenceError("word " + to_string(w) + " is not convergent");
    LinComb<XWord> out = shuffle(XWord{XLetter::x1}, s_map(w));
    out -= s_map(quasi_shuffle(YWord{YLetter{1}}, w));
    return out;
}

std::string to_string(const SymbolicRegValue& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (auto it = s.coeffs().rbegin(); it != s.coeffs().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + it->second.str() + ")";
        if (it->first > 0) out += "*theta";
        if (it->first > 1) out += "^" + std::to_string(it->first);
    }
    return out;
}

}  // namespace arbor
