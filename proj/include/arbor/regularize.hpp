#pragma once

// θ-regularized zeta characters on both alphabets and the operator
//
//   ρ = exp( Σ_{n>=2} (-1)^n ζ(n)/n (d/dθ)^n )
//
// relating them: ζ_sh ∘ s = ρ ∘ ζ_qsh.
//
// Symbolic values are θ-polynomials whose coefficients are combinations of
// convergent Y-words; the shuffle side stores its coefficients through
// s_inverse so both regularizations share one form and one evaluator.

#include <functional>

#include "arbor/lincomb.hpp"
#include "arbor/mzv.hpp"
#include "arbor/theta_poly.hpp"
#include "arbor/words.hpp"

namespace arbor {

using SymbolicRegValue = ThetaPoly<LinComb<YWord>>;

/// Quasi-shuffle regularization: the unique quasi-shuffle character
/// extending ζ on convergent words with y1 -> θ.
SymbolicRegValue reg_qsh(const YWord& w);
SymbolicRegValue reg_qsh(const LinComb<YWord>& a);

/// Shuffle regularization on X*x1 with x1 -> θ. Throws std::invalid_argument
/// for words not ending in x1.
SymbolicRegValue reg_sh(const XWord& v);
SymbolicRegValue reg_sh(const LinComb<XWord>& a);

/// Products of symbolic values: θ-polynomial product with coefficients
/// multiplied by quasi-shuffle (resp. shuffle through s).
SymbolicRegValue qsh_product(const SymbolicRegValue& a, const SymbolicRegValue& b);
SymbolicRegValue sh_product(const SymbolicRegValue& a, const SymbolicRegValue& b);

/// Replaces every coefficient by its ζ value.
RealThetaPoly eval_reg(const SymbolicRegValue& s, const MzvCache& zeta);

/// Source of single zeta values ζ(n), n >= 2.
using ZetaProvider = std::function<double(int)>;

ZetaProvider zeta_provider(const MzvCache& zeta);

RealThetaPoly rho(const RealThetaPoly& p, const ZetaProvider& zeta_n);

/// Max coefficient residual between ζ_sh(s(w)) and ρ(ζ_qsh(w)).
/// Single values ζ(n) for ρ are evaluated at tol/10.
double check_bmz(const YWord& w, double tol = kDefaultTolerance);

/// x1 ⧢ s(w) - s(y1 * w) for convergent w; throws DivergenceError otherwise.
LinComb<XWord> hoffman_reg_relation(const YWord& w);

std::string to_string(const SymbolicRegValue& s);

}  // namespace arbor
