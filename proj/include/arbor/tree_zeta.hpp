#pragma once

// Arborified multiple zeta values of decorated forests.
//
// Contracted (Y-decorated) values are the nested sums
//   Σ_{k} Π_v k_v^{-n_v}  over maps k with k_v < k_w whenever w lies above v,
// evaluated through the contracting arborification; simple (X-decorated)
// values go through the simple arborification and the iterated-integral
// reading of words.

#include "arbor/arborify.hpp"
#include "arbor/mzv.hpp"

namespace arbor {

/// ζ of arborify_y(f). Throws DivergenceError when some leaf is y1.
double zeta_tree_y(const YForest& f, const MzvCache& zeta);
/// ζ of arborify_x(f). Throws DivergenceError unless roots are x1 and leaves x0.
double zeta_tree_x(const XForest& f, const MzvCache& zeta);

/// Partial nested sum over all admissible maps with every k_v <= bound.
double brute_tree_sum(const YTree& t, int bound);

/// Upper bound on the omitted part ζ(t) - brute_tree_sum(t, bound), built
/// bottom-up: the full sum of a subtree whose root lies above p is at most
/// c·p^{-s}, with s = n_v - 1 + Σ_children s and c from the integral
/// comparison, and the part leaving the box is split by whether the root
/// itself leaves it. Finite exactly for convergent trees (y1 allowed on inner
/// vertices); +infinity otherwise.
double brute_tree_tail_bound(const YTree& t, int bound);

}  // namespace arbor
