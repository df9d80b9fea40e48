#pragma once

// Text-level commands behind the command-line tool.

#include <stdexcept>
#include <string>
#include <string_view>

#include "arbor/arborify.hpp"
#include "arbor/mzv.hpp"

namespace arbor {

/// Bad flags or an input from the wrong alphabet.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The arborification of a forest, printed in canonical order,
/// e.g. `1*y1.y2.y3 + 1*y2.y1.y3 + 1*y3.y3`.
std::string expand_command(Flavor flavor, std::string_view forest_text);

struct ZetaExpansion {
    std::string combination;  // `2*zeta(3,1) + 1*zeta(2,2)`
    double value = 0.0;
    double tolerance = 0.0;
};

/// Expansion of an arborified (X) or contracted arborified (Y) forest, or of
/// a single word when `as_word` is set, in ζ notation. The alphabet is taken
/// from the first decoration. Throws DivergenceError with a diagnosis.
ZetaExpansion zeta_command(std::string_view text, bool as_word, double tol);

/// Canonical trees with n vertices over y1..y_decorations, one per line,
/// preceded by a count line.
std::string enumerate_command(int n, int decorations, int cap = 8);

/// Hoffman exp or log of a Y-word.
std::string hoffman_command(std::string_view which, std::string_view word_text);

}  // namespace arbor
