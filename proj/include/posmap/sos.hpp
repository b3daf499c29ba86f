#pragma once

#include <span>

#include "posmap/multipoly.hpp"

namespace posmap {

/// One summand w·s² of a weighted sum of squares.
struct SosTerm {
    Rational weight;
    MultiPoly square_root;
};

MultiPoly expand(std::span<const SosTerm> terms, std::size_t nvars);

/// True when every weight is nonnegative and Σ w·s² expands exactly to p.
bool certifies_nonnegative(std::span<const SosTerm> terms, const MultiPoly& p);

}  // namespace posmap
