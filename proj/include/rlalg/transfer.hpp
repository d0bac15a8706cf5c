#pragma once

#include <vector>

#include "rlalg/polynomial.hpp"

namespace rlalg {

// Rational transfer function num(s)/den(s) with exact coefficients over the
// ring (s). Normalized at construction: den monic, num scaled to match, the
// pair coprime. Improper functions (deg num > deg den) are allowed.
struct TransferFunction {
    Polynomial num;
    Polynomial den;
};

// Builds from coefficient lists, highest degree first ({1, 1} is s + 1).
// Throws InvalidInputError when either list is empty or all zero, or when
// numerator and denominator share a factor.
TransferFunction makeTransferFunction(const std::vector<Rat>& numHighFirst,
                                      const std::vector<Rat>& denHighFirst);

}  // namespace rlalg
