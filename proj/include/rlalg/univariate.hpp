#pragma once

#include <utility>
#include <vector>

#include "rlalg/polynomial.hpp"

namespace rlalg {

// Helpers for polynomials in one variable, represented as ascending exact
// coefficient vectors: coeffs[k] multiplies v^k.

// Coefficients of p as a univariate in v; error if p mentions any other
// variable. The zero polynomial gives {}.
std::vector<Rat> univariateCoeffs(const Polynomial& p, Var v);
Polynomial fromUnivariateCoeffs(const VarSet& vars, Var v, const std::vector<Rat>& coeffs);

// Monic gcd by the Euclidean algorithm; {} when both inputs are zero.
std::vector<Rat> univariateGcd(std::vector<Rat> a, std::vector<Rat> b);

// Rational roots by the rational root theorem, each candidate verified by
// exact evaluation. complete goes false when a coefficient exceeds the
// divisor-enumeration bound; the returned roots are still genuine.
std::vector<Rat> rationalRoots(const std::vector<Rat>& coeffs, bool& complete);

struct RootExtraction {
    std::vector<std::pair<Rat, int>> roots;  // ascending, with multiplicity
    std::vector<Rat> cofactor;               // deflated remainder
    bool complete = true;  // true: the cofactor provably has no rational root
};

// Peels rational roots off by repeated exact deflation.
RootExtraction extractRationalRoots(std::vector<Rat> coeffs);

}  // namespace rlalg
