#pragma once

#include <optional>
#include <vector>

#include "rlalg/polynomial.hpp"

namespace rlalg {

// Quotient a/b when b divides a exactly, nullopt otherwise.
std::optional<Polynomial> exactDivide(const Polynomial& a, const Polynomial& b);

// Factors whose product is p up to a rational scalar: the monomial content
// split into individual variables, then either a split of the content-free
// cofactor or the cofactor whole. Splits found: rational linear factors in
// the geometric variables (bounded undetermined-coefficient search over
// restriction faces, verified by exact division; homogeneous inputs only),
// and the geometric gcd of a kd/kn-bilinear polynomial.
std::vector<Polynomial> factorGenerator(const Polynomial& p);

// True when p is provably irreducible over the rationals: degree <= 1, a
// homogeneous polynomial in <= 3 total degree whose complete linear-factor
// search came up empty, or a kd/kn-bilinear polynomial kd*A + kn*B with
// gcd(A, B) constant. False means "not certified", not "reducible".
bool irreducibilityCertified(const Polynomial& p);

}  // namespace rlalg
