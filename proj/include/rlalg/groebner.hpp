#pragma once

#include <vector>

#include "rlalg/ideal.hpp"

namespace rlalg {

// Buchberger's algorithm with normal pair selection (smallest lcm first),
// the coprimality and chain criteria, full interreduction at the end.
// Returns the reduced basis; deterministic for a given ideal and order.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);

// Remainder of division by the basis: p - r lies in the ideal and no term of
// r is divisible by any leading term of the basis. Deterministic (first
// dividing element in basis order wins).
Polynomial normalForm(const Polynomial& p, const GroebnerBasis& gb);

// Elimination ideal: generators free of elimVars, computed with a block
// order putting elimVars in front. Result keeps the full ring.
Ideal eliminate(const Ideal& ideal, const std::vector<Var>& elimVars);

// Intersection via the tag variable t: eliminate t from t*I + (1-t)*J.
// Errors if t already occurs in the ring.
Ideal intersectIdeals(const Ideal& a, const Ideal& b);

bool idealContains(const Ideal& ideal, const Polynomial& p);
bool idealEqual(const Ideal& a, const Ideal& b, const MonomialOrder& order);

// Checks every S-polynomial reduces to zero; test support.
bool isGroebnerBasis(const GroebnerBasis& gb);

}  // namespace rlalg
