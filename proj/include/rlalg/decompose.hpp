#pragma once

#include <vector>

#include "rlalg/groebner.hpp"
#include "rlalg/ideal.hpp"

namespace rlalg {

struct Component {
    Ideal ideal;  // generators form the reduced Groebner basis, ascending
    // every generator passed the irreducibility certificate, so the
    // component is a verified prime candidate; false means possibly
    // reducible, never provably reducible
    bool primeCertified = false;
    bool parameterTrivial = false;  // contains both kd and kn
};

struct ComponentSet {
    Ideal source;
    std::vector<Component> components;
};

// Splits V(ideal) into candidate irreducible pieces: compute the reduced
// basis, branch on any basis element that factors (one branch per distinct
// factor), recurse, then drop unit leaves, duplicates and any leaf
// containing another leaf. Deterministic: identical output for permuted or
// rescaled generators. Throws ComputationError past maxDepth branchings.
ComponentSet minimalComponents(const Ideal& ideal, const MonomialOrder& order, int maxDepth = 16);

// Copy without the parameter-trivial components. Throws ComputationError
// when nothing survives, since downstream stages need a genuine curve.
ComponentSet filterParameterTrivial(const ComponentSet& cs);

}  // namespace rlalg
