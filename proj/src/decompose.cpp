#include "rlalg/decompose.hpp"

#include <algorithm>
#include <string>

#include "rlalg/factor.hpp"

namespace rlalg {

namespace {

// Distinct nonconstant factors of g, dropping any that already lie in the
// ideal (they would not refine it). Size >= 2, or one proper factor of a
// pure power, signals a branch.
std::vector<Polynomial> branchFactors(const Polynomial& g, const GroebnerBasis& gb) {
    std::vector<Polynomial> distinct;
    for (const Polynomial& f : factorGenerator(g)) {
        if (f.isConstant()) continue;
        if (std::find(distinct.begin(), distinct.end(), f) != distinct.end()) continue;
        if (normalForm(f, gb).isZero()) continue;
        distinct.push_back(f);
    }
    if (distinct.size() == 1 && distinct[0] == g) distinct.clear();  // nothing new
    return distinct;
}

void splitRecursive(const GroebnerBasis& gb, const MonomialOrder& order, int depth, int maxDepth,
                    std::vector<GroebnerBasis>& leaves) {
    if (gb.isUnit()) return;  // empty variety, nothing on this branch
    for (const Polynomial& g : gb.elements) {
        std::vector<Polynomial> factors = branchFactors(g, gb);
        if (factors.empty()) continue;
        if (depth >= maxDepth)
            throw ComputationError("component search exceeded depth " + std::to_string(maxDepth));
        for (const Polynomial& f : factors) {
            std::vector<Polynomial> gens = gb.elements;
            gens.push_back(f);
            GroebnerBasis child = buchberger(Ideal(gb.vars, std::move(gens)), order);
            splitRecursive(child, order, depth + 1, maxDepth, leaves);
        }
        return;
    }
    leaves.push_back(gb);
}

bool basisContains(const GroebnerBasis& inner, const GroebnerBasis& outer) {
    for (const Polynomial& g : inner.elements)
        if (!normalForm(g, outer).isZero()) return false;
    return true;
}

std::vector<std::string> formattedElements(const GroebnerBasis& gb) {
    std::vector<std::string> out;
    for (const Polynomial& g : gb.elements) out.push_back(formatPolynomial(g, gb.order));
    return out;
}

}  // namespace

ComponentSet minimalComponents(const Ideal& ideal, const MonomialOrder& order, int maxDepth) {
    std::vector<GroebnerBasis> leaves;
    splitRecursive(buchberger(ideal, order), order, 0, maxDepth, leaves);

    // reduced bases are unique per ideal, so duplicate leaves compare equal
    // element by element
    std::vector<GroebnerBasis> unique;
    for (const GroebnerBasis& gb : leaves) {
        bool seen = false;
        for (const GroebnerBasis& u : unique)
            if (u.elements == gb.elements) seen = true;
        if (!seen) unique.push_back(gb);
    }

    // keep the minimal ideals: a leaf containing a distinct leaf describes a
    // smaller variety already covered by it
    std::vector<GroebnerBasis> minimal;
    for (const GroebnerBasis& gb : unique) {
        bool covered = false;
        for (const GroebnerBasis& other : unique) {
            if (&other == &gb || other.elements == gb.elements) continue;
            if (basisContains(other, gb)) covered = true;
        }
        if (!covered) minimal.push_back(gb);
    }

    std::sort(minimal.begin(), minimal.end(), [](const GroebnerBasis& a, const GroebnerBasis& b) {
        return formattedElements(a) < formattedElements(b);
    });

    ComponentSet out;
    out.source = ideal;
    for (const GroebnerBasis& gb : minimal) {
        Component c;
        c.ideal = gb.asIdeal();
        c.primeCertified = std::all_of(gb.elements.begin(), gb.elements.end(),
                                       [](const Polynomial& g) { return irreducibilityCertified(g); });
        c.parameterTrivial = gb.vars.contains(Var::kd) && gb.vars.contains(Var::kn) &&
                             normalForm(Polynomial::variable(gb.vars, Var::kd), gb).isZero() &&
                             normalForm(Polynomial::variable(gb.vars, Var::kn), gb).isZero();
        out.components.push_back(std::move(c));
    }
    return out;
}

ComponentSet filterParameterTrivial(const ComponentSet& cs) {
    ComponentSet out;
    out.source = cs.source;
    for (const Component& c : cs.components)
        if (!c.parameterTrivial) out.components.push_back(c);
    if (out.components.empty() && !cs.components.empty())
        throw ComputationError("every component is parameter-trivial");
    return out;
}

}  // namespace rlalg
