#include "rlalg/factor.hpp"

#include <algorithm>

#include "rlalg/groebner.hpp"
#include "rlalg/ideal.hpp"
#include "rlalg/univariate.hpp"

namespace rlalg {

namespace {

bool isGeometric(Var v) {
    return v == Var::x || v == Var::y || v == Var::z || v == Var::u || v == Var::v || v == Var::w;
}

bool isParameter(Var v) { return v == Var::kd || v == Var::kn; }

std::vector<Var> mentionedVars(const Polynomial& p) {
    std::vector<Var> out;
    for (int i = 0; i < p.vars().size(); ++i)
        if (p.mentions(p.vars().at(i))) out.push_back(p.vars().at(i));
    return out;
}

struct Candidates {
    std::vector<Rat> values;
    bool known = false;  // false: the face gave no information
};

// Candidate coefficients beta with (anchor + beta*other) | p after every
// geometric variable outside the pair is set to zero. Complete whenever the
// restriction is nonzero and root enumeration stayed within bounds.
Candidates pairCandidates(const Polynomial& p, Var anchor, Var other, bool& searchComplete) {
    Polynomial r = p;
    for (int i = 0; i < p.vars().size(); ++i) {
        Var g = p.vars().at(i);
        if (isGeometric(g) && g != anchor && g != other) r = r.substitute(g, Rat(0));
    }
    if (r.isZero()) {
        searchComplete = false;
        return {};
    }

    // group terms by their non-pair monomial part, take the structurally
    // smallest group: a divisor of r divides that binary form too
    int ai = p.vars().indexOf(anchor);
    int oi = p.vars().indexOf(other);
    auto keyOf = [&](const Monomial& m) {
        Monomial k = m;
        k.deg -= k.e[static_cast<std::size_t>(ai)] + k.e[static_cast<std::size_t>(oi)];
        k.e[static_cast<std::size_t>(ai)] = 0;
        k.e[static_cast<std::size_t>(oi)] = 0;
        return k;
    };
    Monomial best;
    bool haveBest = false;
    for (const Term& t : r.terms()) {
        Monomial k = keyOf(t.mono);
        if (!haveBest || structuralLess(k, best)) {
            best = k;
            haveBest = true;
        }
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(r.totalDegree()) + 1, Rat(0));
    int maxExp = 0;
    for (const Term& t : r.terms())
        if (keyOf(t.mono) == best) {
            int e = t.mono.e[static_cast<std::size_t>(ai)];
            coeffs[static_cast<std::size_t>(e)] += t.coef;
            maxExp = std::max(maxExp, e);
        }
    coeffs.resize(static_cast<std::size_t>(maxExp) + 1);

    bool rootsComplete = true;
    Candidates c;
    for (const Rat& root : rationalRoots(coeffs, rootsComplete)) c.values.push_back(-root);
    if (!rootsComplete) searchComplete = false;
    c.known = rootsComplete;
    return c;
}

// One rational linear factor of a homogeneous p over its geometric variables
// (or over both variables when p mentions exactly two). searchComplete means
// the candidate enumeration provably covered every possible such factor.
std::optional<Polynomial> linearFactorSearch(const Polynomial& p, bool& searchComplete) {
    searchComplete = true;
    if (!p.isHomogeneous() || p.totalDegree() < 2) {
        searchComplete = p.isHomogeneous();
        return std::nullopt;
    }
    std::vector<Var> mv = mentionedVars(p);

    std::vector<Var> span;  // variables a linear factor may involve
    if (mv.size() == 2) {
        span = mv;
    } else {
        for (Var v : mv)
            if (isGeometric(v)) span.push_back(v);
    }
    if (span.size() < 2) return std::nullopt;  // a lone variable is content, handled elsewhere

    for (std::size_t i = 0; i < span.size(); ++i) {
        std::vector<Candidates> cands;
        bool anchorUsable = true;
        std::size_t combos = 1;
        for (std::size_t j = i + 1; j < span.size(); ++j) {
            Candidates c = pairCandidates(p, span[i], span[j], searchComplete);
            if (!c.known) anchorUsable = false;
            combos *= c.values.size();
            cands.push_back(std::move(c));
        }
        if (!anchorUsable) continue;  // searchComplete already false
        if (combos > 4096) {
            searchComplete = false;
            continue;
        }
        if (combos == 0) continue;

        std::vector<std::size_t> idx(cands.size(), 0);
        while (true) {
            Polynomial a = Polynomial::variable(p.vars(), span[i]);
            for (std::size_t j = 0; j < cands.size(); ++j)
                a = a + Polynomial::variable(p.vars(), span[i + 1 + j]) * cands[j].values[idx[j]];
            if (exactDivide(p, a)) return a;

            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == cands[k].values.size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }
    return std::nullopt;
}

// p = kd*A + kn*B with parameter-free A, B; nullopt otherwise.
std::optional<std::pair<Polynomial, Polynomial>> bilinearParts(const Polynomial& p) {
    std::vector<Var> params = {Var::kd, Var::kn};
    if (!p.vars().contains(Var::kd) || !p.vars().contains(Var::kn)) return std::nullopt;
    if (!p.isHomogeneousIn(params) || p.degreeIn(params) != 1) return std::nullopt;
    Polynomial a = p.substitute(Var::kd, Rat(1)).substitute(Var::kn, Rat(0));
    Polynomial b = p.substitute(Var::kd, Rat(0)).substitute(Var::kn, Rat(1));
    if (a.isZero() || b.isZero()) return std::nullopt;  // p had kd or kn content
    return std::make_pair(a, b);
}

// gcd of two polynomials through the principal intersection ideal, which is
// generated by their lcm.
Polynomial polyGcd(const Polynomial& a, const Polynomial& b) {
    Ideal inter = intersectIdeals(Ideal(a.vars(), {a}), Ideal(a.vars(), {b}));
    if (inter.generators().size() != 1)
        throw ComputationError("intersection of principal ideals is not principal");
    auto q = exactDivide(a * b, inter.generators()[0]);
    if (!q) throw ComputationError("lcm does not divide the product");
    return *q;
}

}  // namespace

std::optional<Polynomial> exactDivide(const Polynomial& a, const Polynomial& b) {
    if (b.isZero()) throw InvalidInputError("division by the zero polynomial");
    if (a.vars() != b.vars()) throw InvalidInputError("exactDivide across different rings");
    MonomialOrder ord = MonomialOrder::grevlex();
    Polynomial q = Polynomial::zero(a.vars());
    Polynomial r = a;
    const Term& lb = b.leadingTerm(ord);
    while (!r.isZero()) {
        const Term& lr = r.leadingTerm(ord);
        if (!divides(lb.mono, lr.mono)) return std::nullopt;
        Polynomial t = Polynomial::fromTerms(a.vars(), {{quotient(lr.mono, lb.mono), lr.coef / lb.coef}});
        q = q + t;
        r = r - t * b;
    }
    return q;
}

std::vector<Polynomial> factorGenerator(const Polynomial& p) {
    if (p.isZero()) throw InvalidInputError("factoring the zero polynomial");
    std::vector<Polynomial> out;

    Monomial content = p.monomialContent();
    std::vector<Term> stripped;
    for (const Term& t : p.terms()) stripped.push_back({quotient(t.mono, content), t.coef});
    Polynomial rest = Polynomial::fromTerms(p.vars(), std::move(stripped));
    for (int i = 0; i < p.vars().size(); ++i)
        for (int k = 0; k < content.e[static_cast<std::size_t>(i)]; ++k)
            out.push_back(Polynomial::variable(p.vars(), p.vars().at(i)));

    if (rest.isConstant()) {
        if (out.empty()) out.push_back(rest);
        return out;
    }

    bool complete = true;
    if (auto a = linearFactorSearch(rest, complete)) {
        out.push_back(*a);
        out.push_back(*exactDivide(rest, *a));
        return out;
    }
    if (auto parts = bilinearParts(rest)) {
        Polynomial g = polyGcd(parts->first, parts->second);
        if (g.totalDegree() > 0) {
            Polynomial kd = Polynomial::variable(p.vars(), Var::kd);
            Polynomial kn = Polynomial::variable(p.vars(), Var::kn);
            out.push_back(g);
            out.push_back(kd * *exactDivide(parts->first, g) + kn * *exactDivide(parts->second, g));
            return out;
        }
    }
    out.push_back(rest);
    return out;
}

bool irreducibilityCertified(const Polynomial& p) {
    if (p.isZero()) return false;
    if (p.totalDegree() <= 1) return true;
    if (p.monomialContent() != Monomial::one()) return false;

    if (auto parts = bilinearParts(p)) {
        // kd*A + kn*B factors exactly when A and B share a nonconstant factor
        return polyGcd(parts->first, parts->second).totalDegree() == 0;
    }

    if (p.isHomogeneous() && p.totalDegree() <= 3) {
        // a reducible form of degree 2 or 3 has a linear factor; the search
        // is exhaustive for parameter-free and two-variable polynomials
        std::vector<Var> mv = mentionedVars(p);
        bool searchable = mv.size() == 2 ||
                          std::all_of(mv.begin(), mv.end(), [](Var v) { return !isParameter(v); });
        if (!searchable) return false;
        bool complete = true;
        if (linearFactorSearch(p, complete)) return false;
        return complete;
    }
    return false;
}

}  // namespace rlalg
