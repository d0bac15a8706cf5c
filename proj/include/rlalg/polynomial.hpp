#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rlalg/monomial.hpp"
#include "rlalg/ordering.hpp"
#include "rlalg/rational.hpp"
#include "rlalg/variables.hpp"

namespace rlalg {

struct Term {
    Monomial mono;
    Rat coef;
};

// Immutable multivariate polynomial with exact rational coefficients over a
// fixed VarSet. Terms are kept unique, nonzero and sorted by a fixed
// structural key, so equality is plain memberwise comparison and arithmetic
// never depends on a MonomialOrder.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(VarSet vars) : vars_(vars) {}

    static Polynomial zero(VarSet vars) { return Polynomial(vars); }
    static Polynomial constant(VarSet vars, const Rat& c);
    static Polynomial variable(VarSet vars, Var v);
    // Takes any term list, merges and drops zeros.
    static Polynomial fromTerms(VarSet vars, std::vector<Term> terms);

    const VarSet& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isConstant()); }
    int termCount() const { return static_cast<int>(terms_.size()); }

    int totalDegree() const;          // -1 for the zero polynomial
    int degreeIn(Var v) const;        // max exponent of v, -1 for zero
    int degreeIn(const std::vector<Var>& vs) const;  // max summed exponent over vs
    bool isHomogeneous() const;
    bool isHomogeneousIn(const std::vector<Var>& vs) const;
    bool mentions(Var v) const { return degreeIn(v) > 0; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;

    // Leading term under an order; error on zero polynomial.
    const Term& leadingTerm(const MonomialOrder& ord) const;

    Polynomial partialDerivative(Var v) const;

    // z^deg(p) * p(x/z, ...) for hvar z; requires hvar in the varset and not
    // occurring in p. Treats every varset variable as weight one.
    Polynomial homogenize(Var hvar) const;
    // Substitute hvar = 1.
    Polynomial dehomogenize(Var hvar) const;

    Polynomial substitute(Var v, const Rat& value) const;
    Polynomial substitute(Var v, const Polynomial& value) const;
    Polynomial rename(Var from, Var to) const;  // to must be in varset, unused by p

    // Same polynomial over a superset ring (variables mapped by name).
    Polynomial embedInto(const VarSet& bigger) const;
    // Restrict to a smaller ring; every occurring variable must survive.
    Polynomial restrictTo(const VarSet& smaller) const;

    // Largest monomial dividing every term; error on zero.
    Monomial monomialContent() const;

    // gcd of numerators / lcm of denominators, always positive: p / content(p)
    // has coprime integer coefficients. Error on zero.
    Rat rationalContent() const;
    // Scaled so coefficients are coprime integers and the leading coefficient
    // under ord is positive.
    Polynomial normalized(const MonomialOrder& ord) const;

    Rat evaluate(const std::map<Var, Rat>& point) const;
    double evaluateDouble(const std::map<Var, double>& point) const;

  private:
    VarSet vars_;
    std::vector<Term> terms_;  // structuralLess-sorted, unique, nonzero
};

Polynomial operator*(const Rat& c, const Polynomial& p);

// Text round trip. parse accepts integers, a/b rationals, universe variable
// names, optional '*', '^' powers and parenthesized subexpressions; format
// emits the expanded normal form with explicit '*', terms sorted descending
// under ord (grevlex over the varset by default).
Polynomial parsePolynomial(const std::string& text, const VarSet& vars);
std::string formatPolynomial(const Polynomial& p);
std::string formatPolynomial(const Polynomial& p, const MonomialOrder& ord);

}  // namespace rlalg
