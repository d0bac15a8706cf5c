#pragma once

#include <string>
#include <vector>

#include "rlalg/ordering.hpp"
#include "rlalg/polynomial.hpp"

namespace rlalg {

// Finitely generated ideal over one ring. An empty generator list is the
// zero ideal; zero generators are dropped on construction.
class Ideal {
  public:
    Ideal() = default;
    explicit Ideal(VarSet vars) : vars_(vars) {}
    Ideal(VarSet vars, std::vector<Polynomial> gens);

    static Ideal span(std::vector<Polynomial> gens);  // ring taken from the first generator

    const VarSet& vars() const { return vars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool isZero() const { return gens_.empty(); }

    Ideal embeddedInto(const VarSet& bigger) const;
    Ideal restrictedTo(const VarSet& smaller) const;

  private:
    VarSet vars_;
    std::vector<Polynomial> gens_;
};

// Reduced Groebner basis: elements integer-primitive with positive leading
// coefficient, no term of any element divisible by another element's leading
// term, sorted ascending by leading term. This form is unique for the ideal
// and the order, whatever generators produced it.
struct GroebnerBasis {
    VarSet vars;
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<Polynomial> elements;

    bool isUnit() const;  // basis == {1}
    Ideal asIdeal() const { return Ideal(vars, elements); }
};

}  // namespace rlalg
