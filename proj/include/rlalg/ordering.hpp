#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rlalg/monomial.hpp"
#include "rlalg/variables.hpp"

namespace rlalg {

// Total order on monomials of one ring. Precedence always follows the VarSet
// listing (position 0 is the largest variable). Block orders compare the
// front-block projection first, then the back block; both blocks default to
// grevlex, which is what every elimination here runs on.
class MonomialOrder {
  public:
    enum class Kind : std::uint8_t { lex, grevlex, block };

    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder block(const VarSet& ring, const std::vector<Var>& front,
                               Kind frontInner = Kind::grevlex, Kind backInner = Kind::grevlex);

    // -1, 0, 1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    Kind kind() const { return kind_; }
    std::uint16_t frontMask() const { return frontMask_; }

    std::string str() const;

  private:
    MonomialOrder(Kind k, std::uint16_t mask, Kind fi = Kind::grevlex, Kind bi = Kind::grevlex)
        : kind_(k), frontMask_(mask), frontInner_(fi), backInner_(bi) {}

    Kind kind_;
    std::uint16_t frontMask_;  // bit i set: position i belongs to the front block
    Kind frontInner_, backInner_;
};

}  // namespace rlalg
