#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include "rlalg/error.hpp"

namespace rlalg {

// The fixed variable universe. x,y,z are projective plane coordinates, kd,kn
// the gain pair, u,v,w the dual plane coordinates, l the tangency multiplier,
// t the tag used for ideal intersections and s the Laplace variable used only
// before the complex split.
enum class Var : std::uint8_t { x, y, z, kd, kn, u, v, w, l, t, s };

inline constexpr int kMaxVars = 11;

const char* varName(Var v);
std::optional<Var> varFromName(std::string_view name);

// Ordered subset of the universe. The listing order is the precedence used
// by monomial orders (first variable is largest).
class VarSet {
  public:
    VarSet() = default;
    VarSet(std::initializer_list<Var> vars);

    int size() const { return n_; }
    Var at(int i) const { return vars_[static_cast<std::size_t>(i)]; }
    bool contains(Var v) const { return indexOf(v) >= 0; }
    int indexOf(Var v) const;  // -1 when absent

    bool operator==(const VarSet& o) const;
    bool operator!=(const VarSet& o) const { return !(*this == o); }

    // this extended with v appended (error if already present).
    VarSet extendedWith(Var v) const;
    // this with v removed (error if absent).
    VarSet without(Var v) const;

    std::string str() const;  // "(x,y,kd,kn)" for diagnostics

  private:
    std::array<Var, kMaxVars> vars_{};
    int n_ = 0;
};

namespace rings {
// The rings the pipeline actually uses.
VarSet pencil();     // (s,kd,kn)
VarSet affine();     // (x,y,kd,kn)
VarSet proj();       // (x,y,z,kd,kn)
VarSet incidence();  // (x,y,z,kd,kn,l,u,v,w)
VarSet dual();       // (u,v,w,kd,kn)
}  // namespace rings

}  // namespace rlalg
