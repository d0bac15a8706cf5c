#pragma once

#include <array>
#include <cstdint>

#include "rlalg/variables.hpp"

namespace rlalg {

// Exponent vector, dense over the owning polynomial's VarSet: slot i is the
// exponent of varset.at(i). Slots past the varset size stay zero, so
// comparisons over the full array are safe.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;  // cached total degree

    bool isConstant() const { return deg == 0; }

    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    static Monomial one() { return Monomial{}; }

    static Monomial var(int pos, std::uint16_t power = 1) {
        Monomial m;
        m.e[static_cast<std::size_t>(pos)] = power;
        m.deg = power;
        return m;
    }
};

inline Monomial mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    r.deg = a.deg + b.deg;
    return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {  // a | b
    if (a.deg > b.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial quotient(const Monomial& b, const Monomial& a) {  // b / a, caller checks divides
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
    r.deg = b.deg - a.deg;
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::uint32_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        d += r.e[i];
    }
    r.deg = d;
    return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::uint32_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
        d += r.e[i];
    }
    r.deg = d;
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

// Fixed structural order used only for canonical term storage inside
// Polynomial; independent of any MonomialOrder.
inline bool structuralLess(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

}  // namespace rlalg
