#pragma once

#include <gmpxx.h>

#include <string>

#include "rlalg/error.hpp"

namespace rlalg {

// Exact coefficient arithmetic. Rat is always stored reduced with a positive
// denominator (mpq_class canonical form); zero is 0/1.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string toString(const Int& z) { return z.get_str(); }

// "a" for integers, "a/b" otherwise.
inline std::string toString(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "a" or "a/b" with optional sign. Throws InvalidInputError on junk
// or zero denominator.
Rat parseRat(const std::string& text);

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

double toDouble(const Rat& q);

}  // namespace rlalg
