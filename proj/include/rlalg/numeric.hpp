#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "rlalg/polynomial.hpp"
#include "rlalg/transfer.hpp"

namespace rlalg {

// All roots of sum_k coeffs[k] * x^k (ascending), multiplicities as repeats,
// sorted by (re, im). Aberth iteration with deterministic starting points;
// exact zero roots are stripped first, conjugate pairs are symmetrized, and
// near-coincident roots within 1e-7 are merged to their mean. Every returned
// root meets a 1e-10 relative residual or ComputationError is thrown.
std::vector<std::complex<double>> univariateRoots(const std::vector<double>& coeffs);
std::vector<std::complex<double>> univariateRoots(const std::vector<Rat>& coeffs);

// Closed-loop roots den(s) + gain * num(s) = 0 for each gain.
std::vector<std::vector<std::complex<double>>> sampleRootLocus(const TransferFunction& tf,
                                                               const std::vector<double>& gains);

// |f(px, py)| relative to the largest term magnitude, floored at one. f may
// mention only x and y.
double planeResidual(const Polynomial& f, double px, double py);

struct BBox {
    double x0, x1, y0, y1;
};

// Polylines approximating f(x, y) = 0 on the box: marching squares on a
// resolution x resolution cell grid, each edge crossing refined by bisection,
// saddle cells disambiguated by the center sample. Closed loops come back
// with first point == last point.
std::vector<std::vector<std::pair<double, double>>> traceCurve(const Polynomial& f, BBox box,
                                                               int resolution);

}  // namespace rlalg
