#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rlalg/decompose.hpp"
#include "rlalg/transfer.hpp"

namespace rlalg {

// kd * den + kn * num over (s, kd, kn).
Polynomial buildPencil(const TransferFunction& tf);

// Real and imaginary parts of a pencil-ring polynomial at s = x + i*y, both
// over (x, y, kd, kn).
struct PencilSplit {
    Polynomial re, im;
};
PencilSplit complexSplit(const Polynomial& pencil);

struct LocusPoint {
    // canonical projective coordinates, last nonzero entry scaled to 1;
    // meaningful only when exact
    std::array<Rat, 3> coords{};
    std::array<double, 3> approx{};  // always filled
    bool exact = true;
    int multiplicity = 1;
};

struct SlicePoints {
    std::vector<LocusPoint> points;
    // false: the slice is not zero-dimensional, so the point list was skipped
    bool finite = true;
};

// Real projective points of the component at a fixed gain pair, from the
// z = 1 chart and the z = 0 line at infinity. Rational points are exact;
// irrational real ones come from the numeric root finder, flagged
// approximate.
SlicePoints classifyComponentPoints(const Ideal& component, const Rat& kdVal, const Rat& knVal);

struct RLComponent {
    Ideal ideal;  // reduced-basis generators over (x, y, z, kd, kn)
    bool primeCertified = false;
    std::optional<Polynomial> curvePoly;  // first gain-free generator
    std::optional<Polynomial> paramPoly;  // first generator mentioning a gain
    SlicePoints initial;                  // gains (1, 0): open-loop poles
    SlicePoints terminal;                 // gains (0, 1): open-loop zeros
};

struct RootLocusDecomposition {
    TransferFunction tf;
    Polynomial pencil;  // (s, kd, kn)
    PencilSplit split;  // (x, y, kd, kn)
    Ideal closure;      // homogenized reduced-basis ideal over (x, y, z, kd, kn)
    // gain-trivial components filtered out, sorted by (curve degree, text)
    std::vector<RLComponent> components;
};

RootLocusDecomposition decomposeRootLocus(const TransferFunction& tf);

struct MergedPoint {
    LocusPoint point;
    int occurrences = 1;  // how many component slices contain it
};

// Union of per-component slice lists in first-seen order. Exact points merge
// on equal coordinates, pairs involving an approximate point within 1e-7;
// an exact representative wins over an approximate one. Non-finite slices
// are skipped.
std::vector<MergedPoint> mergeSlicePoints(const std::vector<SlicePoints>& slices);

// Component generators with kd = 1, kn = l, z = 1: the one-gain affine view,
// over (x, y, l).
std::vector<Polynomial> intermediateDescription(const RLComponent& c);

}  // namespace rlalg
