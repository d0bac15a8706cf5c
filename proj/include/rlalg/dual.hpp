#pragma once

#include <optional>
#include <vector>

#include "rlalg/rootlocus.hpp"

namespace rlalg {

// Tangent-line incidence ideal of f: <f, u - l*df/dx, v - l*df/dy,
// w - l*df/dz> over (x,y,z,kd,kn,l,u,v,w). f must be homogeneous in x,y,z;
// gain coefficients are allowed.
Ideal incidenceIdeal(const Polynomial& f);

// Defining polynomial of the dual curve: eliminate {x,y,z,l} from the
// incidence ideal, take the generator with the highest degree in u,v,w.
// Homogeneous in u,v,w.
Polynomial dualCurve(const Polynomial& f);

// Gain relation cut out by the dual points: eliminate {x,y,z,l} from
// <paramGen, tangency relations of f> and return the first generator
// mentioning a gain.
Polynomial dualParametrization(const Polynomial& paramGen, const Polynomial& f);

struct DualComponent {
    Ideal source;     // the root-locus component this dualizes
    Ideal dualIdeal;  // over (u,v,w,kd,kn)
    std::optional<Polynomial> dualCurve;  // first gain-free generator
    std::optional<Polynomial> dualParam;  // first gain-carrying generator
    // Source curve is a line: its strict dual degenerates to the point ideal
    // below, and dualIdeal comes from the gain generator's tangent cone
    // instead.
    bool pointDual = false;
    std::optional<Ideal> pointIdeal;
    SlicePoints initial, terminal;         // over (u:v:w)
    std::vector<Polynomial> intermediate;  // gains (1, l), w = 1, over (u,v,l)
};

DualComponent dualizeComponent(const RLComponent& c);

// Reverse construction: tangency relations on the dual side, eliminating
// {u,v,w,l}. Returns an ideal over (x,y,z,kd,kn) equal to the source
// component's ideal.
Ideal bidual(const DualComponent& dc);

// Cheap curve-level bidual certificate for high-degree duals, where the
// elimination in bidual() is out of reach: the gradient of the dual curve
// maps V(dualCurvePoly) back into V(sourceCurve) exactly when
// sourceCurve(dg/du, dg/dv, dg/dw) reduces to zero modulo dualCurvePoly.
// Division by one polynomial, no elimination. Both inputs must be gain-free
// and the dual curve of degree at least two.
bool gaussReturnCertified(const Polynomial& dualCurvePoly, const Polynomial& sourceCurve);

// The line dual to a point of the dual plane: <u, w> -> <y>. The input must
// be generated by gain-free linear forms with a single projective zero.
Ideal pointDualLine(const Ideal& pointIdeal);

// Certifies that fx, fy, fz have no common projective zero by finding pure
// powers of x, y, z in the gradient ideal. False means "not certified", so
// degree-law checks must be skipped, not failed.
bool smoothnessCertified(const Polynomial& f);

struct ADRL {
    std::vector<DualComponent> components;
    std::vector<MergedPoint> initial, terminal;
    std::vector<Polynomial> affinePieces;  // dual curves at w = 1, over (u,v,kd,kn)
};

ADRL assembleADRL(std::vector<DualComponent> components);

}  // namespace rlalg
