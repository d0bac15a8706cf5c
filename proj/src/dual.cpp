#include "rlalg/dual.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "rlalg/error.hpp"
#include "rlalg/groebner.hpp"

namespace rlalg {

namespace {

bool mentionsGain(const Polynomial& p) { return p.mentions(Var::kd) || p.mentions(Var::kn); }

void checkSourceSide(const Polynomial& f) {
    for (Var v : {Var::u, Var::v, Var::w, Var::l, Var::t, Var::s})
        if (f.vars().contains(v) && f.mentions(v))
            throw InvalidInputError("polynomial mentions dual or helper variables");
    if (f.isZero() || !f.isHomogeneousIn({Var::x, Var::y, Var::z}))
        throw InvalidInputError("incidence construction needs a polynomial homogeneous in x, y, z");
}

// f plus the three tangency relations, all over the incidence ring.
std::vector<Polynomial> incidenceGens(const Polynomial& f) {
    VarSet in = rings::incidence();
    Polynomial g = f.embedInto(in);
    Polynomial l = Polynomial::variable(in, Var::l);
    return {g,
            Polynomial::variable(in, Var::u) - l * g.partialDerivative(Var::x),
            Polynomial::variable(in, Var::v) - l * g.partialDerivative(Var::y),
            Polynomial::variable(in, Var::w) - l * g.partialDerivative(Var::z)};
}

// Eliminate the source plane and the multiplier; reduced basis over the dual
// ring, ascending.
std::vector<Polynomial> dualElimination(std::vector<Polynomial> gens) {
    Ideal inc(rings::incidence(), std::move(gens));
    Ideal el = eliminate(inc, {Var::x, Var::y, Var::z, Var::l});
    std::vector<Polynomial> out;
    out.reserve(el.generators().size());
    for (const Polynomial& g : el.generators()) out.push_back(g.restrictTo(rings::dual()));
    return out;
}

Ideal renamedToPlane(const Ideal& dualIdeal) {
    VarSet in = rings::incidence();
    std::vector<Polynomial> gens;
    for (const Polynomial& g : dualIdeal.generators())
        gens.push_back(g.embedInto(in)
                           .rename(Var::u, Var::x)
                           .rename(Var::v, Var::y)
                           .rename(Var::w, Var::z)
                           .restrictTo(rings::proj()));
    return Ideal(rings::proj(), std::move(gens));
}

}  // namespace

Ideal incidenceIdeal(const Polynomial& f) {
    checkSourceSide(f);
    return Ideal(rings::incidence(), incidenceGens(f));
}

Polynomial dualCurve(const Polynomial& f) {
    checkSourceSide(f);
    std::vector<Polynomial> gens = dualElimination(incidenceGens(f));
    if (gens.empty()) throw ComputationError("dual elimination gave the zero ideal");
    const Polynomial* best = &gens.front();
    for (const Polynomial& g : gens)
        if (g.degreeIn({Var::u, Var::v, Var::w}) > best->degreeIn({Var::u, Var::v, Var::w}))
            best = &g;
    if (!best->isHomogeneousIn({Var::u, Var::v, Var::w}))
        throw ComputationError("dual curve polynomial is not homogeneous in u, v, w");
    return *best;
}

Polynomial dualParametrization(const Polynomial& paramGen, const Polynomial& f) {
    checkSourceSide(paramGen);
    checkSourceSide(f);
    std::vector<Polynomial> gens = incidenceGens(f);
    gens[0] = paramGen.embedInto(rings::incidence());
    for (const Polynomial& g : dualElimination(std::move(gens)))
        if (mentionsGain(g)) return g;
    throw ComputationError("dual parametrization has no gain-dependent generator");
}

DualComponent dualizeComponent(const RLComponent& c) {
    if (!c.curvePoly) throw InvalidInputError("component has no identified locus polynomial");

    DualComponent dc;
    dc.source = c.ideal;
    if (c.curvePoly->totalDegree() <= 1) {
        // a line's dual is a single point; the moving root points live in the
        // gain generator, whose tangent lines sweep the useful dual family
        dc.pointDual = true;
        dc.pointIdeal = Ideal(rings::dual(), dualElimination(incidenceGens(*c.curvePoly)));
        if (!c.paramPoly) throw InvalidInputError("line component has no gain generator");
        dc.dualIdeal = Ideal(rings::dual(), dualElimination(incidenceGens(*c.paramPoly)));
    } else {
        std::vector<Polynomial> gens{dualCurve(*c.curvePoly)};
        if (c.paramPoly) gens.push_back(dualParametrization(*c.paramPoly, *c.curvePoly));
        dc.dualIdeal = Ideal(rings::dual(), std::move(gens));
    }
    for (const Polynomial& g : dc.dualIdeal.generators()) {
        if (!mentionsGain(g) && !dc.dualCurve) dc.dualCurve = g;
        if (mentionsGain(g) && !dc.dualParam) dc.dualParam = g;
    }

    Ideal plane = renamedToPlane(dc.dualIdeal);
    dc.initial = classifyComponentPoints(plane, Rat(1), Rat(0));
    dc.terminal = classifyComponentPoints(plane, Rat(0), Rat(1));

    VarSet big{Var::u, Var::v, Var::w, Var::kd, Var::kn, Var::l};
    VarSet small{Var::u, Var::v, Var::l};
    Polynomial lam = Polynomial::variable(big, Var::l);
    for (const Polynomial& g : dc.dualIdeal.generators()) {
        Polynomial h = g.embedInto(big)
                           .substitute(Var::kd, Rat(1))
                           .substitute(Var::kn, lam)
                           .substitute(Var::w, Rat(1));
        if (!h.isZero()) dc.intermediate.push_back(h.restrictTo(small));
    }
    return dc;
}

Ideal bidual(const DualComponent& dc) {
    const Polynomial* tangent = nullptr;
    if (dc.dualCurve && dc.dualCurve->degreeIn({Var::u, Var::v, Var::w}) >= 2)
        tangent = &*dc.dualCurve;
    else if (dc.dualParam)
        tangent = &*dc.dualParam;
    else if (dc.dualCurve)
        tangent = &*dc.dualCurve;
    if (!tangent) throw InvalidInputError("dual component has no generators");

    VarSet in = rings::incidence();
    Polynomial g = tangent->embedInto(in);
    Polynomial l = Polynomial::variable(in, Var::l);
    std::vector<Polynomial> gens;
    for (const Polynomial& d : dc.dualIdeal.generators()) gens.push_back(d.embedInto(in));
    gens.push_back(Polynomial::variable(in, Var::x) - l * g.partialDerivative(Var::u));
    gens.push_back(Polynomial::variable(in, Var::y) - l * g.partialDerivative(Var::v));
    gens.push_back(Polynomial::variable(in, Var::z) - l * g.partialDerivative(Var::w));

    Ideal el = eliminate(Ideal(in, std::move(gens)), {Var::u, Var::v, Var::w, Var::l});
    std::vector<Polynomial> out;
    for (const Polynomial& e : el.generators()) out.push_back(e.restrictTo(rings::proj()));
    if (out.empty()) throw ComputationError("bidual elimination gave the zero ideal");
    return Ideal(rings::proj(), std::move(out));
}

bool gaussReturnCertified(const Polynomial& dualCurvePoly, const Polynomial& sourceCurve) {
    checkSourceSide(sourceCurve);
    if (mentionsGain(sourceCurve) || mentionsGain(dualCurvePoly))
        throw InvalidInputError("gauss return certificate applies to gain-free curves");
    if (!dualCurvePoly.isHomogeneousIn({Var::u, Var::v, Var::w}) ||
        dualCurvePoly.degreeIn({Var::u, Var::v, Var::w}) < 2)
        throw InvalidInputError(
            "gauss return certificate wants a dual curve of degree at least two in u, v, w");

    VarSet in = rings::incidence();
    Polynomial g = dualCurvePoly.embedInto(in);
    Polynomial composite = sourceCurve.embedInto(in)
                               .substitute(Var::x, g.partialDerivative(Var::u))
                               .substitute(Var::y, g.partialDerivative(Var::v))
                               .substitute(Var::z, g.partialDerivative(Var::w));

    VarSet uvw{Var::u, Var::v, Var::w};
    MonomialOrder ord = MonomialOrder::grevlex();
    GroebnerBasis gb = buchberger(Ideal(uvw, {g.restrictTo(uvw)}), ord);
    return normalForm(composite.restrictTo(uvw), gb).isZero();
}

Ideal pointDualLine(const Ideal& pointIdeal) {
    std::vector<std::array<Rat, 3>> rows;
    for (const Polynomial& g : pointIdeal.generators()) {
        if (mentionsGain(g) || !g.isHomogeneousIn({Var::u, Var::v, Var::w}) || g.totalDegree() != 1)
            throw ComputationError("not a point ideal: generators must be linear forms in u, v, w");
        std::array<Rat, 3> row{Rat(0), Rat(0), Rat(0)};
        for (const Term& t : g.terms()) {
            int up = g.vars().indexOf(Var::u), vp = g.vars().indexOf(Var::v),
                wp = g.vars().indexOf(Var::w);
            if (up >= 0 && t.mono.e[static_cast<std::size_t>(up)] == 1) row[0] = t.coef;
            if (vp >= 0 && t.mono.e[static_cast<std::size_t>(vp)] == 1) row[1] = t.coef;
            if (wp >= 0 && t.mono.e[static_cast<std::size_t>(wp)] == 1) row[2] = t.coef;
        }
        rows.push_back(row);
    }

    std::array<Rat, 3> point{Rat(0), Rat(0), Rat(0)};
    bool found = false;
    for (std::size_t i = 0; i < rows.size() && !found; ++i)
        for (std::size_t j = i + 1; j < rows.size() && !found; ++j) {
            std::array<Rat, 3> cr{rows[i][1] * rows[j][2] - rows[i][2] * rows[j][1],
                                  rows[i][2] * rows[j][0] - rows[i][0] * rows[j][2],
                                  rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]};
            if (cr[0] != 0 || cr[1] != 0 || cr[2] != 0) {
                point = cr;
                found = true;
            }
        }
    if (!found) throw ComputationError("not a point ideal: generators do not cut a single point");
    for (const auto& row : rows)
        if (row[0] * point[0] + row[1] * point[1] + row[2] * point[2] != 0)
            throw ComputationError("not a point ideal: generators do not cut a single point");

    VarSet P = rings::proj();
    Polynomial line = Polynomial::variable(P, Var::x) * point[0] +
                      Polynomial::variable(P, Var::y) * point[1] +
                      Polynomial::variable(P, Var::z) * point[2];
    return Ideal(P, {line.normalized(MonomialOrder::grevlex())});
}

bool smoothnessCertified(const Polynomial& f) {
    checkSourceSide(f);
    if (mentionsGain(f))
        throw InvalidInputError("smoothness check applies to gain-free curve polynomials");
    VarSet xyz{Var::x, Var::y, Var::z};
    std::vector<Polynomial> grad;
    for (Var v : {Var::x, Var::y, Var::z}) {
        Polynomial d = f.partialDerivative(v);
        if (!d.isZero()) grad.push_back(d.restrictTo(xyz));
    }
    if (grad.empty()) return false;
    MonomialOrder ord = MonomialOrder::grevlex();
    GroebnerBasis gb = buchberger(Ideal(xyz, std::move(grad)), ord);
    if (gb.isUnit()) return true;

    int bound = 3 * std::max(f.totalDegree(), 1);
    for (Var v : {Var::x, Var::y, Var::z}) {
        bool inIdeal = false;
        Polynomial power = Polynomial::variable(xyz, v);
        for (int k = 1; k <= bound; ++k) {
            if (normalForm(power, gb).isZero()) {
                inIdeal = true;
                break;
            }
            power = power * Polynomial::variable(xyz, v);
        }
        if (!inIdeal) return false;
    }
    return true;
}

ADRL assembleADRL(std::vector<DualComponent> components) {
    if (components.empty()) throw InvalidInputError("no dual components to assemble");
    ADRL out;
    std::vector<SlicePoints> ini, ter;
    for (const DualComponent& dc : components) {
        ini.push_back(dc.initial);
        ter.push_back(dc.terminal);
    }
    out.initial = mergeSlicePoints(ini);
    out.terminal = mergeSlicePoints(ter);

    VarSet affine{Var::u, Var::v, Var::kd, Var::kn};
    for (const DualComponent& dc : components) {
        const Polynomial& src =
            dc.dualCurve ? *dc.dualCurve : dc.dualIdeal.generators().front();
        out.affinePieces.push_back(src.dehomogenize(Var::w).restrictTo(affine));
    }
    out.components = std::move(components);
    return out;
}

}  // namespace rlalg
