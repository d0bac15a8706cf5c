#include "rlalg/rootlocus.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "rlalg/error.hpp"
#include "rlalg/groebner.hpp"
#include "rlalg/numeric.hpp"
#include "rlalg/univariate.hpp"

namespace rlalg {

namespace {

constexpr double kMatchTol = 1e-7;
constexpr double kResidualTol = 1e-8;
constexpr double kImagTol = 1e-9;

}  // namespace

Polynomial buildPencil(const TransferFunction& tf) {
    VarSet ring = rings::pencil();
    Polynomial kd = Polynomial::variable(ring, Var::kd);
    Polynomial kn = Polynomial::variable(ring, Var::kn);
    return kd * tf.den.embedInto(ring) + kn * tf.num.embedInto(ring);
}

PencilSplit complexSplit(const Polynomial& pencil) {
    if (pencil.vars() != rings::pencil())
        throw InvalidInputError("complexSplit expects a polynomial over " + rings::pencil().str());
    VarSet ring = rings::affine();
    Polynomial x = Polynomial::variable(ring, Var::x);
    Polynomial y = Polynomial::variable(ring, Var::y);

    // re[j] + i*im[j] = (x + i*y)^j
    int dmax = std::max(pencil.degreeIn(Var::s), 0);
    std::vector<Polynomial> re{Polynomial::constant(ring, Rat(1))};
    std::vector<Polynomial> im{Polynomial::zero(ring)};
    for (int j = 0; j < dmax; ++j) {
        re.push_back(x * re[j] - y * im[j]);
        im.push_back(x * im[j] + y * re[j]);
    }

    PencilSplit out{Polynomial::zero(ring), Polynomial::zero(ring)};
    int spos = pencil.vars().indexOf(Var::s);
    int kdpos = pencil.vars().indexOf(Var::kd);
    int knpos = pencil.vars().indexOf(Var::kn);
    for (const Term& t : pencil.terms()) {
        int j = t.mono.e[static_cast<std::size_t>(spos)];
        Monomial gains;
        gains.e[static_cast<std::size_t>(ring.indexOf(Var::kd))] =
            t.mono.e[static_cast<std::size_t>(kdpos)];
        gains.e[static_cast<std::size_t>(ring.indexOf(Var::kn))] =
            t.mono.e[static_cast<std::size_t>(knpos)];
        gains.deg = t.mono.deg - j;
        Polynomial factor = Polynomial::fromTerms(ring, {Term{gains, t.coef}});
        out.re = out.re + factor * re[static_cast<std::size_t>(j)];
        out.im = out.im + factor * im[static_cast<std::size_t>(j)];
    }
    return out;
}

namespace {

LocusPoint affineExact(const Rat& px, const Rat& py, int mult) {
    LocusPoint p;
    p.coords = {px, py, Rat(1)};
    p.approx = {px.get_d(), py.get_d(), 1.0};
    p.exact = true;
    p.multiplicity = mult;
    return p;
}

// z = 1 chart of the slice. Appends points; clears finite when the slice has
// a curve in the chart.
void affinePoints(const std::vector<Polynomial>& gens, SlicePoints& out) {
    if (gens.empty()) {
        out.finite = false;
        return;
    }
    VarSet xy{Var::x, Var::y};
    MonomialOrder ord = MonomialOrder::grevlex();
    GroebnerBasis gb = buchberger(Ideal(xy, gens), ord);
    if (gb.isUnit()) return;  // nothing in this chart

    Ideal ex = eliminate(gb.asIdeal(), {Var::y});
    Ideal ey = eliminate(gb.asIdeal(), {Var::x});
    if (ex.isZero() || ey.isZero()) {
        out.finite = false;
        return;
    }
    std::vector<Rat> ux = univariateCoeffs(ex.generators()[0], Var::x);
    std::vector<Rat> uy = univariateCoeffs(ey.generators()[0], Var::y);
    RootExtraction rx = extractRationalRoots(ux);
    RootExtraction ry = extractRationalRoots(uy);

    std::vector<LocusPoint> exact;
    for (const auto& [xv, mx] : rx.roots) {
        for (const auto& [yv, my] : ry.roots) {
            bool onAll = true;
            for (const Polynomial& g : gb.elements)
                if (g.evaluate({{Var::x, xv}, {Var::y, yv}}) != 0) {
                    onAll = false;
                    break;
                }
            if (onAll) exact.push_back(affineExact(xv, yv, std::min(mx, my)));
        }
    }
    out.points.insert(out.points.end(), exact.begin(), exact.end());

    bool allRational = rx.complete && ry.complete && rx.cofactor.size() <= 1 && ry.cofactor.size() <= 1;
    if (allRational) return;

    // Irrational (or unresolved) coordinates: pair every real root of the two
    // elimination polynomials numerically and keep residual-verified pairs.
    std::vector<double> xs, ys;
    for (const auto& r : univariateRoots(ux))
        if (std::abs(r.imag()) <= kImagTol * (1.0 + std::abs(r.real()))) xs.push_back(r.real());
    for (const auto& r : univariateRoots(uy))
        if (std::abs(r.imag()) <= kImagTol * (1.0 + std::abs(r.real()))) ys.push_back(r.real());
    std::vector<LocusPoint> approx;
    for (double xv : xs) {
        for (double yv : ys) {
            bool matchesExact = false;
            for (const LocusPoint& p : exact)
                if (std::abs(p.approx[0] - xv) <= kMatchTol && std::abs(p.approx[1] - yv) <= kMatchTol) {
                    matchesExact = true;
                    break;
                }
            if (matchesExact) continue;
            bool onAll = true;
            for (const Polynomial& g : gb.elements)
                if (planeResidual(g, xv, yv) > kResidualTol) {
                    onAll = false;
                    break;
                }
            if (!onAll) continue;
            LocusPoint p;
            p.approx = {xv, yv, 1.0};
            p.exact = false;
            approx.push_back(p);
        }
    }
    std::sort(approx.begin(), approx.end(), [](const LocusPoint& a, const LocusPoint& b) {
        return std::pair(a.approx[0], a.approx[1]) < std::pair(b.approx[0], b.approx[1]);
    });
    out.points.insert(out.points.end(), approx.begin(), approx.end());
}

// z = 0 line of the slice: binary forms in x, y.
void infinityPoints(const std::vector<Polynomial>& forms, SlicePoints& out) {
    if (forms.empty()) {
        out.finite = false;
        return;
    }

    // points (x0 : 1 : 0) are the common roots of the forms at y = 1
    std::vector<Rat> gcd;
    bool first = true;
    for (const Polynomial& f : forms) {
        std::vector<Rat> c = univariateCoeffs(f.dehomogenize(Var::y), Var::x);
        gcd = first ? c : univariateGcd(gcd, c);
        first = false;
        if (gcd.size() == 1) break;
    }
    if (gcd.size() > 1) {
        RootExtraction rr = extractRationalRoots(gcd);
        for (const auto& [xv, m] : rr.roots) {
            LocusPoint p;
            p.coords = {xv, Rat(1), Rat(0)};
            p.approx = {xv.get_d(), 1.0, 0.0};
            p.exact = true;
            p.multiplicity = m;
            out.points.push_back(p);
        }
        if (rr.cofactor.size() > 1 || !rr.complete) {
            std::vector<Rat> rest = rr.complete ? rr.cofactor : gcd;
            for (const auto& r : univariateRoots(rest)) {
                if (std::abs(r.imag()) > kImagTol * (1.0 + std::abs(r.real()))) continue;
                bool matchesExact = false;
                for (const auto& [xv, m] : rr.roots)
                    if (std::abs(xv.get_d() - r.real()) <= kMatchTol) matchesExact = true;
                if (matchesExact) continue;
                LocusPoint p;
                p.approx = {r.real(), 1.0, 0.0};
                p.exact = false;
                out.points.push_back(p);
            }
        }
    }

    // the remaining candidate (1 : 0 : 0)
    int mult = INT_MAX;
    bool vanishes = true;
    for (const Polynomial& f : forms) {
        if (f.evaluate({{Var::x, Rat(1)}, {Var::y, Rat(0)}}) != 0) {
            vanishes = false;
            break;
        }
        int ypos = f.vars().indexOf(Var::y);
        int minY = INT_MAX;
        for (const Term& t : f.terms()) minY = std::min(minY, int(t.mono.e[static_cast<std::size_t>(ypos)]));
        mult = std::min(mult, minY);
    }
    if (vanishes) {
        LocusPoint p;
        p.coords = {Rat(1), Rat(0), Rat(0)};
        p.approx = {1.0, 0.0, 0.0};
        p.exact = true;
        p.multiplicity = std::max(mult, 1);
        out.points.push_back(p);
    }
}

}  // namespace

SlicePoints classifyComponentPoints(const Ideal& component, const Rat& kdVal, const Rat& knVal) {
    VarSet xy{Var::x, Var::y};
    std::vector<Polynomial> chart, forms;
    for (const Polynomial& g : component.generators()) {
        Polynomial h = g.substitute(Var::kd, kdVal).substitute(Var::kn, knVal);
        if (h.isZero()) continue;
        Polynomial a = h.dehomogenize(Var::z).restrictTo(xy);
        if (!a.isZero()) chart.push_back(a);
        Polynomial b = h.substitute(Var::z, Rat(0)).restrictTo(xy);
        if (!b.isZero()) forms.push_back(b);
    }

    SlicePoints out;
    affinePoints(chart, out);
    if (out.finite) infinityPoints(forms, out);
    if (!out.finite) out.points.clear();

    std::stable_sort(out.points.begin(), out.points.end(), [](const LocusPoint& a, const LocusPoint& b) {
        auto key = [](const LocusPoint& p) {
            return std::tuple(p.approx[2] == 0.0, !p.exact, p.approx[0], p.approx[1]);
        };
        return key(a) < key(b);
    });
    return out;
}

namespace {

int curveDegree(const RLComponent& c) {
    if (c.curvePoly) return c.curvePoly->totalDegree();
    int d = 0;
    for (const Polynomial& g : c.ideal.generators())
        d = std::max(d, g.degreeIn({Var::x, Var::y, Var::z}));
    return d;
}

std::string generatorText(const RLComponent& c) {
    std::string s;
    for (const Polynomial& g : c.ideal.generators()) {
        s += formatPolynomial(g);
        s += ';';
    }
    return s;
}

}  // namespace

RootLocusDecomposition decomposeRootLocus(const TransferFunction& tf) {
    RootLocusDecomposition out{tf, buildPencil(tf), {}, {}, {}};
    out.split = complexSplit(out.pencil);

    MonomialOrder ord = MonomialOrder::grevlex();
    GroebnerBasis gb = buchberger(Ideal(rings::affine(), {out.split.re, out.split.im}), ord);
    std::vector<Polynomial> hg;
    for (const Polynomial& e : gb.elements)
        hg.push_back(e.embedInto(rings::proj()).homogenize(Var::z));
    out.closure = Ideal(rings::proj(), std::move(hg));

    ComponentSet comps = filterParameterTrivial(minimalComponents(out.closure, ord));
    for (const Component& c : comps.components) {
        RLComponent rc;
        rc.ideal = c.ideal;
        rc.primeCertified = c.primeCertified;
        for (const Polynomial& g : c.ideal.generators()) {
            bool gains = g.mentions(Var::kd) || g.mentions(Var::kn);
            if (!gains && !rc.curvePoly) rc.curvePoly = g;
            if (gains && !rc.paramPoly) rc.paramPoly = g;
        }
        rc.initial = classifyComponentPoints(c.ideal, Rat(1), Rat(0));
        rc.terminal = classifyComponentPoints(c.ideal, Rat(0), Rat(1));
        out.components.push_back(std::move(rc));
    }
    std::sort(out.components.begin(), out.components.end(),
              [](const RLComponent& a, const RLComponent& b) {
                  int da = curveDegree(a), db = curveDegree(b);
                  if (da != db) return da < db;
                  return generatorText(a) < generatorText(b);
              });
    return out;
}

std::vector<MergedPoint> mergeSlicePoints(const std::vector<SlicePoints>& slices) {
    std::vector<MergedPoint> out;
    for (const SlicePoints& s : slices) {
        if (!s.finite) continue;
        for (const LocusPoint& p : s.points) {
            MergedPoint* hit = nullptr;
            for (MergedPoint& m : out) {
                if (m.point.exact && p.exact) {
                    if (m.point.coords == p.coords) hit = &m;
                } else {
                    bool close = true;
                    for (int k = 0; k < 3; ++k)
                        if (std::abs(m.point.approx[k] - p.approx[k]) > kMatchTol) close = false;
                    if (close) hit = &m;
                }
                if (hit) break;
            }
            if (!hit) {
                out.push_back({p, 1});
            } else {
                ++hit->occurrences;
                if (p.exact && !hit->point.exact) hit->point = p;
            }
        }
    }
    return out;
}

std::vector<Polynomial> intermediateDescription(const RLComponent& c) {
    VarSet big{Var::x, Var::y, Var::z, Var::kd, Var::kn, Var::l};
    VarSet small{Var::x, Var::y, Var::l};
    Polynomial lam = Polynomial::variable(big, Var::l);
    std::vector<Polynomial> out;
    for (const Polynomial& g : c.ideal.generators()) {
        Polynomial h = g.embedInto(big)
                           .substitute(Var::kd, Rat(1))
                           .substitute(Var::kn, lam)
                           .substitute(Var::z, Rat(1));
        if (!h.isZero()) out.push_back(h.restrictTo(small));
    }
    return out;
}

}  // namespace rlalg
