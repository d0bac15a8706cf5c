// End-to-end acceptance checks for the decomposition and dual-curve pipeline.
// Standalone runner, one PASS/FAIL line per criterion with its elapsed time;
// exits nonzero when anything fails. The fixtures are the hand-checked
// (s+1)/s^2 and (s+1)/(s^2(s+4)) loci and their duals.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rlalg/dual.hpp"
#include "rlalg/groebner.hpp"
#include "rlalg/numeric.hpp"
#include "rlalg/rootlocus.hpp"
#include "rlalg/univariate.hpp"

using namespace rlalg;

namespace {

const VarSet A = rings::affine();
const VarSet P = rings::proj();
const VarSet D = rings::dual();

Polynomial pa(const std::string& s) { return parsePolynomial(s, A); }
Polynomial pp(const std::string& s) { return parsePolynomial(s, P); }
Polynomial pd(const std::string& s) { return parsePolynomial(s, D); }

std::vector<Rat> rr(std::initializer_list<long> nums) {
    std::vector<Rat> out;
    for (long v : nums) out.push_back(Rat(v));
    return out;
}

TransferFunction doubleIntegratorLead() {  // (s+1)/s^2
    return makeTransferFunction(rr({1, 1}), rr({1, 0, 0}));
}

TransferFunction tripleWithLead() {  // (s+1)/(s^2(s+4))
    return makeTransferFunction(rr({1, 1}), rr({1, 4, 0, 0}));
}

struct Outcome {
    bool ok = true;
    std::string note;
};

#define NEED(cond, msg)                        \
    do {                                       \
        if (!(cond)) return Outcome{false, msg}; \
    } while (0)

// The known reduced basis of the (s+1)/s^2 split pair, ascending.
const std::vector<std::string> kLeadBasis = {
    "2*x*y*kd + y*kn",
    "x^2*kd - y^2*kd + x*kn + kn",
    "x^2*y*kn + y^3*kn + 2*x*y*kn",
    "2*y^3*kd - x*y*kn - 2*y*kn",
};

Ideal leadClosure() {  // homogenization of that basis over the projective ring
    std::vector<Polynomial> gens;
    for (const std::string& g : kLeadBasis) gens.push_back(pa(g).embedInto(P).homogenize(Var::z));
    return Ideal(P, std::move(gens));
}

Ideal leadLineIdeal() { return Ideal(P, {pp("y"), pp("x^2*kd + x*z*kn + z^2*kn")}); }
Ideal leadCircleIdeal() { return Ideal(P, {pp("x^2 + y^2 + 2*x*z"), pp("2*x*kd + z*kn")}); }
Ideal gainPairIdeal() { return Ideal(P, {pp("kd"), pp("kn")}); }

bool exactPoint(const LocusPoint& p, long cx, long cy, long cz) {
    return p.exact && p.coords[0] == Rat(cx) && p.coords[1] == Rat(cy) && p.coords[2] == Rat(cz);
}

// Every ideal in `got` matches a distinct entry of `want`.
bool coverIdeals(const std::vector<Ideal>& got, std::vector<Ideal> want, const MonomialOrder& ord) {
    if (got.size() != want.size()) return false;
    for (const Ideal& g : got) {
        auto hit = std::find_if(want.begin(), want.end(),
                                [&](const Ideal& w) { return idealEqual(g, w, ord); });
        if (hit == want.end()) return false;
        want.erase(hit);
    }
    return true;
}

// |p(at)| relative to the largest term magnitude, floored at one.
double scaledResidual(const Polynomial& p, const std::map<Var, double>& at) {
    double value = 0.0, scale = 1.0;
    for (const auto& t : p.terms()) {
        double m = toDouble(t.coef);
        for (int i = 0; i < p.vars().size(); ++i) {
            std::uint16_t e = t.mono.e[static_cast<std::size_t>(i)];
            if (e) m *= std::pow(at.at(p.vars().at(i)), static_cast<double>(e));
        }
        value += m;
        scale = std::max(scale, std::abs(m));
    }
    return std::abs(value) / scale;
}

std::string fmtf(const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    return buf;
}

Outcome groebnerFixture() {
    Ideal I(A, {pa("x^2*kd - y^2*kd + x*kn + kn"), pa("2*x*y*kd + y*kn")});
    GroebnerBasis gb = buchberger(I, MonomialOrder::grevlex());
    NEED(gb.elements.size() == kLeadBasis.size(),
         fmtf("expected 4 basis elements, got %zu", gb.elements.size()));
    for (std::size_t i = 0; i < kLeadBasis.size(); ++i)
        NEED(gb.elements[i] == pa(kLeadBasis[i]),
             "basis element " + std::to_string(i + 1) + " is " +
                 formatPolynomial(gb.elements[i]) + ", expected " + kLeadBasis[i]);
    return {true, "all four elements coefficient-exact"};
}

Outcome leadDecomposition() {
    MonomialOrder ord = MonomialOrder::grevlex();
    ComponentSet cs = minimalComponents(leadClosure(), ord);
    NEED(cs.components.size() == 3, fmtf("expected 3 raw components, got %zu", cs.components.size()));
    int trivial = 0;
    for (const Component& c : cs.components)
        if (c.parameterTrivial) {
            ++trivial;
            NEED(idealEqual(c.ideal, gainPairIdeal(), ord),
                 "gain-trivial component is not <kd, kn>");
        }
    NEED(trivial == 1, fmtf("expected one gain-trivial component, got %d", trivial));

    ComponentSet curves = filterParameterTrivial(cs);
    std::vector<Ideal> got;
    for (const Component& c : curves.components) got.push_back(c.ideal);
    NEED(coverIdeals(got, {leadLineIdeal(), leadCircleIdeal()}, ord),
         "surviving components are not the line and the circle");
    return {true, "line + circle recovered, <kd, kn> detected and removed"};
}

Outcome cubicDecomposition() {
    MonomialOrder ord = MonomialOrder::grevlex();
    RootLocusDecomposition d = decomposeRootLocus(tripleWithLead());
    NEED(d.components.size() == 2, fmtf("expected 2 components, got %zu", d.components.size()));
    Ideal J1(P, {pp("y"), pp("x^3*kd + 4*x^2*z*kd + x*z^2*kn + z^3*kn")});
    Ideal J2(P, {pp("2*x^3 + 2*x*y^2 + 7*x^2*z + 3*y^2*z + 8*x*z^2"),
                 pp("3*x^2*kd - y^2*kd + 8*x*z*kd + z^2*kn")});
    NEED(idealEqual(d.components[0].ideal, J1, ord), "real-axis component mismatch");
    NEED(idealEqual(d.components[1].ideal, J2, ord), "cubic component mismatch");
    NEED(d.components[1].curvePoly &&
             *d.components[1].curvePoly == pp("2*x^3 + 2*x*y^2 + 7*x^2*z + 3*y^2*z + 8*x*z^2"),
         "cubic curve polynomial mismatch");

    ComponentSet cs = minimalComponents(d.closure, ord);
    bool sawGainPair = false;
    for (const Component& c : cs.components)
        if (c.parameterTrivial && idealEqual(c.ideal, gainPairIdeal(), ord)) sawGainPair = true;
    NEED(sawGainPair, "<kd, kn> not detected in the raw decomposition");
    return {true, "line + cubic exact, <kd, kn> detected and removed"};
}

Outcome intersectionIdentity() {
    MonomialOrder ord = MonomialOrder::grevlex();
    Ideal meet = intersectIdeals(leadLineIdeal(), intersectIdeals(leadCircleIdeal(), gainPairIdeal()));
    NEED(idealEqual(meet, leadClosure(), ord), "triple intersection differs from the closure");
    return {true, "intersection of line, circle and <kd, kn> equals the closure ideal"};
}

Outcome slicePointFixture() {
    RootLocusDecomposition d = decomposeRootLocus(doubleIntegratorLead());
    NEED(d.components.size() == 2, "decomposition shape changed");
    const RLComponent& line = d.components[0];
    const RLComponent& circle = d.components[1];

    std::vector<MergedPoint> initial = mergeSlicePoints({line.initial, circle.initial});
    NEED(initial.size() == 1 && initial[0].occurrences == 2 && exactPoint(initial[0].point, 0, 0, 1),
         "initial slice is not the doubled origin");

    NEED(line.terminal.finite && line.terminal.points.size() == 2 &&
             exactPoint(line.terminal.points[0], -1, 0, 1) &&
             exactPoint(line.terminal.points[1], 1, 0, 0),
         "line terminal points are not (-1:0:1), (1:0:0)");
    NEED(circle.terminal.finite && circle.terminal.points.empty(),
         "circle terminal slice should be empty");
    return {true, "(0:0:1) twice at zero gain; (-1:0:1), (1:0:0) at infinite gain; circle empty"};
}

Outcome dualFixtures() {
    MonomialOrder ord = MonomialOrder::grevlex();
    RootLocusDecomposition d = decomposeRootLocus(doubleIntegratorLead());
    DualComponent lineDual = dualizeComponent(d.components[0]);
    DualComponent circleDual = dualizeComponent(d.components[1]);

    NEED(lineDual.dualCurve && *lineDual.dualCurve == pd("v"), "line dual curve is not v");
    NEED(lineDual.dualParam && *lineDual.dualParam == pd("kd*w^2 + kn*u^2 - kn*u*w"),
         "line dual gain relation mismatch");
    NEED(circleDual.dualCurve && *circleDual.dualCurve == pd("v^2 + 2*u*w - w^2"),
         "circle dual curve mismatch");
    NEED(circleDual.dualParam && *circleDual.dualParam == pd("kn*u + 2*kd*w - kn*w"),
         "circle dual gain relation mismatch");

    NEED(idealEqual(lineDual.dualIdeal, Ideal(D, {pd("v"), pd("kd*w^2 + kn*u^2 - kn*u*w")}), ord),
         "line dual ideal mismatch");
    NEED(idealEqual(circleDual.dualIdeal,
                    Ideal(D, {pd("v^2 + 2*u*w - w^2"), pd("kn*u + 2*kd*w - kn*w")}), ord),
         "circle dual ideal mismatch");
    return {true, "both dual ideals and all three generators coefficient-exact"};
}

Outcome sexticDual() {
    Polynomial curve = pp("2*x^3 + 2*x*y^2 + 7*x^2*z + 3*y^2*z + 8*x*z^2");
    Polynomial param = pp("3*x^2*kd - y^2*kd + 8*x*z*kd + z^2*kn");

    Polynomial sextic = dualCurve(curve);
    NEED(sextic ==
             pd("144*u^4*v^2 - 352*u^2*v^4 - 240*v^6 + 216*u^5*w - 912*u^3*v^2*w - 232*u*v^4*w"
                " - 621*u^4*w^2 + 718*u^2*v^2*w^2 + 107*v^4*w^2 + 720*u^3*w^3 - 176*u*v^2*w^3"
                " - 424*u^2*w^4 - 8*v^2*w^4 + 128*u*w^5 - 16*w^6"),
         "sextic dual of the cubic mismatch");

    Polynomial relation = dualParametrization(param, curve);
    NEED(relation ==
             pd("294912*kd^4*u^3*w - 327680*kd^4*u^2*v^2 - 798720*kd^4*u^2*w^2"
                " + 1671168*kd^4*u*v^2*w + 512000*kd^4*u*w^3 - 1048576*kd^4*v^4"
                " - 675840*kd^4*v^2*w^2 - 96000*kd^4*w^4 + 73728*kd^3*kn*u^4"
                " - 448512*kd^3*kn*u^3*w + 430080*kd^3*kn*u^2*v^2 + 706304*kd^3*kn*u^2*w^2"
                " - 788480*kd^3*kn*u*v^2*w - 403200*kd^3*kn*u*w^3 + 131072*kd^3*kn*v^4"
                " + 300288*kd^3*kn*v^2*w^2 + 75600*kd^3*kn*w^4 - 46656*kd^2*kn^2*u^4"
                " + 174816*kd^2*kn^2*u^3*w - 68928*kd^2*kn^2*u^2*v^2 - 224292*kd^2*kn^2*u^2*w^2"
                " + 109920*kd^2*kn^2*u*v^2*w + 119040*kd^2*kn^2*u*w^3 - 6144*kd^2*kn^2*v^4"
                " - 41364*kd^2*kn^2*v^2*w^2 - 22320*kd^2*kn^2*w^4 + 8208*kd*kn^3*u^4"
                " - 26172*kd*kn^3*u^3*w + 3088*kd*kn^3*u^2*v^2 + 30636*kd*kn^3*u^2*w^2"
                " - 4764*kd*kn^3*u*v^2*w - 15616*kd*kn^3*u*w^3 + 128*kd*kn^3*v^4"
                " + 1788*kd*kn^3*v^2*w^2 + 2928*kd*kn^3*w^4 - 441*kn^4*u^4 + 1344*kn^4*u^3*w"
                " - 42*kn^4*u^2*v^2 - 1528*kn^4*u^2*w^2 + 64*kn^4*u*v^2*w + 768*kn^4*u*w^3"
                " - kn^4*v^4 - 24*kn^4*v^2*w^2 - 144*kn^4*w^4"),
         "quartic gain relation of the sextic mismatch");
    return {true, "15-term sextic and 44-term quartic gain relation coefficient-exact"};
}

Outcome bidualIdentity() {
    MonomialOrder ord = MonomialOrder::grevlex();
    RootLocusDecomposition d = decomposeRootLocus(doubleIntegratorLead());
    for (const RLComponent& c : d.components) {
        DualComponent dc = dualizeComponent(c);
        NEED(idealEqual(bidual(dc), c.ideal, ord),
             "bidual does not return the source component");
    }
    return {true, "both dual ideals eliminate back to their sources"};
}

Outcome degreeLaw() {
    std::vector<Var> uvw{Var::u, Var::v, Var::w};

    Polynomial circle = pp("x^2 + y^2 + 2*x*z");
    NEED(smoothnessCertified(circle), "circle smoothness certificate missing");
    NEED(dualCurve(circle).degreeIn(uvw) == 2, "circle dual degree is not 2(2-1)");

    Polynomial gainConic = pp("x^2*kd + x*z*kn + z^2*kn");
    NEED(dualCurve(gainConic).degreeIn(uvw) == 2, "gain conic dual degree is not 2(2-1)");

    Polynomial cubic = pp("2*x^3 + 2*x*y^2 + 7*x^2*z + 3*y^2*z + 8*x*z^2");
    NEED(smoothnessCertified(cubic), "cubic smoothness certificate missing");
    NEED(dualCurve(cubic).degreeIn(uvw) == 6, "cubic dual degree is not 3(3-1)");

    // the law needs smoothness: the nodal cubic is skipped, and in fact its
    // dual has lower degree
    Polynomial nodal = pp("x^3 + x^2*z - y^2*z");
    NEED(!smoothnessCertified(nodal), "nodal cubic unexpectedly certified smooth");
    int nodalDual = dualCurve(nodal).degreeIn(uvw);
    NEED(nodalDual < 6, "nodal cubic dual degree should fall below d(d-1)");
    return {true, fmtf("degrees 2, 2, 6 = d(d-1); nodal cubic skipped, not certified smooth"
                       " (its dual has degree %d, not 6)",
                       nodalDual)};
}

Outcome numericOracle() {
    const double tol = 1e-8, poleTol = 1e-10;
    int rootsChecked = 0;
    double worst = 0.0;

    auto checkOne = [&](const TransferFunction& tf) -> Outcome {
        RootLocusDecomposition d = decomposeRootLocus(tf);
        std::vector<std::vector<Polynomial>> inter;
        for (const RLComponent& c : d.components) inter.push_back(intermediateDescription(c));
        auto unionResidual = [&](double x, double y, double gain) {
            std::map<Var, double> at{{Var::x, x}, {Var::y, y}, {Var::l, gain}};
            double best = std::numeric_limits<double>::infinity();
            for (const auto& gens : inter) {
                double bad = 0.0;
                for (const Polynomial& g : gens) bad = std::max(bad, scaledResidual(g, at));
                best = std::min(best, bad);
            }
            return best;
        };

        std::vector<double> gains;
        for (int j = 0; j < 100; ++j) gains.push_back(-10.0 + 20.0 * j / 99.0);
        gains.push_back(-1000.0);
        gains.push_back(1000.0);
        auto paths = sampleRootLocus(tf, gains);
        for (std::size_t i = 0; i < gains.size(); ++i)
            for (const auto& z : paths[i]) {
                double r = unionResidual(z.real(), z.imag(), gains[i]);
                worst = std::max(worst, r);
                ++rootsChecked;
                NEED(r <= tol, fmtf("root (%.6g, %.6g) at gain %.6g misses every component"
                                    " (residual %.3g)",
                                    z.real(), z.imag(), gains[i], r));
            }

        auto atZero = sampleRootLocus(tf, {0.0})[0];
        auto poles = univariateRoots(univariateCoeffs(tf.den, Var::s));
        NEED(atZero.size() == poles.size(), "zero-gain sample count differs from the pole count");
        std::vector<bool> used(poles.size(), false);
        for (const auto& z : atZero) {
            bool hit = false;
            for (std::size_t k = 0; k < poles.size(); ++k)
                if (!used[k] && std::abs(z - poles[k]) <= poleTol) {
                    used[k] = true;
                    hit = true;
                    break;
                }
            NEED(hit, fmtf("zero-gain root (%.6g, %.6g) is not an open-loop pole",
                           z.real(), z.imag()));
        }
        return {};
    };

    std::vector<TransferFunction> tfs{doubleIntegratorLead(), tripleWithLead()};
    std::mt19937 rng(74123);
    std::uniform_int_distribution<int> denDeg(1, 4), coef(-5, 5);
    while (tfs.size() < 12) {
        int dd = denDeg(rng);
        int nd = std::uniform_int_distribution<int>(0, dd - 1)(rng);
        std::vector<Rat> den{Rat(1)}, num;
        for (int i = 0; i < dd; ++i) den.push_back(Rat(coef(rng)));
        int lead = 0;
        while (lead == 0) lead = coef(rng);
        num.push_back(Rat(lead));
        for (int i = 0; i < nd; ++i) num.push_back(Rat(coef(rng)));
        try {
            tfs.push_back(makeTransferFunction(num, den));
        } catch (const InvalidInputError&) {  // shared factor, redraw
        }
    }
    for (const TransferFunction& tf : tfs) {
        Outcome o = checkOne(tf);
        if (!o.ok) return o;
    }
    return {true, fmtf("%d sampled roots over 12 loci, worst residual %.2g", rootsChecked, worst)};
}

Outcome propertySuites() {
    MonomialOrder ord = MonomialOrder::grevlex();
    std::mt19937 rng(416923);

    struct Fixture {
        VarSet ring;
        std::vector<std::string> gens;
    };
    std::vector<Fixture> fixtures = {
        {A, {"x^2*kd - y^2*kd + x*kn + kn", "2*x*y*kd + y*kn"}},
        {A,
         {"x^3*kd - 3*x*y^2*kd + 4*x^2*kd - 4*y^2*kd + x*kn + kn",
          "3*x^2*y*kd - y^3*kd + 8*x*y*kd + y*kn"}},
        {P, {"2*x*kd + z*kn", "x^2 + y^2 + 2*x*z", "2*y^2*kd - x*z*kn - 2*z^2*kn"}},
        {D, {"v^2 + 2*u*w - w^2", "kn*u + 2*kd*w - kn*w"}},
    };
    for (const Fixture& f : fixtures) {
        std::vector<Polynomial> gens;
        for (const std::string& g : f.gens) gens.push_back(parsePolynomial(g, f.ring));
        GroebnerBasis base = buchberger(Ideal(f.ring, gens), ord);
        for (int shuffle = 0; shuffle < 20; ++shuffle) {
            std::vector<Polynomial> mixed = gens;
            std::shuffle(mixed.begin(), mixed.end(), rng);
            GroebnerBasis again = buchberger(Ideal(f.ring, std::move(mixed)), ord);
            NEED(again.elements == base.elements,
                 "reduced basis changed under a generator shuffle");
        }
    }

    VarSet XYZ{Var::x, Var::y, Var::z};
    Polynomial X = Polynomial::variable(XYZ, Var::x);
    Polynomial Y = Polynomial::variable(XYZ, Var::y);
    Polynomial Z = Polynomial::variable(XYZ, Var::z);
    std::uniform_int_distribution<int> coef(-9, 9), termCount(1, 6);

    auto randomTerm = [&](int degX, int degY, int degZ) {
        Monomial m = mul(mul(Monomial::var(0, static_cast<std::uint16_t>(degX)),
                             Monomial::var(1, static_cast<std::uint16_t>(degY))),
                         Monomial::var(2, static_cast<std::uint16_t>(degZ)));
        int c = coef(rng);
        return Term{m, Rat(c ? c : 1)};
    };

    for (int trial = 0; trial < 100; ++trial) {
        Polynomial f;
        int d = 0;
        while (f.isZero()) {
            d = std::uniform_int_distribution<int>(1, 6)(rng);
            std::vector<Term> terms;
            for (int t = termCount(rng); t > 0; --t) {
                int a = std::uniform_int_distribution<int>(0, d)(rng);
                int b = std::uniform_int_distribution<int>(0, d - a)(rng);
                terms.push_back(randomTerm(a, b, d - a - b));
            }
            f = Polynomial::fromTerms(XYZ, std::move(terms));
        }
        Polynomial euler = X * f.partialDerivative(Var::x) + Y * f.partialDerivative(Var::y) +
                           Z * f.partialDerivative(Var::z);
        NEED(euler == f * Rat(d), "Euler identity failed on a random homogeneous polynomial");
    }

    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p;
        while (p.isZero()) {
            std::vector<Term> terms;
            for (int t = termCount(rng); t > 0; --t)
                terms.push_back(randomTerm(std::uniform_int_distribution<int>(0, 4)(rng),
                                           std::uniform_int_distribution<int>(0, 4)(rng), 0));
            p = Polynomial::fromTerms(XYZ, std::move(terms));
        }
        NEED(p.homogenize(Var::z).dehomogenize(Var::z) == p,
             "homogenize/dehomogenize round trip failed");
    }
    return {true, "80 basis shuffles, 100 Euler checks, 100 round trips, zero failures"};
}

struct Criterion {
    const char* name;
    double budgetSec;  // 0: no stated budget
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"reduced basis of the (s+1)/s^2 split pair", 1, groebnerFixture},
        {"(s+1)/s^2 closure splits into line + circle", 5, leadDecomposition},
        {"(s+1)/(s^2(s+4)) closure splits into line + cubic", 30, cubicDecomposition},
        {"closure equals the intersection of its three pieces", 30, intersectionIdentity},
        {"zero- and infinite-gain slice points of (s+1)/s^2", 0, slicePointFixture},
        {"dual ideals of the (s+1)/s^2 components", 10, dualFixtures},
        {"sextic dual of the cubic with its quartic gain relation", 300, sexticDual},
        {"biduals return the (s+1)/s^2 components", 0, bidualIdentity},
        {"dual degree law d(d-1) with explicit singular skip", 0, degreeLaw},
        {"sampled closed-loop roots land on the decomposition", 10, numericOracle},
        {"basis uniqueness, Euler identity, homogenization round trip", 0, propertySuites},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("unhandled exception: ") + e.what()};
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool within = c.budgetSec <= 0 || sec < c.budgetSec;
        bool pass = o.ok && within;
        failed += pass ? 0 : 1;

        std::string budget = c.budgetSec > 0 ? fmtf(" (budget %g s)", c.budgetSec) : "";
        std::string note = o.note;
        if (o.ok && !within) note = fmtf("over budget: %.2f s", sec);
        std::printf("%s %2zu  %s -- %s  [%.3f s%s]\n", pass ? "PASS" : "FAIL", i + 1, c.name,
                    note.c_str(), sec, budget.c_str());
    }

    if (failed == 0) {
        std::printf("all 11 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d of 11 acceptance criteria FAILED\n", failed);
    return 1;
}
