#include <random>
#include <map>
#include <vector>

#include "doctest.h"
#include "rlalg/dual.hpp"
#include "rlalg/groebner.hpp"

using namespace rlalg;

namespace {

const VarSet P = rings::proj();
const VarSet D = rings::dual();
const VarSet IN = rings::incidence();

Polynomial pp(const std::string& s) { return parsePolynomial(s, P); }
Polynomial pd(const std::string& s) { return parsePolynomial(s, D); }

RootLocusDecomposition exampleOne() {  // (s+1)/s^2
    return decomposeRootLocus(makeTransferFunction({Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(0)}));
}

}  // namespace

TEST_CASE("incidence ideal of the circle") {
    Ideal I = incidenceIdeal(pp("x^2 + y^2 + 2*x*z"));
    REQUIRE(I.generators().size() == 4);
    CHECK(I.generators()[0] == parsePolynomial("x^2 + y^2 + 2*x*z", IN));
    CHECK(I.generators()[1] == parsePolynomial("u - 2*l*x - 2*l*z", IN));
    CHECK(I.generators()[2] == parsePolynomial("v - 2*l*y", IN));
    CHECK(I.generators()[3] == parsePolynomial("w - 2*l*x", IN));
}

TEST_CASE("incidence ideal keeps gain coefficients") {
    Ideal I = incidenceIdeal(pp("x^2*kd + x*z*kn + z^2*kn"));
    REQUIRE(I.generators().size() == 4);
    CHECK(I.generators()[1] == parsePolynomial("u - 2*l*x*kd - l*z*kn", IN));
    CHECK(I.generators()[2] == parsePolynomial("v", IN));
    CHECK(I.generators()[3] == parsePolynomial("w - l*x*kn - 2*l*z*kn", IN));
}

TEST_CASE("incidence ideal rejects bad input") {
    CHECK_THROWS_AS(incidenceIdeal(pp("x^2 + y")), InvalidInputError);
    CHECK_THROWS_AS(incidenceIdeal(parsePolynomial("u*x", IN)), InvalidInputError);
    CHECK_THROWS_AS(incidenceIdeal(Polynomial::zero(P)), InvalidInputError);
}

TEST_CASE("dual of the gain conic in the real axis") {
    CHECK(dualCurve(pp("x^2*kd + x*z*kn + z^2*kn")) == pd("kd*w^2 + kn*u^2 - kn*u*w"));
}

TEST_CASE("dual of the circle") {
    CHECK(dualCurve(pp("x^2 + y^2 + 2*x*z")) == pd("v^2 + 2*u*w - w^2"));
}

TEST_CASE("dual of the cubic component") {
    Polynomial sextic = dualCurve(pp("2*x^3 + 2*x*y^2 + 7*x^2*z + 3*y^2*z + 8*x*z^2"));
    CHECK(sextic ==
          pd("144*u^4*v^2 - 352*u^2*v^4 - 240*v^6 + 216*u^5*w - 912*u^3*v^2*w - 232*u*v^4*w"
             " - 621*u^4*w^2 + 718*u^2*v^2*w^2 + 107*v^4*w^2 + 720*u^3*w^3 - 176*u*v^2*w^3"
             " - 424*u^2*w^4 - 8*v^2*w^4 + 128*u*w^5 - 16*w^6"));
    CHECK(sextic.totalDegree() == 6);
}

TEST_CASE("gain relation on the dual circle") {
    Polynomial h1 = dualParametrization(pp("2*x*kd + z*kn"), pp("x^2 + y^2 + 2*x*z"));
    CHECK(h1 == pd("kn*u + 2*kd*w - kn*w"));
}

TEST_CASE("tangent coordinates of rational circle points satisfy the dual curve") {
    Polynomial f = pp("x^2 + y^2 + 2*x*z");
    Polynomial h = dualCurve(f);
    std::mt19937 rng(321);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    for (int trial = 0; trial < 20; ++trial) {
        Rat t(num(rng), den(rng));
        t.canonicalize();
        // rational parametrization of the circle
        std::map<Var, Rat> pt{{Var::x, -2 * t * t}, {Var::y, 2 * t}, {Var::z, 1 + t * t}};
        REQUIRE(f.evaluate(pt) == 0);
        std::map<Var, Rat> tangentCoords{{Var::u, f.partialDerivative(Var::x).evaluate(pt)},
                                         {Var::v, f.partialDerivative(Var::y).evaluate(pt)},
                                         {Var::w, f.partialDerivative(Var::z).evaluate(pt)}};
        CHECK(h.evaluate(tangentCoords) == 0);
    }
}

TEST_CASE("dualized components of (s+1)/s^2") {
    RootLocusDecomposition d = exampleOne();
    REQUIRE(d.components.size() == 2);

    DualComponent lineDual = dualizeComponent(d.components[0]);
    CHECK(lineDual.pointDual);
    REQUIRE(lineDual.pointIdeal.has_value());
    CHECK(idealEqual(*lineDual.pointIdeal, Ideal(D, {pd("u"), pd("w")}),
                     MonomialOrder::grevlex()));
    REQUIRE(lineDual.dualIdeal.generators().size() == 2);
    CHECK(*lineDual.dualCurve == pd("v"));
    CHECK(*lineDual.dualParam == pd("kd*w^2 + kn*u^2 - kn*u*w"));

    DualComponent circleDual = dualizeComponent(d.components[1]);
    CHECK_FALSE(circleDual.pointDual);
    CHECK(*circleDual.dualCurve == pd("v^2 + 2*u*w - w^2"));
    CHECK(*circleDual.dualParam == pd("kn*u + 2*kd*w - kn*w"));
}

TEST_CASE("dual slice points of (s+1)/s^2") {
    RootLocusDecomposition d = exampleOne();
    DualComponent lineDual = dualizeComponent(d.components[0]);
    DualComponent circleDual = dualizeComponent(d.components[1]);

    // at zero gain every dual point is the vertical tangent through the pole
    REQUIRE(lineDual.initial.points.size() == 1);
    CHECK(lineDual.initial.points[0].coords == std::array<Rat, 3>{Rat(1), Rat(0), Rat(0)});
    REQUIRE(circleDual.initial.points.size() == 1);
    CHECK(circleDual.initial.points[0].coords == std::array<Rat, 3>{Rat(1), Rat(0), Rat(0)});
    CHECK(circleDual.initial.points[0].multiplicity == 2);

    // at infinite gain the line's duals reach the zero and the asymptote
    REQUIRE(lineDual.terminal.points.size() == 2);
    CHECK(lineDual.terminal.points[0].coords == std::array<Rat, 3>{Rat(0), Rat(0), Rat(1)});
    CHECK(lineDual.terminal.points[1].coords == std::array<Rat, 3>{Rat(1), Rat(0), Rat(1)});
    CHECK(circleDual.terminal.points.empty());
}

TEST_CASE("bidual returns to the source components") {
    RootLocusDecomposition d = exampleOne();
    MonomialOrder ord = MonomialOrder::grevlex();
    for (const RLComponent& c : d.components) {
        DualComponent dc = dualizeComponent(c);
        CHECK(idealEqual(bidual(dc), c.ideal, ord));
    }
}

TEST_CASE("gradient map of the dual lands back on the source curve") {
    Polynomial circle = pp("x^2 + y^2 + 2*x*z");
    Polynomial conic = dualCurve(circle);
    CHECK(gaussReturnCertified(conic, circle));
    CHECK_FALSE(gaussReturnCertified(conic, pp("x^2 + y^2 - z^2")));
    CHECK_THROWS_AS(gaussReturnCertified(pd("v"), circle), InvalidInputError);

    // degree-six dual of a smooth cubic, beyond the elimination route
    Polynomial cubic = pp("x^3 + x*y^2 + 7*x^2*z - y^2*z + 8*x*z^2 + 4*z^3");
    CHECK(gaussReturnCertified(dualCurve(cubic), cubic));
}

TEST_CASE("pencil through a point ideal") {
    Ideal point(D, {pd("u"), pd("w")});
    Ideal line = pointDualLine(point);
    REQUIRE(line.generators().size() == 1);
    CHECK(line.generators()[0] == pp("y"));

    CHECK_THROWS_AS(pointDualLine(Ideal(D, {pd("u^2")})), ComputationError);
    CHECK_THROWS_AS(pointDualLine(Ideal(D, {pd("u")})), ComputationError);
}

TEST_CASE("line dual of the (s+1)/(s^2(s+4)) real-axis component") {
    RootLocusDecomposition d =
        decomposeRootLocus(makeTransferFunction({Rat(1), Rat(1)}, {Rat(1), Rat(4), Rat(0), Rat(0)}));
    DualComponent lineDual = dualizeComponent(d.components[0]);
    REQUIRE(lineDual.dualIdeal.generators().size() == 2);
    CHECK(*lineDual.dualCurve == pd("v"));
    CHECK(*lineDual.dualParam == pd("4*kd*u*w^2 - kd*w^3 + kn*u^3 - kn*u^2*w"));
}

TEST_CASE("smoothness certificates") {
    CHECK(smoothnessCertified(pp("x^2 + y^2 + 2*x*z")));
    CHECK(smoothnessCertified(pp("2*x^3 + 2*x*y^2 + 7*x^2*z + 3*y^2*z + 8*x*z^2")));
    CHECK(smoothnessCertified(pp("y")));
    CHECK_FALSE(smoothnessCertified(pp("x^3 + x^2*z - y^2*z")));  // nodal at the origin
    CHECK(dualCurve(pp("x^2 + y^2 + 2*x*z")).totalDegree() == 2 * 1);
}

TEST_CASE("assembled dual picture of (s+1)/s^2") {
    RootLocusDecomposition d = exampleOne();
    std::vector<DualComponent> duals;
    for (const RLComponent& c : d.components) duals.push_back(dualizeComponent(c));
    ADRL adrl = assembleADRL(duals);

    REQUIRE(adrl.initial.size() == 1);
    CHECK(adrl.initial[0].point.coords == std::array<Rat, 3>{Rat(1), Rat(0), Rat(0)});
    CHECK(adrl.initial[0].occurrences == 2);

    REQUIRE(adrl.terminal.size() == 2);
    CHECK(adrl.terminal[0].point.coords == std::array<Rat, 3>{Rat(0), Rat(0), Rat(1)});
    CHECK(adrl.terminal[1].point.coords == std::array<Rat, 3>{Rat(1), Rat(0), Rat(1)});
    CHECK(adrl.terminal[0].occurrences == 1);

    VarSet A{Var::u, Var::v, Var::kd, Var::kn};
    REQUIRE(adrl.affinePieces.size() == 2);
    CHECK(adrl.affinePieces[0] == parsePolynomial("v", A));
    CHECK(adrl.affinePieces[1] == parsePolynomial("v^2 + 2*u - 1", A));

    CHECK_THROWS_AS(assembleADRL({}), InvalidInputError);
}

TEST_CASE("one-gain view of the dual components") {
    RootLocusDecomposition d = exampleOne();
    DualComponent lineDual = dualizeComponent(d.components[0]);
    VarSet UVL{Var::u, Var::v, Var::l};
    REQUIRE(lineDual.intermediate.size() == 2);
    CHECK(lineDual.intermediate[0] == parsePolynomial("v", UVL));
    CHECK(lineDual.intermediate[1] == parsePolynomial("u^2*l - u*l + 1", UVL));
}
