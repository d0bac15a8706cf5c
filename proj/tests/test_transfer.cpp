#include <vector>

#include "doctest.h"
#include "rlalg/transfer.hpp"
#include "rlalg/univariate.hpp"

using namespace rlalg;

namespace {

const VarSet S{Var::s};

Polynomial ps(const std::string& text) { return parsePolynomial(text, S); }

std::vector<Rat> rr(std::initializer_list<long> nums) {
    std::vector<Rat> out;
    for (long v : nums) out.push_back(Rat(v));
    return out;
}

}  // namespace

TEST_CASE("transfer function is normalized to a monic denominator") {
    TransferFunction tf = makeTransferFunction(rr({1, 1}), rr({2, 0, 0}));
    CHECK(tf.den == ps("s^2"));
    CHECK(tf.num == ps("1/2*s + 1/2"));
}

TEST_CASE("leading and trailing zeros in the inputs") {
    TransferFunction tf = makeTransferFunction(rr({0, 0, 3}), rr({0, 1, 2, 0}));
    CHECK(tf.den == ps("s^2 + 2*s"));
    CHECK(tf.num == ps("3"));
}

TEST_CASE("improper functions are allowed") {
    TransferFunction tf = makeTransferFunction(rr({1, 0, 0}), rr({1, 1}));
    CHECK(tf.num == ps("s^2"));
    CHECK(tf.den == ps("s + 1"));
}

TEST_CASE("shared factors are rejected") {
    CHECK_THROWS_AS(makeTransferFunction(rr({1, 1}), rr({1, 2, 1})), InvalidInputError);
    CHECK_THROWS_AS(makeTransferFunction(rr({1, 0}), rr({1, 1, 0})), InvalidInputError);
}

TEST_CASE("empty or zero inputs are rejected") {
    CHECK_THROWS_AS(makeTransferFunction({}, rr({1})), InvalidInputError);
    CHECK_THROWS_AS(makeTransferFunction(rr({0, 0}), rr({1})), InvalidInputError);
    CHECK_THROWS_AS(makeTransferFunction(rr({1}), {}), InvalidInputError);
    CHECK_THROWS_AS(makeTransferFunction(rr({1}), rr({0})), InvalidInputError);
}

TEST_CASE("univariate coefficient round trip") {
    Polynomial p = ps("3*s^4 - 1/2*s + 7");
    std::vector<Rat> c = univariateCoeffs(p, Var::s);
    REQUIRE(c.size() == 5);
    CHECK(c[0] == Rat(7));
    CHECK(c[1] == Rat(-1, 2));
    CHECK(c[4] == Rat(3));
    CHECK(fromUnivariateCoeffs(S, Var::s, c) == p);
    CHECK(univariateCoeffs(Polynomial::zero(S), Var::s).empty());
}

TEST_CASE("univariate gcd") {
    // (s+1)^2 (s-2) and (s+1)(s+3)
    std::vector<Rat> a = univariateCoeffs(ps("(s+1)^2*(s-2)"), Var::s);
    std::vector<Rat> b = univariateCoeffs(ps("(s+1)*(s+3)"), Var::s);
    std::vector<Rat> g = univariateGcd(a, b);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == Rat(1));
    CHECK(g[1] == Rat(1));

    CHECK(univariateGcd(a, {}).size() == 4);  // gcd with zero, monic
    CHECK(univariateGcd({}, {}).empty());
    std::vector<Rat> c = univariateCoeffs(ps("s^2 + 1"), Var::s);
    CHECK(univariateGcd(a, c).size() == 1);  // coprime
}

TEST_CASE("rational root extraction with multiplicities") {
    // (s-1/2)^2 (s+3) (s^2+1)
    std::vector<Rat> c = univariateCoeffs(ps("(s - 1/2)^2*(s + 3)*(s^2 + 1)"), Var::s);
    RootExtraction ex = extractRationalRoots(c);
    CHECK(ex.complete);
    REQUIRE(ex.roots.size() == 2);
    CHECK(ex.roots[0].first == Rat(-3));
    CHECK(ex.roots[0].second == 1);
    CHECK(ex.roots[1].first == Rat(1, 2));
    CHECK(ex.roots[1].second == 2);
    REQUIRE(ex.cofactor.size() == 3);  // s^2 + 1 up to scale
    CHECK(ex.cofactor[1] == 0);
    CHECK(ex.cofactor[0] == ex.cofactor[2]);
}

TEST_CASE("root extraction on a rootless polynomial") {
    std::vector<Rat> c = univariateCoeffs(ps("s^4 + s^2 + 3"), Var::s);
    RootExtraction ex = extractRationalRoots(c);
    CHECK(ex.complete);
    CHECK(ex.roots.empty());
    CHECK(ex.cofactor.size() == 5);
}
