#include "rlalg/transfer.hpp"

#include <algorithm>

#include "rlalg/univariate.hpp"

namespace rlalg {

TransferFunction makeTransferFunction(const std::vector<Rat>& numHighFirst,
                                      const std::vector<Rat>& denHighFirst) {
    auto ascending = [](std::vector<Rat> c) {
        std::reverse(c.begin(), c.end());
        while (!c.empty() && c.back() == 0) c.pop_back();
        return c;
    };
    std::vector<Rat> num = ascending(numHighFirst);
    std::vector<Rat> den = ascending(denHighFirst);
    if (num.empty()) throw InvalidInputError("numerator is zero");
    if (den.empty()) throw InvalidInputError("denominator is zero");

    Rat lead = den.back();
    for (Rat& c : den) c /= lead;
    for (Rat& c : num) c /= lead;

    if (univariateGcd(num, den).size() > 1)
        throw InvalidInputError("numerator and denominator share a common factor");

    VarSet ring{Var::s};
    return {fromUnivariateCoeffs(ring, Var::s, num), fromUnivariateCoeffs(ring, Var::s, den)};
}

}  // namespace rlalg
