#include "rlalg/univariate.hpp"

#include <algorithm>
#include <set>

namespace rlalg {

namespace {

void trimHigh(std::vector<Rat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

std::vector<Rat> univariateCoeffs(const Polynomial& p, Var v) {
    int pos = p.vars().indexOf(v);
    if (pos < 0) throw InvalidInputError("variable " + std::string(varName(v)) + " not in ring");
    std::vector<Rat> out(static_cast<std::size_t>(std::max(p.degreeIn(v), 0)) + 1, Rat(0));
    if (p.isZero()) return {};
    for (const Term& t : p.terms()) {
        if (t.mono.deg != t.mono.e[static_cast<std::size_t>(pos)])
            throw InvalidInputError("polynomial is not univariate in " + std::string(varName(v)));
        out[t.mono.e[static_cast<std::size_t>(pos)]] += t.coef;
    }
    return out;
}

Polynomial fromUnivariateCoeffs(const VarSet& vars, Var v, const std::vector<Rat>& coeffs) {
    int pos = vars.indexOf(v);
    if (pos < 0) throw InvalidInputError("variable " + std::string(varName(v)) + " not in ring");
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0)
            terms.push_back({Monomial::var(pos, static_cast<std::uint16_t>(k)), coeffs[k]});
    return Polynomial::fromTerms(vars, std::move(terms));
}

std::vector<Rat> univariateGcd(std::vector<Rat> a, std::vector<Rat> b) {
    trimHigh(a);
    trimHigh(b);
    while (!b.empty()) {
        // a mod b by long division
        std::vector<Rat> r = a;
        while (r.size() >= b.size()) {
            Rat q = r.back() / b.back();
            std::size_t shift = r.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k) r[k + shift] -= q * b[k];
            r.pop_back();
            trimHigh(r);
            if (r.size() < b.size()) break;
        }
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

std::vector<Rat> rationalRoots(const std::vector<Rat>& coeffs, bool& complete) {
    complete = true;
    std::vector<Rat> roots;

    int hi = static_cast<int>(coeffs.size()) - 1;
    while (hi >= 0 && coeffs[static_cast<std::size_t>(hi)] == 0) --hi;
    if (hi < 0) throw ComputationError("rational roots of the zero polynomial");
    int lo = 0;
    while (coeffs[static_cast<std::size_t>(lo)] == 0) ++lo;
    if (lo > 0) roots.push_back(Rat(0));
    if (lo == hi) return roots;  // c * T^hi

    // clear denominators, strip integer content
    Int den = 1;
    for (int k = lo; k <= hi; ++k) den = lcm(den, coeffs[static_cast<std::size_t>(k)].get_den());
    std::vector<Int> c;
    for (int k = lo; k <= hi; ++k)
        c.push_back(Rat(coeffs[static_cast<std::size_t>(k)] * den).get_num());
    Int g = 0;
    for (const Int& z : c) g = gcd(g, z);
    for (Int& z : c) z /= g;

    const Int bound = 1000000000;
    Int a0 = abs(c.front());
    Int an = abs(c.back());
    if (a0 > bound || an > bound) {
        complete = false;
        return roots;
    }

    auto divisors = [](unsigned long n) {
        std::vector<unsigned long> ds;
        for (unsigned long d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                ds.push_back(d);
                ds.push_back(n / d);
            }
        return ds;
    };
    std::set<Rat> cands;
    for (unsigned long pnum : divisors(a0.get_ui()))
        for (unsigned long qden : divisors(an.get_ui())) {
            Rat r(pnum, qden);
            r.canonicalize();
            cands.insert(r);
            cands.insert(-r);
        }
    for (const Rat& r : cands) {
        Rat val = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) val = val * r + Rat(*it);
        if (val == 0) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

RootExtraction extractRationalRoots(std::vector<Rat> coeffs) {
    trimHigh(coeffs);
    if (coeffs.empty()) throw ComputationError("root extraction from the zero polynomial");

    RootExtraction out;
    std::vector<std::pair<Rat, int>> found;
    while (coeffs.size() > 1) {
        bool complete = true;
        std::vector<Rat> rs = rationalRoots(coeffs, complete);
        if (!complete) out.complete = false;
        if (rs.empty()) break;
        const Rat& r = rs.front();
        // deflate by (v - r) via Horner; the remainder is zero by construction
        std::vector<Rat> q(coeffs.size() - 1, Rat(0));
        Rat carry = 0;
        for (std::size_t k = coeffs.size(); k-- > 1;) {
            carry = coeffs[k] + r * carry;
            q[k - 1] = carry;
        }
        coeffs = std::move(q);
        auto it = std::find_if(found.begin(), found.end(),
                               [&](const auto& pr) { return pr.first == r; });
        if (it == found.end())
            found.push_back({r, 1});
        else
            ++it->second;
    }
    std::sort(found.begin(), found.end());
    out.roots = std::move(found);
    out.cofactor = std::move(coeffs);
    return out;
}

}  // namespace rlalg
