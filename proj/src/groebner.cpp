// Buchberger engine. Internally all arithmetic is fraction-free over the
// integers: elements are kept content-free, reduction steps cross-multiply
// leading coefficients, and results are stripped of integer content before
// they enter the basis. Pair bookkeeping follows the Gebauer-Moeller update.

#include "rlalg/groebner.hpp"

#include <algorithm>
#include <list>
#include <set>

#include "rlalg/error.hpp"

namespace rlalg {

Ideal::Ideal(VarSet vars, std::vector<Polynomial> gens) : vars_(vars) {
    for (Polynomial& g : gens) {
        if (g.isZero()) continue;
        if (g.vars() != vars_) throw Error("ideal generator ring mismatch");
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::span(std::vector<Polynomial> gens) {
    if (gens.empty()) throw Error("span needs at least one generator to fix the ring");
    VarSet vs = gens[0].vars();
    return Ideal(vs, std::move(gens));
}

Ideal Ideal::embeddedInto(const VarSet& bigger) const {
    std::vector<Polynomial> gs;
    gs.reserve(gens_.size());
    for (const Polynomial& g : gens_) gs.push_back(g.embedInto(bigger));
    return Ideal(bigger, std::move(gs));
}

Ideal Ideal::restrictedTo(const VarSet& smaller) const {
    std::vector<Polynomial> gs;
    gs.reserve(gens_.size());
    for (const Polynomial& g : gens_) gs.push_back(g.restrictTo(smaller));
    return Ideal(smaller, std::move(gs));
}

bool GroebnerBasis::isUnit() const {
    return elements.size() == 1 && elements[0].isConstant() && !elements[0].isZero();
}

namespace {

struct ZTerm {
    Monomial mono;
    Int coef;
};

// strictly descending under the active order
using ZPoly = std::vector<ZTerm>;

ZPoly toZ(const Polynomial& p, const MonomialOrder& ord) {
    Int den = 1;
    for (const Term& t : p.terms()) den = lcm(den, t.coef.get_den());
    ZPoly z;
    z.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        Rat c = t.coef * Rat(den);
        z.push_back(ZTerm{t.mono, c.get_num()});
    }
    std::sort(z.begin(), z.end(),
              [&](const ZTerm& a, const ZTerm& b) { return ord.greater(a.mono, b.mono); });
    return z;
}

Polynomial fromZ(const ZPoly& z, const VarSet& vars) {
    std::vector<Term> ts;
    ts.reserve(z.size());
    for (const ZTerm& t : z) ts.push_back(Term{t.mono, Rat(t.coef)});
    return Polynomial::fromTerms(vars, std::move(ts));
}

// divide out integer content, make the leading coefficient positive
void makePrimitive(ZPoly& p) {
    if (p.empty()) return;
    Int g = 0;
    for (const ZTerm& t : p) {
        g = gcd(g, t.coef);
        if (g == 1) break;
    }
    if (sign(p[0].coef) < 0) g = -g;
    if (g == 1) return;
    for (ZTerm& t : p) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
}

// r = a*p - b*(m*q), both inputs descending; the caller guarantees the
// leading monomial of m*q equals p[at].mono so that term cancels.
ZPoly combine(const ZPoly& p, const Int& a, const ZPoly& q, const Int& b, const Monomial& m,
              const MonomialOrder& ord) {
    ZPoly r;
    r.reserve(p.size() + q.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() && j < q.size()) {
        Monomial qm = mul(q[j].mono, m);
        int c = ord.compare(p[i].mono, qm);
        if (c > 0) {
            r.push_back(ZTerm{p[i].mono, a * p[i].coef});
            ++i;
        } else if (c < 0) {
            r.push_back(ZTerm{qm, -b * q[j].coef});
            ++j;
        } else {
            Int coef = a * p[i].coef - b * q[j].coef;
            if (coef != 0) r.push_back(ZTerm{p[i].mono, std::move(coef)});
            ++i, ++j;
        }
    }
    for (; i < p.size(); ++i) r.push_back(ZTerm{p[i].mono, a * p[i].coef});
    for (; j < q.size(); ++j) r.push_back(ZTerm{mul(q[j].mono, m), -b * q[j].coef});
    return r;
}

// Full normal form of p against basis; output primitive.
ZPoly reduceFull(ZPoly p, const std::vector<ZPoly>& basis, const MonomialOrder& ord) {
    std::size_t idx = 0;  // terms before idx are irreducible
    while (idx < p.size()) {
        const Monomial& tm = p[idx].mono;
        const ZPoly* red = nullptr;
        for (const ZPoly& g : basis) {
            if (!g.empty() && divides(g[0].mono, tm)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            ++idx;
            continue;
        }
        const Int& lcg = (*red)[0].coef;
        const Int& ct = p[idx].coef;
        Int d = gcd(lcg, ct);
        Int a, b;
        mpz_divexact(a.get_mpz_t(), lcg.get_mpz_t(), d.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), ct.get_mpz_t(), d.get_mpz_t());
        if (sign(a) < 0) {
            a = -a;
            b = -b;
        }
        Monomial m = quotient(tm, (*red)[0].mono);
        p = combine(p, a, *red, b, m, ord);
        // scaling by a keeps previous terms irreducible; cancellation may
        // remove the term at idx, never ones before it
    }
    makePrimitive(p);
    return p;
}

ZPoly sPoly(const ZPoly& f, const ZPoly& g, const MonomialOrder& ord) {
    const Monomial L = lcm(f[0].mono, g[0].mono);
    Int d = gcd(f[0].coef, g[0].coef);
    Int a, b;
    mpz_divexact(a.get_mpz_t(), g[0].coef.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), f[0].coef.get_mpz_t(), d.get_mpz_t());
    ZPoly fs;
    fs.reserve(f.size());
    Monomial mf = quotient(L, f[0].mono);
    for (const ZTerm& t : f) fs.push_back(ZTerm{mul(t.mono, mf), t.coef});
    return combine(fs, a, g, b, quotient(L, g[0].mono), ord);
}

struct Pair {
    int i, j;  // i < j
    Monomial lcm;
};

struct Engine {
    const MonomialOrder& ord;
    std::vector<ZPoly> basis;
    std::list<Pair> pairs;

    explicit Engine(const MonomialOrder& o) : ord(o) {}

    const Monomial& lt(int i) const { return basis[static_cast<std::size_t>(i)][0].mono; }

    // Gebauer-Moeller update: prune new pairs against each other, drop
    // coprime ones, prune old pairs through the new leading term.
    void add(ZPoly h) {
        int t = static_cast<int>(basis.size());
        std::vector<Pair> cand;
        cand.reserve(basis.size());
        for (int i = 0; i < t; ++i) cand.push_back(Pair{i, t, lcm(lt(i), h[0].mono)});

        std::vector<Pair> kept;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            bool coprimeLt = coprime(lt(cand[a].i), h[0].mono);
            bool dominated = false;
            if (!coprimeLt) {
                for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
                    if (a == b) continue;
                    if (cand[b].lcm == cand[a].lcm) {
                        dominated = b < a;  // keep the first of an equal-lcm group
                    } else if (divides(cand[b].lcm, cand[a].lcm)) {
                        dominated = true;
                    }
                }
            }
            if (!dominated) kept.push_back(cand[a]);
        }
        for (auto it = pairs.begin(); it != pairs.end();) {
            if (divides(h[0].mono, it->lcm) && lcm(lt(it->i), h[0].mono) != it->lcm &&
                lcm(lt(it->j), h[0].mono) != it->lcm) {
                it = pairs.erase(it);
            } else {
                ++it;
            }
        }
        for (const Pair& p : kept)
            if (!coprime(lt(p.i), h[0].mono)) pairs.push_back(p);
        basis.push_back(std::move(h));
    }

    bool popSmallest(Pair& out) {
        if (pairs.empty()) return false;
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            int c = ord.compare(it->lcm, best->lcm);
            if (c < 0 || (c == 0 && (it->i < best->i || (it->i == best->i && it->j < best->j))))
                best = it;
        }
        out = *best;
        pairs.erase(best);
        return true;
    }
};

std::vector<ZPoly> buchbergerZ(std::vector<ZPoly> input, const MonomialOrder& ord) {
    Engine eng(ord);
    for (ZPoly& g : input) {
        if (g.empty()) continue;
        makePrimitive(g);
        eng.add(std::move(g));
    }
    Pair p;
    while (eng.popSmallest(p)) {
        ZPoly s = sPoly(eng.basis[static_cast<std::size_t>(p.i)],
                        eng.basis[static_cast<std::size_t>(p.j)], ord);
        ZPoly r = reduceFull(std::move(s), eng.basis, ord);
        if (!r.empty()) eng.add(std::move(r));
    }

    // minimal set: drop elements whose leading term another one divides
    std::vector<ZPoly> sorted = std::move(eng.basis);
    std::sort(sorted.begin(), sorted.end(),
              [&](const ZPoly& a, const ZPoly& b) { return ord.less(a[0].mono, b[0].mono); });
    std::vector<ZPoly> minimal;
    for (ZPoly& g : sorted) {
        bool redundant = false;
        for (const ZPoly& k : minimal)
            if (divides(k[0].mono, g[0].mono)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(g));
    }
    // interreduce tails
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<ZPoly> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = reduceFull(std::move(minimal[i]), others, ord);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const ZPoly& a, const ZPoly& b) { return ord.less(a[0].mono, b[0].mono); });
    return minimal;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
    std::vector<ZPoly> in;
    in.reserve(ideal.generators().size());
    for (const Polynomial& g : ideal.generators()) in.push_back(toZ(g, order));
    std::vector<ZPoly> out = buchbergerZ(std::move(in), order);
    GroebnerBasis gb{ideal.vars(), order, {}};
    gb.elements.reserve(out.size());
    for (const ZPoly& z : out) gb.elements.push_back(fromZ(z, ideal.vars()));
    return gb;
}

Polynomial normalForm(const Polynomial& p, const GroebnerBasis& gb) {
    if (p.vars() != gb.vars) throw Error("normalForm ring mismatch");
    if (p.isZero() || gb.elements.empty()) return p;
    std::vector<ZPoly> basis;
    basis.reserve(gb.elements.size());
    for (const Polynomial& g : gb.elements) basis.push_back(toZ(g, gb.order));

    // exact rational division: track a running integer denominator, so the
    // result r satisfies p - r in <G> precisely
    ZPoly r = toZ(p, gb.order);
    Int den = 1;  // r/den differs from p by an ideal element, up to the input's own denominator
    // input denominators: p = zp / d0
    Int d0 = 1;
    for (const Term& t : p.terms()) d0 = lcm(d0, t.coef.get_den());

    std::size_t idx = 0;
    while (idx < r.size()) {
        const Monomial& tm = r[idx].mono;
        const ZPoly* red = nullptr;
        for (const ZPoly& g : basis)
            if (divides(g[0].mono, tm)) {
                red = &g;
                break;
            }
        if (!red) {
            ++idx;
            continue;
        }
        const Int& lcg = (*red)[0].coef;
        const Int& ct = r[idx].coef;
        Int d = gcd(lcg, ct);
        Int a, b;
        mpz_divexact(a.get_mpz_t(), lcg.get_mpz_t(), d.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), ct.get_mpz_t(), d.get_mpz_t());
        if (sign(a) < 0) {
            a = -a;
            b = -b;
        }
        den *= a;
        r = combine(r, a, *red, b, quotient(tm, (*red)[0].mono), gb.order);
    }
    den *= d0;
    std::vector<Term> ts;
    ts.reserve(r.size());
    for (const ZTerm& t : r) {
        Rat c(t.coef, den);
        c.canonicalize();
        ts.push_back(Term{t.mono, c});
    }
    return Polynomial::fromTerms(p.vars(), std::move(ts));
}

Ideal eliminate(const Ideal& ideal, const std::vector<Var>& elimVars) {
    if (elimVars.empty()) throw Error("eliminate needs at least one variable");
    for (Var v : elimVars)
        if (!ideal.vars().contains(v))
            throw Error(std::string("elimination variable not in ring: ") + varName(v));
    MonomialOrder ord = MonomialOrder::block(ideal.vars(), elimVars);
    GroebnerBasis gb = buchberger(ideal, ord);
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb.elements) {
        bool free = true;
        for (Var v : elimVars)
            if (g.mentions(v)) {
                free = false;
                break;
            }
        if (free) kept.push_back(g);
    }
    return Ideal(ideal.vars(), std::move(kept));
}

Ideal intersectIdeals(const Ideal& a, const Ideal& b) {
    if (a.vars() != b.vars()) throw Error("intersect ring mismatch");
    if (a.vars().contains(Var::t))
        throw Error("intersect tag variable t already occurs in the ring");
    VarSet ext = a.vars().extendedWith(Var::t);
    Polynomial tv = Polynomial::variable(ext, Var::t);
    Polynomial oneMinusT = Polynomial::constant(ext, Rat(1)) - tv;
    std::vector<Polynomial> gens;
    for (const Polynomial& g : a.generators()) gens.push_back(tv * g.embedInto(ext));
    for (const Polynomial& g : b.generators()) gens.push_back(oneMinusT * g.embedInto(ext));
    Ideal tagged(ext, std::move(gens));
    Ideal elim = eliminate(tagged, {Var::t});
    return elim.restrictedTo(a.vars());
}

bool idealContains(const Ideal& ideal, const Polynomial& p) {
    if (p.vars() != ideal.vars()) throw Error("contains ring mismatch");
    if (p.isZero()) return true;
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex());
    return normalForm(p, gb).isZero();
}

bool idealEqual(const Ideal& a, const Ideal& b, const MonomialOrder& order) {
    if (a.vars() != b.vars()) return false;
    GroebnerBasis ga = buchberger(a, order);
    GroebnerBasis gbb = buchberger(b, order);
    if (ga.elements.size() != gbb.elements.size()) return false;
    for (std::size_t i = 0; i < ga.elements.size(); ++i)
        if (ga.elements[i] != gbb.elements[i]) return false;
    return true;
}

bool isGroebnerBasis(const GroebnerBasis& gb) {
    if (gb.elements.size() < 2) return true;
    std::vector<ZPoly> basis;
    for (const Polynomial& g : gb.elements) basis.push_back(toZ(g, gb.order));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            ZPoly s = sPoly(basis[i], basis[j], gb.order);
            if (!reduceFull(std::move(s), basis, gb.order).empty()) return false;
        }
    return true;
}

}  // namespace rlalg
