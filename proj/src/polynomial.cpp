#include "rlalg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "rlalg/error.hpp"

namespace rlalg {

namespace {

void sortAndMerge(std::vector<Term>& ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return structuralLess(a.mono, b.mono); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < ts.size();) {
        Monomial m = ts[i].mono;
        Rat c = ts[i].coef;
        std::size_t j = i + 1;
        while (j < ts.size() && ts[j].mono == m) c += ts[j++].coef;
        if (c != 0) ts[out++] = Term{m, c};
        i = j;
    }
    ts.resize(out);
}

void checkSameRing(const Polynomial& a, const Polynomial& b) {
    if (a.vars() != b.vars())
        throw Error("ring mismatch: " + a.vars().str() + " vs " + b.vars().str());
}

}  // namespace

Polynomial Polynomial::constant(VarSet vars, const Rat& c) {
    Polynomial p(vars);
    if (c != 0) p.terms_.push_back(Term{Monomial::one(), c});
    return p;
}

Polynomial Polynomial::variable(VarSet vars, Var v) {
    int pos = vars.indexOf(v);
    if (pos < 0) throw Error(std::string("variable not in ring: ") + varName(v));
    Polynomial p(vars);
    p.terms_.push_back(Term{Monomial::var(pos), Rat(1)});
    return p;
}

Polynomial Polynomial::fromTerms(VarSet vars, std::vector<Term> terms) {
    for (const Term& t : terms)
        for (int i = vars.size(); i < kMaxVars; ++i)
            if (t.mono.e[i] != 0) throw Error("term uses exponent slot outside the ring");
    Polynomial p(vars);
    p.terms_ = std::move(terms);
    sortAndMerge(p.terms_);
    return p;
}

int Polynomial::totalDegree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.deg));
    return d;
}

int Polynomial::degreeIn(Var v) const {
    int pos = vars_.indexOf(v);
    if (pos < 0) return isZero() ? -1 : 0;
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.e[pos]));
    return d;
}

int Polynomial::degreeIn(const std::vector<Var>& vs) const {
    if (isZero()) return -1;
    int d = 0;
    for (const Term& t : terms_) {
        int s = 0;
        for (Var v : vs) {
            int pos = vars_.indexOf(v);
            if (pos >= 0) s += t.mono.e[pos];
        }
        d = std::max(d, s);
    }
    return d;
}

bool Polynomial::isHomogeneous() const {
    for (const Term& t : terms_)
        if (t.mono.deg != terms_[0].mono.deg) return false;
    return true;
}

bool Polynomial::isHomogeneousIn(const std::vector<Var>& vs) const {
    if (isZero()) return true;
    auto blockDeg = [&](const Monomial& m) {
        int s = 0;
        for (Var v : vs) {
            int pos = vars_.indexOf(v);
            if (pos >= 0) s += m.e[pos];
        }
        return s;
    };
    int d0 = blockDeg(terms_[0].mono);
    for (const Term& t : terms_)
        if (blockDeg(t.mono) != d0) return false;
    return true;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (vars_ != o.vars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.mono, -t.coef});
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    checkSameRing(*this, o);
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Rat c = terms_[i].coef + o.terms_[j].coef;
            if (c != 0) r.terms_.push_back(Term{terms_[i].mono, c});
            ++i, ++j;
        } else if (structuralLess(terms_[i].mono, o.terms_[j].mono)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    checkSameRing(*this, o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) prod.push_back(Term{mul(a.mono, b.mono), a.coef * b.coef});
    return fromTerms(vars_, std::move(prod));
}

Polynomial Polynomial::operator*(const Rat& c) const {
    if (c == 0) return zero(vars_);
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.mono, t.coef * c});
    return r;
}

Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

const Term& Polynomial::leadingTerm(const MonomialOrder& ord) const {
    if (isZero()) throw Error("leading term of the zero polynomial");
    const Term* best = &terms_[0];
    for (const Term& t : terms_)
        if (ord.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Polynomial Polynomial::partialDerivative(Var v) const {
    int pos = vars_.indexOf(v);
    if (pos < 0) throw Error(std::string("derivative variable not in ring: ") + varName(v));
    Polynomial r(vars_);
    for (const Term& t : terms_) {
        std::uint16_t e = t.mono.e[pos];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.e[pos] = static_cast<std::uint16_t>(e - 1);
        m.deg -= 1;
        r.terms_.push_back(Term{m, t.coef * Rat(e)});
    }
    sortAndMerge(r.terms_);
    return r;
}

Polynomial Polynomial::homogenize(Var hvar) const {
    int pos = vars_.indexOf(hvar);
    if (pos < 0) throw Error(std::string("homogenization variable not in ring: ") + varName(hvar));
    if (mentions(hvar))
        throw Error(std::string("homogenization variable already occurs: ") + varName(hvar));
    if (isZero()) return *this;
    std::uint32_t d = static_cast<std::uint32_t>(totalDegree());
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m = t.mono;
        m.e[pos] = static_cast<std::uint16_t>(d - t.mono.deg);
        m.deg = d;
        r.terms_.push_back(Term{m, t.coef});
    }
    sortAndMerge(r.terms_);
    return r;
}

Polynomial Polynomial::dehomogenize(Var hvar) const { return substitute(hvar, Rat(1)); }

Polynomial Polynomial::substitute(Var v, const Rat& value) const {
    int pos = vars_.indexOf(v);
    if (pos < 0) throw Error(std::string("substitution variable not in ring: ") + varName(v));
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Rat c = t.coef;
        if (std::uint16_t e = t.mono.e[pos]; e != 0) {
            Rat pw(1);
            for (std::uint16_t k = 0; k < e; ++k) pw *= value;
            c *= pw;
        }
        if (c == 0) continue;
        Monomial m = t.mono;
        m.deg -= m.e[pos];
        m.e[pos] = 0;
        r.terms_.push_back(Term{m, c});
    }
    sortAndMerge(r.terms_);
    return r;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& value) const {
    checkSameRing(*this, value);
    int pos = vars_.indexOf(v);
    if (pos < 0) throw Error(std::string("substitution variable not in ring: ") + varName(v));
    Polynomial acc = zero(vars_);
    for (const Term& t : terms_) {
        Monomial m = t.mono;
        std::uint16_t e = m.e[pos];
        m.deg -= e;
        m.e[pos] = 0;
        Polynomial part(vars_);
        part.terms_.push_back(Term{m, t.coef});
        for (std::uint16_t k = 0; k < e; ++k) part = part * value;
        acc = acc + part;
    }
    return acc;
}

Polynomial Polynomial::rename(Var from, Var to) const {
    int src = vars_.indexOf(from);
    int dst = vars_.indexOf(to);
    if (src < 0 || dst < 0) throw Error("rename variable not in ring");
    if (mentions(to)) throw Error(std::string("rename target already occurs: ") + varName(to));
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m = t.mono;
        m.e[dst] = m.e[src];
        m.e[src] = 0;
        r.terms_.push_back(Term{m, t.coef});
    }
    sortAndMerge(r.terms_);
    return r;
}

Polynomial Polynomial::embedInto(const VarSet& bigger) const {
    std::array<int, kMaxVars> map{};
    for (int i = 0; i < vars_.size(); ++i) {
        int pos = bigger.indexOf(vars_.at(i));
        if (pos < 0) {
            if (degreeIn(vars_.at(i)) > 0)
                throw Error(std::string("embedding drops an occurring variable: ") + varName(vars_.at(i)));
            pos = 0;  // unused slot, exponent is always zero
        }
        map[static_cast<std::size_t>(i)] = pos;
    }
    Polynomial r(bigger);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m;
        for (int i = 0; i < vars_.size(); ++i)
            m.e[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] =
                static_cast<std::uint16_t>(m.e[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] + t.mono.e[i]);
        m.deg = t.mono.deg;
        r.terms_.push_back(Term{m, t.coef});
    }
    sortAndMerge(r.terms_);
    return r;
}

Polynomial Polynomial::restrictTo(const VarSet& smaller) const { return embedInto(smaller); }

Monomial Polynomial::monomialContent() const {
    if (isZero()) throw Error("monomial content of the zero polynomial");
    Monomial g = terms_[0].mono;
    for (const Term& t : terms_) g = gcd(g, t.mono);
    return g;
}

Rat Polynomial::rationalContent() const {
    if (isZero()) throw Error("content of the zero polynomial");
    Int num = 0, den = 1;
    for (const Term& t : terms_) {
        num = ::gcd(num, t.coef.get_num());
        den = ::lcm(den, t.coef.get_den());
    }
    Rat c(num, den);
    c.canonicalize();
    return c;
}

Polynomial Polynomial::normalized(const MonomialOrder& ord) const {
    if (isZero()) return *this;
    Rat c = rationalContent();
    if (sign(leadingTerm(ord).coef) < 0) c = -c;
    return *this * (Rat(1) / c);
}

Rat Polynomial::evaluate(const std::map<Var, Rat>& point) const {
    for (int i = 0; i < vars_.size(); ++i)
        if (degreeIn(vars_.at(i)) > 0 && !point.count(vars_.at(i)))
            throw Error(std::string("evaluation point misses variable ") + varName(vars_.at(i)));
    Rat acc(0);
    for (const Term& t : terms_) {
        Rat c = t.coef;
        for (int i = 0; i < vars_.size(); ++i) {
            std::uint16_t e = t.mono.e[i];
            if (!e) continue;
            const Rat& val = point.at(vars_.at(i));
            for (std::uint16_t k = 0; k < e; ++k) c *= val;
        }
        acc += c;
    }
    return acc;
}

double Polynomial::evaluateDouble(const std::map<Var, double>& point) const {
    double acc = 0;
    for (const Term& t : terms_) {
        double c = toDouble(t.coef);
        for (int i = 0; i < vars_.size(); ++i) {
            std::uint16_t e = t.mono.e[i];
            if (!e) continue;
            auto it = point.find(vars_.at(i));
            if (it == point.end()) throw Error(std::string("evaluation point misses variable ") + varName(vars_.at(i)));
            c *= std::pow(it->second, e);
        }
        acc += c;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Parser {
    const std::string& text;
    const VarSet& vars;
    std::size_t pos = 0;

    char peek() {
        skipSpace();
        return pos < text.size() ? text[pos] : '\0';
    }
    void skipSpace() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    Polynomial parseExpr() {
        Polynomial acc = parseTerm();
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos;
            Polynomial t = parseTerm();
            acc = c == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    // product of factors with an optional sign prefix; '*' optional
    Polynomial parseTerm() {
        bool neg = false;
        while (peek() == '+' || peek() == '-') neg ^= text[pos++] == '-';
        Polynomial acc = parseFactor();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = acc * parseFactor();
            } else if (c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
                       std::isalpha(static_cast<unsigned char>(c))) {
                acc = acc * parseFactor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parseFactor() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Polynomial inner = parseExpr();
            if (peek() != ')') throw ParseError("expected ')'", pos);
            ++pos;
            return applyPower(inner);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return applyPower(parseNumber());
        if (std::isalpha(static_cast<unsigned char>(c))) return parseVariables();
        throw ParseError("unexpected character", pos);
    }

    Polynomial applyPower(Polynomial base) {
        if (peek() != '^') return base;
        ++pos;
        int e = parseExponent();
        Polynomial r = Polynomial::constant(vars, Rat(1));
        for (int k = 0; k < e; ++k) r = r * base;
        return r;
    }

    int parseExponent() {
        skipSpace();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected exponent", pos);
        long e = std::stol(text.substr(start, pos - start));
        if (e < 0 || e > 1000) throw ParseError("exponent out of range", start);
        return static_cast<int>(e);
    }

    Polynomial parseNumber() {
        skipSpace();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string num = text.substr(start, pos - start);
        // "a/b" only when a '/' is immediately followed by digits
        std::size_t save = pos;
        skipSpace();
        if (pos < text.size() && text[pos] == '/') {
            std::size_t slash = pos++;
            skipSpace();
            std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) throw ParseError("expected denominator", slash);
            num += "/" + text.substr(dstart, pos - dstart);
        } else {
            pos = save;
        }
        return Polynomial::constant(vars, parseRat(num));
    }

    // a maximal alphabetic run, greedily segmented into universe names so
    // both "x*y*kd" and "xykd" parse
    Polynomial parseVariables() {
        skipSpace();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string run = text.substr(start, pos - start);
        Polynomial acc = Polynomial::constant(vars, Rat(1));
        std::size_t i = 0;
        while (i < run.size()) {
            std::optional<Var> v;
            std::size_t len = 0;
            if (i + 1 < run.size()) {
                v = varFromName(run.substr(i, 2));
                if (v) len = 2;
            }
            if (!v) {
                v = varFromName(run.substr(i, 1));
                if (v) len = 1;
            }
            if (!v) throw ParseError("unknown variable '" + run.substr(i) + "'", start + i);
            if (!vars.contains(*v))
                throw ParseError(std::string("variable ") + varName(*v) + " not in ring " + vars.str(),
                                 start + i);
            i += len;
            Polynomial f = Polynomial::variable(vars, *v);
            // '^' binds to the last name in the run
            if (i == run.size() && peekRaw() == '^') {
                ++pos;
                int e = parseExponent();
                Polynomial p = Polynomial::constant(vars, Rat(1));
                for (int k = 0; k < e; ++k) p = p * f;
                f = p;
            }
            acc = acc * f;
        }
        return acc;
    }

    char peekRaw() {
        skipSpace();
        return pos < text.size() ? text[pos] : '\0';
    }
};

}  // namespace

Polynomial parsePolynomial(const std::string& text, const VarSet& vars) {
    Parser p{text, vars};
    if (p.peek() == '\0') throw ParseError("empty polynomial", 0);
    Polynomial r = p.parseExpr();
    if (p.peek() != '\0') throw ParseError("trailing input", p.pos);
    return r;
}

std::string formatPolynomial(const Polynomial& p) {
    return formatPolynomial(p, MonomialOrder::grevlex());
}

std::string formatPolynomial(const Polynomial& p, const MonomialOrder& ord) {
    if (p.isZero()) return "0";
    std::vector<const Term*> ts;
    ts.reserve(p.terms().size());
    for (const Term& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [&](const Term* a, const Term* b) { return ord.greater(a->mono, b->mono); });
    std::string out;
    bool first = true;
    for (const Term* t : ts) {
        Rat c = t->coef;
        bool neg = sign(c) < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string monoTxt;
        for (int i = 0; i < p.vars().size(); ++i) {
            std::uint16_t e = t->mono.e[i];
            if (!e) continue;
            if (!monoTxt.empty()) monoTxt += "*";
            monoTxt += varName(p.vars().at(i));
            if (e > 1) monoTxt += "^" + std::to_string(e);
        }
        if (monoTxt.empty()) {
            out += toString(c);
        } else if (c == 1) {
            out += monoTxt;
        } else {
            out += toString(c) + "*" + monoTxt;
        }
    }
    return out;
}

}  // namespace rlalg
