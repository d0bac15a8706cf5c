#include "rlalg/ordering.hpp"

#include "rlalg/error.hpp"

namespace rlalg {

namespace {

int cmpLex(const Monomial& a, const Monomial& b, std::uint16_t mask) {
    for (int i = 0; i < kMaxVars; ++i) {
        if (mask && !(mask & (1u << i))) continue;
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
}

// grevlex: larger total degree wins; on ties the monomial with the smaller
// exponent in the least significant differing position is larger.
int cmpGrevlex(const Monomial& a, const Monomial& b, std::uint16_t mask) {
    std::uint32_t da, db;
    if (mask) {
        da = db = 0;
        for (int i = 0; i < kMaxVars; ++i)
            if (mask & (1u << i)) {
                da += a.e[i];
                db += b.e[i];
            }
    } else {
        da = a.deg;
        db = b.deg;
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 0; --i) {
        if (mask && !(mask & (1u << i))) continue;
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

int cmpMasked(MonomialOrder::Kind k, const Monomial& a, const Monomial& b, std::uint16_t mask) {
    return k == MonomialOrder::Kind::lex ? cmpLex(a, b, mask) : cmpGrevlex(a, b, mask);
}

}  // namespace

MonomialOrder MonomialOrder::block(const VarSet& ring, const std::vector<Var>& front,
                                   Kind frontInner, Kind backInner) {
    if (frontInner == Kind::block || backInner == Kind::block)
        throw Error("block order cannot nest block orders");
    std::uint16_t mask = 0;
    for (Var v : front) {
        int pos = ring.indexOf(v);
        if (pos < 0) throw Error(std::string("block order front variable not in ring: ") + varName(v));
        mask = static_cast<std::uint16_t>(mask | (1u << pos));
    }
    if (mask == 0) throw Error("block order needs a non-empty front block");
    return MonomialOrder(Kind::block, mask, frontInner, backInner);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::lex:
            return cmpLex(a, b, 0);
        case Kind::grevlex:
            return cmpGrevlex(a, b, 0);
        case Kind::block: {
            if (int c = cmpMasked(frontInner_, a, b, frontMask_)) return c;
            std::uint16_t back = static_cast<std::uint16_t>(~frontMask_ & ((1u << kMaxVars) - 1));
            return cmpMasked(backInner_, a, b, back);
        }
    }
    return 0;
}

std::string MonomialOrder::str() const {
    switch (kind_) {
        case Kind::lex:
            return "lex";
        case Kind::grevlex:
            return "grevlex";
        case Kind::block:
            return std::string("block(") + (frontInner_ == Kind::lex ? "lex" : "grevlex") + "," +
                   (backInner_ == Kind::lex ? "lex" : "grevlex") + ")";
    }
    return "?";
}

}  // namespace rlalg
