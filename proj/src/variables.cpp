#include "rlalg/variables.hpp"

#include "rlalg/rational.hpp"

namespace rlalg {

namespace {
constexpr const char* kNames[kMaxVars] = {"x", "y", "z", "kd", "kn", "u", "v", "w", "l", "t", "s"};
}

const char* varName(Var v) { return kNames[static_cast<int>(v)]; }

std::optional<Var> varFromName(std::string_view name) {
    for (int i = 0; i < kMaxVars; ++i)
        if (name == kNames[i]) return static_cast<Var>(i);
    return std::nullopt;
}

VarSet::VarSet(std::initializer_list<Var> vars) {
    for (Var v : vars) {
        if (indexOf(v) >= 0) throw Error(std::string("duplicate variable in VarSet: ") + varName(v));
        if (n_ >= kMaxVars) throw Error("VarSet overflow");
        vars_[static_cast<std::size_t>(n_++)] = v;
    }
}

int VarSet::indexOf(Var v) const {
    for (int i = 0; i < n_; ++i)
        if (vars_[static_cast<std::size_t>(i)] == v) return i;
    return -1;
}

bool VarSet::operator==(const VarSet& o) const {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_; ++i)
        if (vars_[static_cast<std::size_t>(i)] != o.vars_[static_cast<std::size_t>(i)]) return false;
    return true;
}

VarSet VarSet::extendedWith(Var v) const {
    if (contains(v)) throw Error(std::string("variable already in ring: ") + varName(v));
    VarSet r = *this;
    if (r.n_ >= kMaxVars) throw Error("VarSet overflow");
    r.vars_[static_cast<std::size_t>(r.n_++)] = v;
    return r;
}

VarSet VarSet::without(Var v) const {
    int idx = indexOf(v);
    if (idx < 0) throw Error(std::string("variable not in ring: ") + varName(v));
    VarSet r;
    for (int i = 0; i < n_; ++i)
        if (i != idx) r.vars_[static_cast<std::size_t>(r.n_++)] = vars_[static_cast<std::size_t>(i)];
    return r;
}

std::string VarSet::str() const {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += varName(at(i));
    }
    return s + ")";
}

namespace rings {
VarSet pencil() { return VarSet{Var::s, Var::kd, Var::kn}; }
VarSet affine() { return VarSet{Var::x, Var::y, Var::kd, Var::kn}; }
VarSet proj() { return VarSet{Var::x, Var::y, Var::z, Var::kd, Var::kn}; }
VarSet incidence() {
    return VarSet{Var::x, Var::y, Var::z, Var::kd, Var::kn, Var::l, Var::u, Var::v, Var::w};
}
VarSet dual() { return VarSet{Var::u, Var::v, Var::w, Var::kd, Var::kn}; }
}  // namespace rings

Rat parseRat(const std::string& text) {
    if (text.empty()) throw InvalidInputError("empty rational literal");
    std::size_t i = 0;
    auto readInt = [&](const char* what) {
        std::string digits;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') digits += text[i];  // mpz_set_str rejects a leading '+'
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        if (i == start) throw InvalidInputError(std::string("bad ") + what + " in rational literal: " + text);
        return digits;
    };
    std::string num = readInt("numerator");
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = readInt("denominator");
    }
    if (i != text.size()) throw InvalidInputError("trailing characters in rational literal: " + text);
    Int n(num), d(den);
    if (d == 0) throw InvalidInputError("zero denominator in rational literal: " + text);
    Rat q(n, d);
    q.canonicalize();
    return q;
}

double toDouble(const Rat& q) { return q.get_d(); }

}  // namespace rlalg
