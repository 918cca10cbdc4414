#include "qtk/multipoly.hpp"

#include <cctype>
#include <stdexcept>

namespace qtk {

Var var_from_name(char name) {
    for (int i = 0; i < 4; ++i)
        if (kVarNames[static_cast<std::size_t>(i)] == name) return static_cast<Var>(i);
    throw std::invalid_argument(std::string("unknown variable '") + name + "'");
}

MultiPoly MultiPoly::constant(BigInt c) {
    MultiPoly p;
    p.add_term(ExpVec{0, 0, 0, 0}, c);
    return p;
}

MultiPoly MultiPoly::variable(Var v, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    ExpVec e{0, 0, 0, 0};
    e[static_cast<std::size_t>(v)] = exp;
    return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const ExpVec& e, BigInt c) {
    for (int x : e)
        if (x < 0) throw std::invalid_argument("negative exponent");
    MultiPoly p;
    p.add_term(e, c);
    return p;
}

BigInt MultiPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<Var> MultiPoly::variables() const {
    std::array<bool, 4> used{false, false, false, false};
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < 4; ++i)
            if (e[i] > 0) used[i] = true;
    std::vector<Var> out;
    for (std::size_t i = 0; i < 4; ++i)
        if (used[i]) out.push_back(static_cast<Var>(i));
    return out;
}

int MultiPoly::degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e[static_cast<std::size_t>(v)]);
    return d;
}

void MultiPoly::add_term(const ExpVec& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ExpVec e;
            for (std::size_t i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    MultiPoly out = constant(1);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

MultiPoly MultiPoly::specialize(const std::map<Var, MultiPoly>& bindings) const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        ExpVec rest = e;
        MultiPoly factor = constant(c);
        for (const auto& [v, value] : bindings) {
            int exp = rest[static_cast<std::size_t>(v)];
            if (exp > 0) {
                rest[static_cast<std::size_t>(v)] = 0;
                factor *= value.pow(exp);
            }
        }
        out += factor * monomial(rest, 1);
    }
    return out;
}

MultiPoly MultiPoly::specialize(const std::map<Var, BigInt>& bindings) const {
    std::map<Var, MultiPoly> polys;
    for (const auto& [v, c] : bindings) polys.emplace(v, constant(c));
    return specialize(polys);
}

MultiPoly MultiPoly::reduce_exponents(const std::map<Var, int>& orders) const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        ExpVec r = e;
        for (const auto& [v, d] : orders) {
            if (d <= 0) throw std::invalid_argument("orders must be positive");
            r[static_cast<std::size_t>(v)] %= d;
        }
        out.add_term(r, c);
    }
    return out;
}

BigInt MultiPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0)
        return terms_.begin()->second;
    throw std::domain_error("polynomial is not constant: " + render());
}

std::string MultiPoly::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += kVarNames[i];
            if (e[i] > 1) mono += '^' + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += a.str();
        } else if (a == 1) {
            out += mono;
        } else {
            out += a.str() + '*' + mono;
        }
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return s[i];
    }
    char take() {
        skip();
        return s[i++];
    }
    BigInt integer() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("expected integer in '" + s + "'");
        return BigInt(s.substr(start, i - start));
    }
    int small_integer() {
        BigInt v = integer();
        return static_cast<int>(v);
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
    Lexer lex{text};
    MultiPoly out;
    bool first = true;
    while (!lex.done()) {
        int sign = 1;
        if (lex.peek() == '+' || lex.peek() == '-') {
            sign = lex.take() == '-' ? -1 : 1;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in '" + text + "'");
        }
        first = false;
        BigInt coeff = sign;
        ExpVec e{0, 0, 0, 0};
        bool expect_factor = true;
        bool saw_factor = false;
        while (expect_factor) {
            if (lex.done())
                throw std::invalid_argument("dangling term in '" + text + "'");
            char c = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= lex.integer();
            } else {
                Var v = var_from_name(lex.take());
                int exp = 1;
                if (!lex.done() && lex.peek() == '^') {
                    lex.take();
                    exp = lex.small_integer();
                }
                e[static_cast<std::size_t>(v)] += exp;
            }
            saw_factor = true;
            expect_factor = !lex.done() && lex.peek() == '*';
            if (expect_factor) lex.take();
        }
        if (!saw_factor) throw std::invalid_argument("empty term in '" + text + "'");
        out.add_term(e, coeff);
    }
    return out;
}

}  // namespace qtk
