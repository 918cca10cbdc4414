#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qtk/bigint.hpp"

namespace qtk {

// The variable universe is fixed: q, t, z, w in that significance order.
enum class Var : int { q = 0, t = 1, z = 2, w = 3 };

inline constexpr std::array<char, 4> kVarNames = {'q', 't', 'z', 'w'};

Var var_from_name(char name);

// Exponent vector, one slot per variable in q,t,z,w order.
using ExpVec = std::array<int, 4>;

inline int total_degree(const ExpVec& e) { return e[0] + e[1] + e[2] + e[3]; }

// Canonical term order: ascending total degree, then descending
// lexicographic with q most significant. "3 + q*z + t*z + q*t*z" is in
// this order.
struct TermOrder {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a > b;
    }
};

// Sparse polynomial over Z in q, t, z, w. Zero coefficients are never
// stored; the term map iterates in canonical order.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, BigInt, TermOrder>;

    MultiPoly() = default;  // zero
    static MultiPoly constant(BigInt c);
    static MultiPoly variable(Var v, int exp = 1);
    static MultiPoly monomial(const ExpVec& e, BigInt c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    BigInt coeff(const ExpVec& e) const;
    // Variables with a nonzero exponent in some term, in q,t,z,w order.
    std::vector<Var> variables() const;
    int degree(Var v) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const BigInt& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const BigInt& c) { return a *= c; }
    MultiPoly operator-() const;
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    // Substitutes the bound variables (by integers or polynomials) and
    // renormalizes; unbound variables persist.
    MultiPoly specialize(const std::map<Var, MultiPoly>& bindings) const;
    MultiPoly specialize(const std::map<Var, BigInt>& bindings) const;

    // Replaces each exponent e of a variable with declared order d by
    // e mod d; variables without a declared order are left alone.
    MultiPoly reduce_exponents(const std::map<Var, int>& orders) const;

    // Value of a constant polynomial; throws std::domain_error otherwise.
    BigInt constant_value() const;

    // Renders as "3 + q*z + t*z + q*t*z" in canonical term order.
    std::string render() const;
    // Inverse of render; accepts any sum of integer monomials in q,t,z,w.
    static MultiPoly parse(const std::string& text);

    MultiPoly pow(int e) const;

private:
    void add_term(const ExpVec& e, const BigInt& c);
    TermMap terms_;
};

}  // namespace qtk
