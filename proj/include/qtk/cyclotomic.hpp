#pragma once

#include <map>
#include <vector>

#include "qtk/bigint.hpp"
#include "qtk/multipoly.hpp"

namespace qtk {

int euler_phi(int n);

// Coefficients of the N-th cyclotomic polynomial, ascending degree,
// monic of degree euler_phi(N). Computed by dividing x^N - 1 by Phi_d
// over the proper divisors d of N.
std::vector<BigInt> cyclotomic_poly(int N);

// Element of Z[x]/Phi_N(x), stored on the power basis 1, x, ..,
// x^(phi(N)-1). x is a primitive N-th root of unity, so x^N = 1.
class CyclotomicElement {
public:
    explicit CyclotomicElement(int N);
    static CyclotomicElement from_integer(int N, BigInt c);
    // x^(e mod N), reduced.
    static CyclotomicElement root_power(int N, long long e);

    int conductor() const { return N_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    CyclotomicElement& operator+=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const CyclotomicElement& o);
    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) {
        return a += b;
    }
    friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) {
        return a *= b;
    }
    friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;

    // Rational integer iff every coordinate past the constant one vanishes.
    bool is_integer() const;
    // Throws NonIntegerValue when is_integer() fails.
    BigInt integer_value() const;

private:
    int N_;
    std::vector<BigInt> coeffs_;  // length euler_phi(N)
};

// variable -> zeta_order^exponent
struct RootOfUnity {
    int order = 1;
    long long exponent = 0;
};
using RootAssignment = std::map<Var, RootOfUnity>;

// Image of p in Z[x]/Phi_N with N = lcm of all orders in the assignment;
// each variable maps to x^((N/order)*exponent). Every variable occurring
// in p must be bound.
CyclotomicElement eval_in_ring(const MultiPoly& p, const RootAssignment& a);

// eval_in_ring followed by the integrality projection; throws
// NonIntegerValue when the reduced result is not a rational integer.
BigInt eval_at_roots(const MultiPoly& p, const RootAssignment& a);

// Free-function spelling of MultiPoly::reduce_exponents: exponents taken
// mod the per-variable orders. eval_at_roots is invariant under it.
MultiPoly reduce_exponents(const MultiPoly& p, const std::map<Var, int>& orders);

}  // namespace qtk
