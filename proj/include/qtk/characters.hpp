#pragma once

#include <cstdint>

#include "qtk/bigint.hpp"
#include "qtk/partition.hpp"

namespace qtk {

// A partition of n read as the cycle type of a class in S_n.
using CycleType = Partition;

// chi^lambda on the class of cycle type rho, by the Murnaghan-Nakayama
// border-strip recursion (beta-number form). Throws std::invalid_argument
// when |lambda| != |rho|.
std::int64_t character_value(const Partition& lambda, const CycleType& rho);

// z_rho = prod_i i^{m_i} m_i!; the class size is n!/z_rho.
BigInt centralizer_order(const CycleType& rho);

// Cycle type of c^r for the long cycle c = (1,2,...,n):
// gcd(n,r) cycles of length n/gcd(n,r).
CycleType long_cycle_power_type(int n, int r);

// g^{(n)}_{mu,nu} via character orthogonality:
// (1/n!) sum over classes of |class| chi^mu chi^nu chi^{(n)}.
BigInt kronecker_with_trivial(const Partition& mu, const Partition& nu);

}  // namespace qtk
