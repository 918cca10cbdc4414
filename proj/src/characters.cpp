#include "qtk/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qtk {

namespace {

std::int64_t mn_recurse(const std::vector<int>& lambda,
                        const std::vector<int>& rho, std::size_t ri) {
    if (ri == rho.size()) return lambda.empty() ? 1 : 0;
    int k = rho[ri];
    // beta numbers: lambda_i + (L - 1 - i), strictly decreasing
    int L = static_cast<int>(lambda.size());
    if (L == 0) return 0;
    std::vector<int> beta(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i)
        beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (L - 1 - i);
    std::int64_t total = 0;
    for (int i = 0; i < L; ++i) {
        int nb = beta[static_cast<std::size_t>(i)] - k;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        // strip height = number of beta entries passed over
        int jumped = 0;
        for (int b : beta)
            if (nb < b && b < beta[static_cast<std::size_t>(i)]) ++jumped;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<std::size_t>(i)] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nlambda;
        for (int j = 0; j < L; ++j) {
            int part = nbeta[static_cast<std::size_t>(j)] - (L - 1 - j);
            if (part > 0) nlambda.push_back(part);
        }
        std::int64_t sub = mn_recurse(nlambda, rho, ri + 1);
        total += (jumped % 2 ? -sub : sub);
    }
    return total;
}

}  // namespace

std::int64_t character_value(const Partition& lambda, const CycleType& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("character_value: |lambda| != |rho|");
    return mn_recurse(lambda.parts(), rho.parts(), 0);
}

BigInt centralizer_order(const CycleType& rho) {
    BigInt z = 1;
    const std::vector<int>& parts = rho.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        int mult = static_cast<int>(j - i);
        for (int k = 1; k <= mult; ++k) z *= parts[i] * k;
        i = j;
    }
    return z;
}

CycleType long_cycle_power_type(int n, int r) {
    if (n <= 0) throw std::invalid_argument("long_cycle_power_type: n must be positive");
    int g = r == 0 ? n : std::gcd(n, r);
    std::vector<int> parts(static_cast<std::size_t>(g), n / g);
    return CycleType(std::move(parts));
}

BigInt kronecker_with_trivial(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size())
        throw std::invalid_argument("kronecker_with_trivial: sizes differ");
    int n = mu.size();
    BigInt nfact = factorial(n);
    BigInt sum = 0;
    for (const Partition& rho : partitions_of(n)) {
        BigInt class_size = nfact / centralizer_order(rho);
        sum += class_size * character_value(mu, rho) * character_value(nu, rho);
    }
    if (sum % nfact != 0)
        throw std::logic_error("kronecker_with_trivial: sum not divisible by n!");
    return sum / nfact;
}

}  // namespace qtk
