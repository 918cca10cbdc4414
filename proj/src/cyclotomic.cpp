#include "qtk/cyclotomic.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

#include "qtk/errors.hpp"

namespace qtk {

int euler_phi(int n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Quotient of exact polynomial division (ascending coefficients);
// requires the divisor to be monic and the division to be exact.
std::vector<BigInt> divide_exact(const std::vector<BigInt>& num,
                                 const std::vector<BigInt>& den) {
    std::vector<BigInt> rem = num;
    int dn = static_cast<int>(rem.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<BigInt> quot(static_cast<std::size_t>(dn - dd + 1), 0);
    for (int k = dn - dd; k >= 0; --k) {
        BigInt c = rem[static_cast<std::size_t>(k + dd)];
        quot[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * den[static_cast<std::size_t>(j)];
    }
    for (const BigInt& c : rem)
        if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

std::mutex g_phi_mutex;

const std::vector<BigInt>& phi_cached(int N) {
    static std::map<int, std::vector<BigInt>> cache;
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, cyclotomic_poly(N)).first;
    return it->second;
}

// Reduces an ascending-coefficient polynomial modulo the monic phi,
// in place; afterwards only the first deg(phi) entries are meaningful.
void reduce_mod(std::vector<BigInt>& raw, const std::vector<BigInt>& phi) {
    int d = static_cast<int>(phi.size()) - 1;
    for (int k = static_cast<int>(raw.size()) - 1 - d; k >= 0; --k) {
        BigInt c = raw[static_cast<std::size_t>(k + d)];
        if (c == 0) continue;
        for (int j = 0; j <= d; ++j)
            raw[static_cast<std::size_t>(k + j)] -= c * phi[static_cast<std::size_t>(j)];
    }
}

}  // namespace

std::vector<BigInt> cyclotomic_poly(int N) {
    if (N < 1) throw std::invalid_argument("cyclotomic_poly: N must be positive");
    // x^N - 1
    std::vector<BigInt> poly(static_cast<std::size_t>(N) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(N)] = 1;
    for (int d = 1; d < N; ++d)
        if (N % d == 0) poly = divide_exact(poly, cyclotomic_poly(d));
    return poly;
}

CyclotomicElement::CyclotomicElement(int N)
    : N_(N), coeffs_(static_cast<std::size_t>(euler_phi(N)), 0) {}

CyclotomicElement CyclotomicElement::from_integer(int N, BigInt c) {
    CyclotomicElement e(N);
    e.coeffs_[0] = std::move(c);
    return e;
}

CyclotomicElement CyclotomicElement::root_power(int N, long long e) {
    long long r = e % N;
    if (r < 0) r += N;
    const std::vector<BigInt>& phi = phi_cached(N);
    int deg = static_cast<int>(phi.size()) - 1;

    CyclotomicElement out(N);
    if (r < deg) {
        out.coeffs_[static_cast<std::size_t>(r)] = 1;
        return out;
    }
    std::vector<BigInt> raw(static_cast<std::size_t>(r) + 1, 0);
    raw[static_cast<std::size_t>(r)] = 1;
    reduce_mod(raw, phi);
    for (int j = 0; j < deg; ++j)
        out.coeffs_[static_cast<std::size_t>(j)] = raw[static_cast<std::size_t>(j)];
    return out;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
    if (N_ != o.N_) throw std::invalid_argument("conductor mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& o) {
    if (N_ != o.N_) throw std::invalid_argument("conductor mismatch");
    std::size_t deg = coeffs_.size();
    std::vector<BigInt> raw(2 * deg, 0);
    for (std::size_t i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (o.coeffs_[j] == 0) continue;
            raw[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    reduce_mod(raw, phi_cached(N_));
    for (std::size_t i = 0; i < deg; ++i) coeffs_[i] = raw[i];
    return *this;
}

bool CyclotomicElement::is_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

BigInt CyclotomicElement::integer_value() const {
    if (!is_integer())
        throw NonIntegerValue("cyclotomic element is not a rational integer");
    return coeffs_[0];
}

CyclotomicElement eval_in_ring(const MultiPoly& p, const RootAssignment& a) {
    long long N = 1;
    for (const auto& [v, root] : a) {
        if (root.order <= 0)
            throw std::invalid_argument("root orders must be positive");
        N = std::lcm(N, static_cast<long long>(root.order));
    }
    for (Var v : p.variables())
        if (!a.count(v))
            throw std::invalid_argument(std::string("unbound variable '") +
                                        kVarNames[static_cast<std::size_t>(v)] + "'");
    int conductor = static_cast<int>(N);
    CyclotomicElement acc(conductor);
    for (const auto& [e, c] : p.terms()) {
        long long power = 0;
        for (const auto& [v, root] : a) {
            long long exp = ((root.exponent % root.order) + root.order) % root.order;
            long long step = (N / root.order) * exp % N;
            power = (power + step * (e[static_cast<std::size_t>(v)] % N)) % N;
        }
        acc += CyclotomicElement::from_integer(conductor, c) *
               CyclotomicElement::root_power(conductor, power);
    }
    return acc;
}

BigInt eval_at_roots(const MultiPoly& p, const RootAssignment& a) {
    return eval_in_ring(p, a).integer_value();
}

MultiPoly reduce_exponents(const MultiPoly& p, const std::map<Var, int>& orders) {
    return p.reduce_exponents(orders);
}

}  // namespace qtk
