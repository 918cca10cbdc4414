#include "qtk/garsia_haiman.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qtk/errors.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/tableaux.hpp"

namespace qtk {

std::pair<int, int> DiagonalPoly::bidegree() const {
    if (terms.empty()) return {0, 0};
    int dx = 0, dy = 0;
    bool first = true;
    for (const auto& [e, c] : terms) {
        int tx = 0, ty = 0;
        for (int i = 0; i < n; ++i) {
            tx += e[static_cast<std::size_t>(i)];
            ty += e[static_cast<std::size_t>(n + i)];
        }
        if (first) {
            dx = tx;
            dy = ty;
            first = false;
        } else if (tx != dx || ty != dy) {
            throw std::logic_error("bidegree: polynomial is not bihomogeneous");
        }
    }
    return {dx, dy};
}

DiagonalPoly delta_mu(const Partition& mu, int size_bound) {
    int n = mu.size();
    if (n > size_bound)
        throw SizeBound("delta_mu: n = " + std::to_string(n) + " exceeds bound " +
                        std::to_string(size_bound));
    const std::vector<Cell> cells = cells_of(mu);
    DiagonalPoly out;
    out.n = n;
    if (n == 0) {
        out.terms.emplace(std::vector<int>{}, 1);
        return out;
    }
    // expand the determinant over permutations
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        std::vector<int> exp(static_cast<std::size_t>(2 * n), 0);
        for (int i = 0; i < n; ++i) {
            Cell c = cells[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            exp[static_cast<std::size_t>(i)] = c.x;
            exp[static_cast<std::size_t>(n + i)] = c.y;
        }
        BigInt sign = inversions % 2 ? -1 : 1;
        auto [it, inserted] = out.terms.emplace(std::move(exp), sign);
        if (!inserted) {
            it->second += sign;
            if (it->second == 0) out.terms.erase(it);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

DiagonalPoly derivative(const DiagonalPoly& p, int var) {
    if (var < 0 || var >= 2 * p.n)
        throw std::invalid_argument("derivative: variable index out of range");
    DiagonalPoly out;
    out.n = p.n;
    for (const auto& [e, c] : p.terms) {
        int k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        std::vector<int> ne = e;
        ne[static_cast<std::size_t>(var)] = k - 1;
        auto [it, inserted] = out.terms.emplace(std::move(ne), c * k);
        if (!inserted) it->second += c * k;
    }
    return out;
}

std::int64_t BigradedHilbert::total() const {
    std::int64_t t = 0;
    for (const auto& [de, d] : dims) t += d;
    return t;
}

MultiPoly BigradedHilbert::to_poly() const {
    MultiPoly out;
    for (const auto& [de, d] : dims)
        out += MultiPoly::monomial(ExpVec{de.first, de.second, 0, 0}, d);
    return out;
}

namespace {

// Rank of an integer matrix by Bareiss fraction-free elimination.
std::int64_t bareiss_rank(std::vector<std::vector<BigInt>>& a) {
    std::size_t rows = a.size();
    if (rows == 0) return 0;
    std::size_t cols = a[0].size();
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<std::int64_t>(r);
}

}  // namespace

std::int64_t span_rank(const std::vector<DiagonalPoly>& polys) {
    std::map<std::vector<int>, std::size_t> column_of;
    for (const DiagonalPoly& p : polys)
        for (const auto& [e, c] : p.terms) column_of.emplace(e, column_of.size());
    if (column_of.empty()) return 0;
    std::vector<std::vector<BigInt>> matrix(
        polys.size(), std::vector<BigInt>(column_of.size(), 0));
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (const auto& [e, c] : polys[i].terms)
            matrix[i][column_of.at(e)] = c;
    return bareiss_rank(matrix);
}

namespace {

// All weak compositions of total into len parts.
void weak_compositions(int total, int len, std::vector<int>& acc,
                       const std::function<void(const std::vector<int>&)>& fn) {
    if (len == 1) {
        acc.push_back(total);
        fn(acc);
        acc.pop_back();
        return;
    }
    for (int first = total; first >= 0; --first) {
        acc.push_back(first);
        weak_compositions(total - first, len - 1, acc, fn);
        acc.pop_back();
    }
}

// Applies the operator d^alpha then d^beta (x then y orders) to p.
DiagonalPoly apply_operator(const DiagonalPoly& p, const std::vector<int>& alpha,
                            const std::vector<int>& beta) {
    DiagonalPoly out;
    out.n = p.n;
    int n = p.n;
    for (const auto& [e, c] : p.terms) {
        BigInt coeff = c;
        std::vector<int> ne = e;
        bool dead = false;
        for (int i = 0; i < 2 * n && !dead; ++i) {
            int ord = i < n ? alpha[static_cast<std::size_t>(i)]
                            : beta[static_cast<std::size_t>(i - n)];
            if (ord == 0) continue;
            int exp = ne[static_cast<std::size_t>(i)];
            if (exp < ord) {
                dead = true;
                break;
            }
            for (int k = 0; k < ord; ++k) coeff *= exp - k;
            ne[static_cast<std::size_t>(i)] = exp - ord;
        }
        if (dead) continue;
        auto [it, inserted] = out.terms.emplace(std::move(ne), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

}  // namespace

BigradedHilbert gh_hilbert(const Partition& mu, int size_bound) {
    int n = mu.size();
    if (n > size_bound)
        throw SizeBound("gh_hilbert: n = " + std::to_string(n) + " exceeds bound " +
                        std::to_string(size_bound));
    DiagonalPoly delta = delta_mu(mu, size_bound);
    auto [dx, dy] = delta.bidegree();

    BigradedHilbert hilb;
    if (n == 0) {
        hilb.dims.emplace(std::make_pair(0, 0), 1);
        return hilb;
    }
    for (int ox = 0; ox <= dx; ++ox) {
        std::vector<std::vector<int>> alphas;
        {
            std::vector<int> acc;
            weak_compositions(ox, n, acc,
                              [&](const std::vector<int>& a) { alphas.push_back(a); });
        }
        for (int oy = 0; oy <= dy; ++oy) {
            std::vector<std::vector<int>> betas;
            {
                std::vector<int> acc;
                weak_compositions(oy, n, acc,
                                  [&](const std::vector<int>& b) { betas.push_back(b); });
            }
            // spanning set of the (dx-ox, dy-oy) slice
            std::vector<DiagonalPoly> span;
            std::map<std::vector<int>, std::size_t> column_of;
            for (const auto& alpha : alphas)
                for (const auto& beta : betas) {
                    DiagonalPoly d = apply_operator(delta, alpha, beta);
                    if (d.is_zero()) continue;
                    for (const auto& [e, c] : d.terms)
                        column_of.emplace(e, column_of.size());
                    span.push_back(std::move(d));
                }
            if (span.empty()) continue;
            std::vector<std::vector<BigInt>> matrix(
                span.size(), std::vector<BigInt>(column_of.size(), 0));
            for (std::size_t i = 0; i < span.size(); ++i)
                for (const auto& [e, c] : span[i].terms)
                    matrix[i][column_of.at(e)] = c;
            std::int64_t rank = bareiss_rank(matrix);
            if (rank > 0)
                hilb.dims.emplace(std::make_pair(dx - ox, dy - oy), rank);
        }
    }
    return hilb;
}

const char* orientation_name(GhOrientation o) {
    switch (o) {
        case GhOrientation::exact: return "exact";
        case GhOrientation::swapped: return "swapped";
        case GhOrientation::both: return "both";
    }
    throw std::logic_error("unreachable");
}

GhCrosscheck gh_crosscheck(const Partition& mu, int size_bound) {
    GhCrosscheck out;
    out.mu = mu;
    out.hilbert = gh_hilbert(mu, size_bound).to_poly();

    const QtKostkaTable& table = qt_kostka(mu);
    MultiPoly sum;
    for (const auto& [lambda, k] : table.entries)
        sum += k * BigInt(syt_count(lambda));
    out.macdonald_sum = sum;

    const std::map<Var, MultiPoly> swap_qt{{Var::q, MultiPoly::variable(Var::t)},
                                           {Var::t, MultiPoly::variable(Var::q)}};
    bool exact = out.hilbert == sum;
    bool swapped = out.hilbert == sum.specialize(swap_qt);
    if (exact && swapped)
        out.matched = GhOrientation::both;
    else if (exact)
        out.matched = GhOrientation::exact;
    else if (swapped)
        out.matched = GhOrientation::swapped;
    else
        throw CrosscheckMismatch("gh_crosscheck: no orientation matches for mu = " +
                                 mu.to_string() + ": hilbert " + out.hilbert.render() +
                                 " vs " + sum.render());
    return out;
}

}  // namespace qtk
