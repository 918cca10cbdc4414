#include "qtk/checks.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "qtk/characters.hpp"
#include "qtk/csp.hpp"
#include "qtk/cyclotomic.hpp"
#include "qtk/garsia_haiman.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/tableaux.hpp"

namespace qtk {

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

namespace {

// Runs a predicate-style body that reports the first failure as a string;
// empty string means pass.
CheckResult check(const std::string& name, const std::function<std::string()>& body) {
    try {
        std::string detail = body();
        return CheckResult{name, detail.empty(), detail};
    } catch (const std::exception& e) {
        return CheckResult{name, false, std::string("exception: ") + e.what()};
    }
}

BigInt at_ones(const MultiPoly& p) {
    std::map<Var, BigInt> ones{
        {Var::q, 1}, {Var::t, 1}, {Var::z, 1}, {Var::w, 1}};
    return p.specialize(ones).constant_value();
}

std::vector<std::vector<int>> rearrangements(const Partition& nu) {
    std::vector<int> parts = nu.parts();
    std::sort(parts.begin(), parts.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

}  // namespace

std::vector<CheckResult> run_combinatorics_checks(int max_n) {
    std::vector<CheckResult> out;
    out.push_back(check("partition enumeration count and order", [&]() -> std::string {
        for (int n = 0; n <= max_n + 2; ++n) {
            std::vector<Partition> parts = partitions_of(n);
            if (static_cast<std::int64_t>(parts.size()) != partition_count(n))
                return "count mismatch at n=" + std::to_string(n);
            for (std::size_t i = 1; i < parts.size(); ++i)
                if (!(parts[i] < parts[i - 1]))
                    return "order violation at n=" + std::to_string(n);
        }
        return "";
    }));
    out.push_back(check("conjugation is an involution", [&]() -> std::string {
        for (int n = 0; n <= max_n + 2; ++n)
            for (const Partition& lam : partitions_of(n))
                if (conjugate(conjugate(lam)) != lam) return lam.to_string();
        return "";
    }));
    out.push_back(check("fake degree at 1 = chi(identity) = #SYT", [&]() -> std::string {
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& lam : partitions_of(n)) {
                BigInt f1 = at_ones(fake_degree(lam));
                std::int64_t syt = syt_count(lam);
                std::int64_t chi = character_value(lam, long_cycle_power_type(n, 0));
                if (f1 != syt || chi != syt) return lam.to_string();
            }
        return "";
    }));
    out.push_back(check("sum of #SYT^2 = n!", [&]() -> std::string {
        for (int n = 1; n <= std::min(max_n + 1, 7); ++n) {
            BigInt sum = 0;
            for (const Partition& lam : partitions_of(n)) {
                BigInt f = syt_count(lam);
                sum += f * f;
            }
            if (sum != factorial(n)) return "n=" + std::to_string(n);
        }
        return "";
    }));
    out.push_back(check("Kostka invariance under content rearrangement", [&]() -> std::string {
        for (int n = 1; n <= std::min(max_n, 5); ++n)
            for (const Partition& lam : partitions_of(n))
                for (const Partition& nu : partitions_of(n)) {
                    std::int64_t base = kostka_number(lam, Composition(nu));
                    for (const std::vector<int>& re : rearrangements(nu))
                        if (kostka_number(lam, Composition(re)) != base)
                            return lam.to_string() + " / " + nu.to_string();
                }
        return "";
    }));
    out.push_back(check("Kostka dominance triangularity, K(lambda,lambda)=1", [&]() -> std::string {
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& lam : partitions_of(n)) {
                if (kostka_number(lam, Composition(lam)) != 1) return lam.to_string();
                for (const Partition& nu : partitions_of(n)) {
                    std::int64_t k = kostka_number(lam, Composition(nu));
                    if (k != 0 && !dominance_leq(nu, lam))
                        return lam.to_string() + " / " + nu.to_string();
                }
            }
        return "";
    }));
    out.push_back(check("cocharge Kostka at 1 = Kostka number", [&]() -> std::string {
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& lam : partitions_of(n))
                for (const Partition& nu : partitions_of(n)) {
                    BigInt v = at_ones(cocharge_kostka(lam, Composition(nu)));
                    if (v != kostka_number(lam, Composition(nu)))
                        return lam.to_string() + " / " + nu.to_string();
                }
        return "";
    }));
    return out;
}

std::vector<CheckResult> run_polyring_checks(int max_conductor, int trials,
                                             unsigned seed) {
    std::vector<CheckResult> out;
    out.push_back(check("cyclotomic degree and product identities", [&]() -> std::string {
        for (int n = 1; n <= max_conductor; ++n) {
            std::vector<BigInt> phi = cyclotomic_poly(n);
            if (static_cast<int>(phi.size()) - 1 != euler_phi(n))
                return "degree at N=" + std::to_string(n);
            if (phi.back() != 1) return "not monic at N=" + std::to_string(n);
            // multiply Phi_d over all divisors, compare against x^N - 1
            std::vector<BigInt> prod{1};
            for (int d = 1; d <= n; ++d) {
                if (n % d != 0) continue;
                std::vector<BigInt> f = cyclotomic_poly(d);
                std::vector<BigInt> next(prod.size() + f.size() - 1, 0);
                for (std::size_t i = 0; i < prod.size(); ++i)
                    for (std::size_t j = 0; j < f.size(); ++j)
                        next[i + j] += prod[i] * f[j];
                prod = std::move(next);
            }
            if (static_cast<int>(prod.size()) != n + 1 || prod[0] != -1 ||
                prod.back() != 1)
                return "product at N=" + std::to_string(n);
            for (std::size_t i = 1; i + 1 < prod.size(); ++i)
                if (prod[i] != 0) return "product at N=" + std::to_string(n);
        }
        return "";
    }));

    std::mt19937 rng(seed);
    auto random_poly = [&rng]() {
        std::uniform_int_distribution<int> nterms(1, 6), expd(0, 4), coeffd(-5, 5);
        MultiPoly p;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) {
            ExpVec e{expd(rng), expd(rng), expd(rng), expd(rng)};
            p += MultiPoly::monomial(e, coeffd(rng));
        }
        return p;
    };
    auto random_assignment = [&rng]() {
        std::uniform_int_distribution<int> orderd(1, 6);
        std::uniform_int_distribution<long long> expo(0, 11);
        RootAssignment a;
        for (Var v : {Var::q, Var::t, Var::z, Var::w})
            a.emplace(v, RootOfUnity{orderd(rng), expo(rng)});
        return a;
    };
    out.push_back(check("eval_at_roots is a ring homomorphism", [&]() -> std::string {
        for (int i = 0; i < trials; ++i) {
            MultiPoly p = random_poly(), r = random_poly();
            RootAssignment a = random_assignment();
            if (eval_in_ring(p + r, a) != eval_in_ring(p, a) + eval_in_ring(r, a))
                return "additivity, trial " + std::to_string(i);
            if (eval_in_ring(p * r, a) != eval_in_ring(p, a) * eval_in_ring(r, a))
                return "multiplicativity, trial " + std::to_string(i);
        }
        return "";
    }));
    out.push_back(check("eval invariant under reduce_exponents", [&]() -> std::string {
        for (int i = 0; i < trials; ++i) {
            MultiPoly p = random_poly();
            RootAssignment a = random_assignment();
            std::map<Var, int> orders;
            for (const auto& [v, root] : a) orders.emplace(v, root.order);
            if (eval_in_ring(p, a) != eval_in_ring(reduce_exponents(p, orders), a))
                return "trial " + std::to_string(i);
        }
        return "";
    }));
    out.push_back(check("parse/render round trip", [&]() -> std::string {
        for (int i = 0; i < trials; ++i) {
            MultiPoly p = random_poly();
            if (MultiPoly::parse(p.render()) != p)
                return "trial " + std::to_string(i) + ": " + p.render();
        }
        return "";
    }));
    return out;
}

std::vector<CheckResult> run_macdonald_checks(int max_n) {
    std::vector<CheckResult> out;
    out.push_back(check("normalization K[(n)] = 1", [&]() -> std::string {
        for (int n = 1; n <= max_n + 1; ++n)
            for (const Partition& mu : partitions_of(n))
                if (qt_kostka(mu).entries.at(Partition(std::vector<int>{n})) !=
                    MultiPoly::constant(1))
                    return mu.to_string();
        return "";
    }));
    out.push_back(check("K(1,1) = #SYT and dimension n!", [&]() -> std::string {
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& mu : partitions_of(n)) {
                BigInt dim = 0;
                for (const auto& [lambda, k] : qt_kostka(mu).entries) {
                    BigInt v = at_ones(k);
                    std::int64_t f = syt_count(lambda);
                    if (v != f) return mu.to_string() + " / " + lambda.to_string();
                    dim += v * f;
                }
                if (dim != factorial(n)) return mu.to_string();
            }
        return "";
    }));
    out.push_back(check("conjugation symmetry K(q,t) = K'(t,q)", [&]() -> std::string {
        const std::map<Var, MultiPoly> swap_qt{{Var::q, MultiPoly::variable(Var::t)},
                                               {Var::t, MultiPoly::variable(Var::q)}};
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& mu : partitions_of(n)) {
                const QtKostkaTable& a = qt_kostka(mu);
                const QtKostkaTable& b = qt_kostka(conjugate(mu));
                for (const auto& [lambda, k] : a.entries)
                    if (k != b.entries.at(lambda).specialize(swap_qt))
                        return mu.to_string() + " / " + lambda.to_string();
            }
        return "";
    }));
    out.push_back(check("coefficients are nonnegative", [&]() -> std::string {
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& mu : partitions_of(n))
                for (const auto& [lambda, k] : qt_kostka(mu).entries)
                    for (const auto& [e, c] : k.terms())
                        if (c < 0) return mu.to_string() + " / " + lambda.to_string();
        return "";
    }));
    out.push_back(check("Hall-Littlewood oracle: t=0 equals cocharge", [&]() -> std::string {
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& nu : partitions_of(n)) {
                std::map<Partition, MultiPoly> hl = hl_kostka(Composition(nu));
                for (const Partition& lambda : partitions_of(n))
                    if (hl.at(lambda) != cocharge_kostka(lambda, Composition(nu)))
                        return nu.to_string() + " / " + lambda.to_string();
            }
        return "";
    }));
    out.push_back(check("monomial coefficient is content independent", [&]() -> std::string {
        for (int n = 1; n <= std::min(max_n, 5); ++n)
            for (const Partition& mu : partitions_of(n))
                for (const Partition& nu : partitions_of(n)) {
                    MultiPoly base = monomial_coeff(mu, Composition(nu));
                    for (const std::vector<int>& re : rearrangements(nu))
                        if (monomial_coeff(mu, Composition(re)) != base)
                            return mu.to_string() + " / " + nu.to_string();
                }
        return "";
    }));
    return out;
}

std::vector<CheckResult> run_springer_checks(int max_n) {
    std::vector<CheckResult> out;
    out.push_back(check("chi(c^r) = fake degree at zeta^r", [&]() -> std::string {
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& lam : partitions_of(n)) {
                MultiPoly f = fake_degree(lam);
                for (int r = 0; r < n; ++r) {
                    BigInt ev = eval_at_roots(f, {{Var::z, {n, r}}});
                    if (ev != character_value(lam, long_cycle_power_type(n, r)))
                        return lam.to_string() + " r=" + std::to_string(r);
                }
            }
        return "";
    }));
    return out;
}

std::vector<CheckResult> run_kronecker_checks(int max_n) {
    std::vector<CheckResult> out;
    out.push_back(check("g^{(n)}(mu,nu) = delta(mu,nu)", [&]() -> std::string {
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& mu : partitions_of(n))
                for (const Partition& nu : partitions_of(n)) {
                    BigInt g = kronecker_with_trivial(mu, nu);
                    if (g != (mu == nu ? 1 : 0))
                        return mu.to_string() + " / " + nu.to_string();
                }
        return "";
    }));
    return out;
}

std::vector<CheckResult> run_csp_structure_checks(int max_cells) {
    std::vector<CheckResult> out;
    out.push_back(check("action laws: composition, orders, commutation", [&]() -> std::string {
        for (int n = 1; n <= 3; ++n)
            for (int m = 1; m <= 3; ++m) {
                if (n * m > max_cells || n * m > 6) continue;
                Composition nu(std::vector<int>(static_cast<std::size_t>(n * m), 1));
                std::vector<ContentMatrix> mats = enumerate_matrices(n, m, nu);
                int L = n * m;
                for (const ContentMatrix& M : mats) {
                    GroupElement3 g{1, 1, 1}, h{n - 1, m - 1, L - 1};
                    ContentMatrix lhs =
                        apply_action(apply_action(M, g, 1, L), h, 1, L);
                    ContentMatrix rhs = apply_action(
                        M, GroupElement3{(g.r + h.r) % n, (g.s + h.s) % m, (g.k + h.k) % L},
                        1, L);
                    if (lhs != rhs) return "composition law";
                    if (apply_action(M, GroupElement3{n, 0, 0}, 1, L) != M)
                        return "row order";
                    if (apply_action(M, GroupElement3{0, m, 0}, 1, L) != M)
                        return "column order";
                    if (apply_action(M, GroupElement3{0, 0, L}, 1, L) != M)
                        return "translation order";
                }
            }
        return "";
    }));
    out.push_back(check("Burnside orbit count is an integer", [&]() -> std::string {
        for (int n = 1; n <= 2; ++n)
            for (int m = 1; m <= 3; ++m) {
                if (n * m > max_cells) continue;
                for (const Partition& nup : partitions_of(n * m)) {
                    Composition nu(nup);
                    int L = nu.length();
                    BigInt total = 0;
                    for (int r = 0; r < n; ++r)
                        for (int s = 0; s < m; ++s)
                            for (int k = 0; k < L; ++k)
                                total += fixed_point_count(n, m, nu, 1,
                                                           GroupElement3{r, s, k});
                    if (total % (n * m * L) != 0)
                        return "nu=" + nu.to_string();
                }
            }
        return "";
    }));
    out.push_back(check("phi round trip and equivariance", [&]() -> std::string {
        for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
            int l = n * m;
            if (l > max_cells) continue;
            for (const PermutationMatrix& P : enumerate_permutations(l)) {
                if (phi_inv(phi(P, n, m)) != P) return "round trip";
                for (int r = 0; r < n; ++r)
                    for (int s = 0; s < m; ++s)
                        for (int k = 0; k < l; ++k) {
                            ContentMatrix img = apply_action(
                                phi(P, n, m), GroupElement3{r, s, k}, 1, l);
                            // transported action: blocks (n,m) on rows,
                            // column shift k as internal rotation with a=l
                            PermutationMatrix direct = perm_action(
                                P, GroupElement4{r, s, 0, k}, n, m, 1, l);
                            if (phi_inv(img) != direct) return "equivariance";
                        }
            }
        }
        return "";
    }));
    out.push_back(check("translation validity against symmetry orders", [&]() -> std::string {
        Composition nu(std::vector<int>{2, 1, 2, 1});
        std::vector<int> orders = symmetry_orders(nu);
        if (orders != std::vector<int>{2, 4}) return "symmetry orders of (2,1,2,1)";
        for (int a = 1; a <= 4; ++a) {
            bool symmetric = std::find(orders.begin(), orders.end(), a) != orders.end();
            ContentMatrix M{2, 3, {1, 1, 2, 3, 3, 4}};
            ContentMatrix shifted = apply_action(M, GroupElement3{0, 0, 1}, a, 4);
            bool preserved = content_of(shifted, 4) == nu.parts();
            if (symmetric != preserved) return "a=" + std::to_string(a);
        }
        return "";
    }));
    return out;
}

std::vector<CheckResult> run_theorem_checks(int max_cells) {
    std::vector<CheckResult> out;
    out.push_back(check("rectangular triCSP sweep", [&]() -> std::string {
        for (int n = 1; n * 1 <= max_cells; ++n)
            for (int m = 1; n * m <= max_cells; ++m) {
                CspReport rep =
                    verify_csp(CspKind::rect3, CspParams{.m = m, .n = n}, max_cells);
                if (!rep.all_match) return rep.params;
            }
        return "";
    }));
    out.push_back(check("content biCSP sweep", [&]() -> std::string {
        for (int n = 1; n <= max_cells; ++n)
            for (int m = 1; n * m <= max_cells; ++m)
                for (const Partition& nup : partitions_of(n * m)) {
                    CspParams p{.m = m, .n = n, .nu = Composition(nup), .a = 1, .b = 1};
                    CspReport rep = verify_csp(CspKind::content2, p, max_cells);
                    if (!rep.all_match) return rep.params;
                }
        return "";
    }));
    out.push_back(check("content triCSP sweep", [&]() -> std::string {
        for (int n = 1; n <= max_cells; ++n)
            for (int m = 1; n * m <= max_cells; ++m)
                for (const Composition& nu : compositions_of(n * m))
                    for (int a : symmetry_orders(nu)) {
                        CspParams p{.m = m, .n = n, .nu = nu, .a = a, .b = 1};
                        CspReport rep = verify_csp(CspKind::content3, p, max_cells);
                        if (!rep.all_match) return rep.params;
                    }
        return "";
    }));
    out.push_back(check("permutation quadraCSP sweep", [&]() -> std::string {
        for (int l = 1; l <= std::min(max_cells, 6); ++l) {
            if (l > 4 && l != 6) continue;  // keep the sweep desk-scale
            for (int n = 1; n <= l; ++n) {
                if (l % n != 0) continue;
                for (int b = 1; b <= l; ++b) {
                    if (l % b != 0) continue;
                    CspParams p{.m = l / n, .n = n, .nu = {}, .a = l / b, .b = b};
                    CspReport rep = verify_csp(CspKind::perm4, p, max_cells);
                    if (!rep.all_match) return rep.params;
                }
            }
        }
        return "";
    }));
    return out;
}

std::vector<CheckResult> run_gh_checks(int max_n) {
    std::vector<CheckResult> out;
    out.push_back(check("dim H_mu = n!", [&]() -> std::string {
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& mu : partitions_of(n))
                if (gh_hilbert(mu, max_n).total() != factorial(n))
                    return mu.to_string();
        return "";
    }));
    out.push_back(check("conjugate shape swaps the two gradings", [&]() -> std::string {
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& mu : partitions_of(n)) {
                BigradedHilbert a = gh_hilbert(mu, max_n);
                BigradedHilbert b = gh_hilbert(conjugate(mu), max_n);
                for (const auto& [de, dim] : a.dims) {
                    auto it = b.dims.find({de.second, de.first});
                    if (it == b.dims.end() || it->second != dim) return mu.to_string();
                }
            }
        return "";
    }));
    out.push_back(check("crosscheck against Kostka-table sum", [&]() -> std::string {
        bool swapped_ok = true, exact_ok = true;
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& mu : partitions_of(n)) {
                GhCrosscheck rec = gh_crosscheck(mu, max_n);
                if (rec.matched == GhOrientation::exact) swapped_ok = false;
                if (rec.matched == GhOrientation::swapped) exact_ok = false;
            }
        if (!swapped_ok && !exact_ok) return "no single global orientation";
        return "";
    }));
    out.push_back(check("derivative closure stabilizes", [&]() -> std::string {
        for (int n = 1; n <= std::min(max_n, 3); ++n)
            for (const Partition& mu : partitions_of(n)) {
                // grow the span by single derivatives until the rank stops
                // moving, then compare against the per-slice construction
                DiagonalPoly delta = delta_mu(mu, max_n);
                std::vector<DiagonalPoly> closure{delta};
                std::int64_t rank = span_rank(closure);
                for (;;) {
                    std::size_t sz = closure.size();
                    for (std::size_t i = 0; i < sz; ++i)
                        for (int v = 0; v < 2 * n; ++v) {
                            DiagonalPoly d = derivative(closure[i], v);
                            if (!d.is_zero() &&
                                std::find(closure.begin(), closure.end(), d) ==
                                    closure.end())
                                closure.push_back(std::move(d));
                        }
                    std::int64_t next = span_rank(closure);
                    if (closure.size() == sz || next == rank) {
                        rank = next;
                        break;
                    }
                    rank = next;
                }
                if (rank != gh_hilbert(mu, max_n).total()) return mu.to_string();
            }
        return "";
    }));
    return out;
}

}  // namespace qtk
