// Acceptance suite: one criterion per entry, each verified exactly and
// printed as a single pass/fail line. Exit status 0 only when every
// criterion holds.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qtk/characters.hpp"
#include "qtk/csp.hpp"
#include "qtk/cyclotomic.hpp"
#include "qtk/garsia_haiman.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/tableaux.hpp"

using namespace qtk;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }
Composition C(const std::string& s) { return Composition::parse(s); }

BigInt at_ones_qt(const MultiPoly& p) {
    std::map<Var, BigInt> ones{{Var::q, 1}, {Var::t, 1}};
    return p.specialize(ones).constant_value();
}

struct Criterion {
    std::string label;
    double budget_seconds;  // 0 = untimed
    std::function<std::string()> body;
};

const std::vector<std::pair<int, int>> kSizePairs = {
    {1, 2}, {2, 1}, {2, 2}, {3, 2}, {2, 3}, {6, 1}, {1, 6}};  // (m, n)

std::string criterion_worked_example() {
    std::vector<ContentMatrix> mats = enumerate_matrices(2, 2, C("2,2"));
    if (mats.size() != 6) return "carrier size " + std::to_string(mats.size());
    if (fixed_point_count(2, 2, C("2,2"), 1, GroupElement3{0, 1, 1}) != 4)
        return "fixed points of (0,1,1)";
    if (fixed_point_count(2, 2, C("2,2"), 1, GroupElement3{0, 0, 1}) != 0)
        return "fixed points of (0,0,1)";
    CspParams params{.m = 2, .n = 2, .nu = C("2,2"), .a = 1, .b = 1};
    MultiPoly x = csp_polynomial(CspKind::content3, params);
    std::map<Var, int> orders{{Var::q, 2}, {Var::t, 2}, {Var::z, 2}};
    if (reduce_exponents(x, orders) != MultiPoly::parse("3 + q*z + t*z + q*t*z"))
        return "reduction mod (q^2-1, t^2-1, z^2-1)";
    if (eval_at_roots(x, {{Var::q, {2, 1}}, {Var::t, {2, 0}}, {Var::z, {2, 1}}}) != 4)
        return "evaluation at (-1, 1, -1)";
    if (eval_at_roots(x, {{Var::q, {2, 0}}, {Var::t, {2, 0}}, {Var::z, {2, 1}}}) != 0)
        return "evaluation at (1, 1, -1)";
    return "";
}

std::string criterion_rect_and_content() {
    for (auto [m, n] : kSizePairs) {
        CspReport tri = verify_csp(CspKind::rect3, CspParams{.m = m, .n = n});
        if (!tri.all_match) return "rect3 " + tri.params;
        for (const Partition& nu : partitions_of(m * n)) {
            CspParams p{.m = m, .n = n, .nu = Composition(nu), .a = 1, .b = 1};
            CspReport bi = verify_csp(CspKind::content2, p);
            if (!bi.all_match) return "content2 " + bi.params;
        }
    }
    return "";
}

std::string criterion_content_tricsp() {
    for (int size = 1; size <= 6; ++size)
        for (int n = 1; n <= size; ++n) {
            if (size % n != 0) continue;
            int m = size / n;
            for (const Composition& nu : compositions_of(size)) {
                if (nu.length() > 6) continue;
                for (int a : symmetry_orders(nu)) {
                    CspParams p{.m = m, .n = n, .nu = nu, .a = a, .b = 1};
                    CspReport rep = verify_csp(CspKind::content3, p);
                    if (!rep.all_match) return rep.params;
                }
            }
        }
    return "";
}

std::string criterion_perm_quadcsp() {
    for (int l : {4, 6})
        for (int n = 1; n <= l; ++n) {
            if (l % n != 0) continue;
            for (int b = 1; b <= l; ++b) {
                if (l % b != 0) continue;
                CspParams p{.m = l / n, .n = n, .nu = {}, .a = l / b, .b = b};
                CspReport rep = verify_csp(CspKind::perm4, p);
                if (!rep.all_match) return rep.params;
            }
        }
    return "";
}

std::string criterion_macdonald_suite() {
    const std::map<Var, MultiPoly> swap_qt{{Var::q, MultiPoly::variable(Var::t)},
                                           {Var::t, MultiPoly::variable(Var::q)}};
    for (int n = 1; n <= 6; ++n)
        for (const Partition& mu : partitions_of(n)) {
            const QtKostkaTable& table = qt_kostka(mu);
            const QtKostkaTable& conj = qt_kostka(conjugate(mu));
            if (table.entries.at(P(std::to_string(n))) != MultiPoly::constant(1))
                return "normalization at mu=" + mu.to_string();
            BigInt dim = 0;
            for (const auto& [lambda, k] : table.entries) {
                BigInt ones = at_ones_qt(k);
                std::int64_t f = syt_count(lambda);
                if (ones != f)
                    return "K(1,1) != #SYT at " + mu.to_string() + "/" + lambda.to_string();
                for (const auto& [e, c] : k.terms())
                    if (c < 0)
                        return "negative coefficient at " + mu.to_string() + "/" +
                               lambda.to_string();
                if (k != conj.entries.at(lambda).specialize(swap_qt))
                    return "conjugation symmetry at " + mu.to_string() + "/" +
                           lambda.to_string();
                dim += ones * f;
            }
            if (dim != factorial(n)) return "dimension at mu=" + mu.to_string();
        }
    return "";
}

std::string criterion_hl_oracle() {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& nu : partitions_of(n)) {
            std::map<Partition, MultiPoly> hl = hl_kostka(Composition(nu));
            for (const Partition& lambda : partitions_of(n))
                if (hl.at(lambda) != cocharge_kostka(lambda, Composition(nu)))
                    return "nu=" + nu.to_string() + " lambda=" + lambda.to_string();
        }
    return "";
}

std::string criterion_springer() {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            MultiPoly f = fake_degree(lambda);
            for (int r = 0; r < n; ++r) {
                BigInt ev = eval_at_roots(f, {{Var::z, {n, r}}});
                if (ev != character_value(lambda, long_cycle_power_type(n, r)))
                    return "lambda=" + lambda.to_string() + " r=" + std::to_string(r);
            }
        }
    return "";
}

std::string criterion_kronecker() {
    for (int n = 1; n <= 5; ++n)
        for (const Partition& mu : partitions_of(n))
            for (const Partition& nu : partitions_of(n))
                if (kronecker_with_trivial(mu, nu) != (mu == nu ? 1 : 0))
                    return "mu=" + mu.to_string() + " nu=" + nu.to_string();
    return "";
}

std::string criterion_garsia_haiman() {
    bool swapped_ok = true, exact_ok = true;
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n)) {
            BigradedHilbert h = gh_hilbert(mu);
            if (h.total() != factorial(n)) return "dimension at mu=" + mu.to_string();
            GhCrosscheck rec = gh_crosscheck(mu);
            if (rec.matched == GhOrientation::exact) swapped_ok = false;
            if (rec.matched == GhOrientation::swapped) exact_ok = false;
        }
    if (!swapped_ok && !exact_ok) return "no single global orientation";
    return "";
}

std::string criterion_calibration_gate() {
    // the configured maj->q / inv->t routing must verify on both
    // two-cell rectangles ...
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {1, 2}}) {
        CspReport rep = verify_csp(CspKind::rect3, CspParams{.m = m, .n = n});
        if (!rep.all_match)
            return "configured orientation fails at m=" + std::to_string(m) +
                   " n=" + std::to_string(n);
    }
    // ... and the opposite routing must be caught, not silently accepted
    const std::map<Var, MultiPoly> swap_qt{{Var::q, MultiPoly::variable(Var::t)},
                                           {Var::t, MultiPoly::variable(Var::q)}};
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {1, 2}}) {
        MultiPoly wrong =
            csp_polynomial(CspKind::rect3, CspParams{.m = m, .n = n}).specialize(swap_qt);
        Composition ones(std::vector<int>(static_cast<std::size_t>(m * n), 1));
        bool detected = false;
        for (int r = 0; r < n && !detected; ++r)
            for (int s = 0; s < m && !detected; ++s)
                for (int k = 0; k < m * n && !detected; ++k) {
                    std::int64_t count =
                        fixed_point_count(n, m, ones, 1, GroupElement3{r, s, k});
                    BigInt ev = eval_at_roots(
                        wrong, {{Var::q, {n, r}}, {Var::t, {m, s}}, {Var::z, {m * n, k}}});
                    if (ev != count) detected = true;
                }
        if (!detected)
            return "swapped orientation not detected at m=" + std::to_string(m) +
                   " n=" + std::to_string(n);
    }
    return "";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"worked example: six 2x2 matrices of content (2,2), counts 4/0, "
         "reduction 3+qz+tz+qtz, evaluations 4/0",
         1.0, criterion_worked_example},
        {"rectangular triCSP and content biCSP for the seven size pairs, "
         "all partition contents",
         60.0, criterion_rect_and_content},
        {"content triCSP for every composition of sizes up to 6 and every "
         "symmetry order",
         300.0, criterion_content_tricsp},
        {"permutation quadraCSP for l in {4,6} over all factorizations "
         "l = mn = ab",
         120.0, criterion_perm_quadcsp},
        {"qt-Kostka invariants for all mu up to size 6: normalization, "
         "specialization counts, conjugation symmetry, positivity, dimension",
         120.0, criterion_macdonald_suite},
        {"Hall-Littlewood tables equal cocharge generating functions up to "
         "size 6",
         0.0, criterion_hl_oracle},
        {"long-cycle characters equal fake-degree root-of-unity values up to "
         "size 6",
         0.0, criterion_springer},
        {"Kronecker coefficients with the trivial row are delta(mu,nu) up to "
         "size 5",
         0.0, criterion_kronecker},
        {"derivative-span dimension n! and Hilbert crosscheck with a single "
         "global orientation up to size 4",
         60.0, criterion_garsia_haiman},
        {"orientation calibration gate: configured routing verifies on the "
         "two-cell rectangles, swapped routing is detected",
         0.0, criterion_calibration_gate},
    };

    int passed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = criteria[i].body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        bool ok = detail.empty();
        if (ok && criteria[i].budget_seconds > 0 && seconds > criteria[i].budget_seconds) {
            ok = false;
            detail = "time budget exceeded";
        }
        if (ok) ++passed;
        std::printf("criterion %2zu %s %7.2fs  %s%s%s\n", i + 1, ok ? "PASS" : "FAIL",
                    seconds, criteria[i].label.c_str(), detail.empty() ? "" : "  -- ",
                    detail.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
