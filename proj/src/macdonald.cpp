#include "qtk/macdonald.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "qtk/errors.hpp"
#include "qtk/tableaux.hpp"

namespace qtk {

FillingStats filling_stats(const Filling& f) {
    const Partition& shape = f.shape;
    const std::vector<Cell> cells = cells_of(shape);
    if (f.values.size() != cells.size())
        throw std::invalid_argument("filling_stats: value count mismatch");

    std::vector<int> row_start(static_cast<std::size_t>(shape.length()) + 1, 0);
    for (int y = 0; y < shape.length(); ++y)
        row_start[static_cast<std::size_t>(y + 1)] =
            row_start[static_cast<std::size_t>(y)] + shape.part(y);
    auto value_at = [&](int x, int y) {
        return f.values[static_cast<std::size_t>(row_start[static_cast<std::size_t>(y)] + x)];
    };

    int maj = 0;
    int arm_sum = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        Cell c = cells[i];
        if (c.y > 0 && f.values[i] > value_at(c.x, c.y - 1)) {
            auto [arm, leg] = arm_leg(shape, c);
            maj += leg + 1;
            arm_sum += arm;
        }
    }

    // reading order: top row first, left to right
    std::vector<std::size_t> order;
    order.reserve(cells.size());
    for (int y = shape.length() - 1; y >= 0; --y)
        for (int x = 0; x < shape.part(y); ++x)
            order.push_back(static_cast<std::size_t>(row_start[static_cast<std::size_t>(y)] + x));

    int inverted = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Cell u = cells[order[i]];
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            Cell v = cells[order[j]];
            bool attack = (v.y == u.y) || (v.y == u.y - 1 && v.x < u.x);
            if (attack && f.values[order[i]] > f.values[order[j]]) ++inverted;
        }
    }
    int inv = inverted - arm_sum;
    if (inv < 0)
        throw std::logic_error("filling_stats: negative inversion statistic");
    return FillingStats{inv, maj};
}

MultiPoly monomial_coeff(const Partition& mu, const Composition& nu) {
    if (mu.size() != nu.size())
        throw std::invalid_argument("monomial_coeff: |mu| != |nu|");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(nu.size()));
    for (int v = 0; v < nu.length(); ++v)
        letters.insert(letters.end(), static_cast<std::size_t>(nu.parts()[static_cast<std::size_t>(v)]),
                       v + 1);
    std::sort(letters.begin(), letters.end());

    MultiPoly out;
    Filling f{mu, letters};
    do {
        f.values = letters;
        FillingStats st = filling_stats(f);
        out += MultiPoly::monomial(ExpVec{st.maj, st.inversions, 0, 0}, 1);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

std::map<Partition, MultiPoly> solve_schur(
    int n, const std::map<Partition, MultiPoly>& monomial_coeffs) {
    const std::vector<Partition> parts = partitions_of(n);
    std::map<Partition, MultiPoly> table;
    for (const Partition& nu : parts) {  // descending lex: dominance-compatible
        auto it = monomial_coeffs.find(nu);
        if (it == monomial_coeffs.end())
            throw std::invalid_argument("solve_schur: missing coefficient for " +
                                        nu.to_string());
        MultiPoly rem = it->second;
        for (const auto& [lambda, k] : table) {
            if (lambda == nu || !dominance_leq(nu, lambda)) continue;
            std::int64_t kn = kostka_number(lambda, Composition(nu));
            if (kn != 0) rem -= k * BigInt(kn);
        }
        for (const auto& [e, c] : rem.terms())
            if (c < 0)
                throw InconsistentSystem("negative coefficient in K[" + nu.to_string() +
                                         "]: " + rem.render());
        table.emplace(nu, std::move(rem));
    }
    if (n > 0) {
        const Partition row(std::vector<int>{n});
        if (table.at(row) != MultiPoly::constant(1))
            throw InconsistentSystem("normalization K[(n)] != 1: " +
                                     table.at(row).render());
    }
    return table;
}

QtKostkaTable qt_kostka_uncached(const Partition& mu) {
    int n = mu.size();
    std::map<Partition, MultiPoly> coeffs;
    for (const Partition& nu : partitions_of(n))
        coeffs.emplace(nu, monomial_coeff(mu, Composition(nu)));
    return QtKostkaTable{mu, solve_schur(n, coeffs)};
}

namespace {
std::mutex g_qtk_mutex;
std::map<Partition, QtKostkaTable>& qtk_cache() {
    static std::map<Partition, QtKostkaTable> cache;
    return cache;
}
}  // namespace

const QtKostkaTable& qt_kostka(const Partition& mu) {
    {
        std::lock_guard<std::mutex> lock(g_qtk_mutex);
        auto it = qtk_cache().find(mu);
        if (it != qtk_cache().end()) return it->second;
    }
    QtKostkaTable table = qt_kostka_uncached(mu);
    std::lock_guard<std::mutex> lock(g_qtk_mutex);
    return qtk_cache().emplace(mu, std::move(table)).first->second;
}

void seed_qt_kostka(const QtKostkaTable& table) {
    std::lock_guard<std::mutex> lock(g_qtk_mutex);
    qtk_cache().insert_or_assign(table.mu, table);
}

std::vector<QtKostkaTable> qt_kostka_cache_entries() {
    std::lock_guard<std::mutex> lock(g_qtk_mutex);
    std::vector<QtKostkaTable> out;
    out.reserve(qtk_cache().size());
    for (const auto& [mu, table] : qtk_cache()) out.push_back(table);
    return out;
}

std::map<Partition, MultiPoly> hl_kostka(const Composition& nu) {
    const QtKostkaTable& table = qt_kostka(nu.sorted());
    std::map<Var, MultiPoly> bindings{
        {Var::t, MultiPoly()},                // t -> 0
        {Var::q, MultiPoly::variable(Var::z)} // q -> z
    };
    std::map<Partition, MultiPoly> out;
    for (const auto& [lambda, k] : table.entries)
        out.emplace(lambda, k.specialize(bindings));
    return out;
}

}  // namespace qtk
