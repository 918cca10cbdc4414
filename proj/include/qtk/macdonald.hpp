#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qtk/multipoly.hpp"
#include "qtk/partition.hpp"

namespace qtk {

// Arbitrary filling of a diagram; values follow cells_of(shape) order.
struct Filling {
    Partition shape;
    std::vector<int> values;
};

struct FillingStats {
    int inversions = 0;  // inverted attacking pairs minus arms over descents
    int maj = 0;         // sum of leg+1 over descent cells
};

// HHL statistics of a filling. A descent is a cell whose value strictly
// exceeds the value directly below it; cells attack when they share a row
// or sit in consecutive rows with the lower cell strictly left, and an
// attacking pair is inverted when the reading-order-earlier value is
// larger (reading order: top row down, left to right).
FillingStats filling_stats(const Filling& f);

// Coefficient of the monomial m_nu in the Macdonald expansion of mu,
// summing q^maj t^inv over all fillings of mu with content nu. The
// maj->q, inv->t routing is the calibrated orientation: it pairs q with
// row rotation and t with column rotation in the sieving theorems, and
// makes t=0 the Hall-Littlewood specialization.
MultiPoly monomial_coeff(const Partition& mu, const Composition& nu);

struct QtKostkaTable {
    Partition mu;
    std::map<Partition, MultiPoly> entries;  // lambda -> K(q,t)
};

// Solves the unitriangular system coeff_m(nu) = sum_{lambda >= nu}
// K_lambda * K_{lambda,nu} down descending lexicographic order. Throws
// InconsistentSystem when the solution violates the normalization
// K_{(n)} = 1 or produces a negative coefficient; either signals a
// statistics-convention bug upstream.
std::map<Partition, MultiPoly> solve_schur(
    int n, const std::map<Partition, MultiPoly>& monomial_coeffs);

QtKostkaTable qt_kostka_uncached(const Partition& mu);

// Memoized; tables are reused across all theorem verifications.
const QtKostkaTable& qt_kostka(const Partition& mu);

// Seeds the memo (used by the CLI cache); entries are trusted as-is.
void seed_qt_kostka(const QtKostkaTable& table);
// Snapshot of every memoized table, keyed by mu.
std::vector<QtKostkaTable> qt_kostka_cache_entries();

// K_{lambda,nu}(z): the qt table of sort(nu) specialized t -> 0 with q
// renamed z. Equals cocharge_kostka(lambda, nu) for every lambda.
std::map<Partition, MultiPoly> hl_kostka(const Composition& nu);

}  // namespace qtk
