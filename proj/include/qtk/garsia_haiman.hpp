#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qtk/bigint.hpp"
#include "qtk/multipoly.hpp"
#include "qtk/partition.hpp"

namespace qtk {

// Polynomial in x_1..x_n, y_1..y_n; exponent vectors hold the x slots
// followed by the y slots. Delta_mu and its derivatives stay integral,
// which is what makes fraction-free rank computation exact.
struct DiagonalPoly {
    int n = 0;
    std::map<std::vector<int>, BigInt> terms;

    bool is_zero() const { return terms.empty(); }
    // Total x-degree and y-degree; requires bihomogeneity.
    std::pair<int, int> bidegree() const;
    friend bool operator==(const DiagonalPoly&, const DiagonalPoly&) = default;
};

// Delta_mu = det(x_i^{a_j} y_i^{b_j}) over the cells (a_j, b_j) of mu,
// taken in cells_of order. Throws SizeBound past the configured bound.
DiagonalPoly delta_mu(const Partition& mu, int size_bound = 5);

// d/d(var); var indexes x_1..x_n then y_1..y_n.
DiagonalPoly derivative(const DiagonalPoly& p, int var);

// Dimension of the span of the given polynomials, by exact rank.
std::int64_t span_rank(const std::vector<DiagonalPoly>& polys);

struct BigradedHilbert {
    std::map<std::pair<int, int>, std::int64_t> dims;

    std::int64_t total() const;
    MultiPoly to_poly() const;  // sum of dim * q^d t^e
};

// Bigraded Hilbert series of the span of Delta_mu and all of its partial
// derivatives: per bidegree slice, the exact rank of every derivative of
// the matching co-order, via Bareiss fraction-free elimination.
BigradedHilbert gh_hilbert(const Partition& mu, int size_bound = 4);

enum class GhOrientation { exact, swapped, both };

const char* orientation_name(GhOrientation o);

struct GhCrosscheck {
    Partition mu;
    MultiPoly hilbert;        // from gh_hilbert
    MultiPoly macdonald_sum;  // sum of K(lambda,mu)(q,t) * #SYT(lambda)
    GhOrientation matched = GhOrientation::exact;
};

// Compares the two pipelines, accepting exact agreement or agreement
// after the global q<->t swap, and records which occurred. Throws
// CrosscheckMismatch when neither orientation matches.
GhCrosscheck gh_crosscheck(const Partition& mu, int size_bound = 4);

}  // namespace qtk
