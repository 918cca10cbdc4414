#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qtk/multipoly.hpp"
#include "qtk/partition.hpp"

namespace qtk {

// Filling of a Young diagram; values follow cells_of(shape) order
// (row by row, bottom to top, left to right).
struct Tableau {
    Partition shape;
    std::vector<int> values;

    int value_at(Cell c) const;
    // Count of each value 1..max; may contain zeros.
    std::vector<int> content() const;
    bool is_semistandard() const;
    bool is_standard() const;
};

// Enumerates semistandard tableaux of the given shape whose content is
// exactly `content` (content[i] = multiplicity of the value i+1), in the
// deterministic backtracking order over cells_of(shape).
void for_each_ssyt(const Partition& shape, const std::vector<int>& content,
                   const std::function<void(const Tableau&)>& fn);

// K_{lambda,nu}: number of SSYT of shape lambda and content nu, by
// exhaustive enumeration. Throws std::invalid_argument on size mismatch.
std::int64_t kostka_number(const Partition& lambda, const Composition& nu);

std::int64_t syt_count(const Partition& lambda);

// Descents of a standard tableau: i such that i+1 sits in a higher row.
std::vector<int> descents(const Tableau& t);
int major_index(const Tableau& t);

// f^lambda(z) = sum over SYT of z^maj.
MultiPoly fake_degree(const Partition& lambda);

// Reading word: rows top to bottom, left to right within each row.
std::vector<int> reading_word(const Tableau& t);

// Lascoux-Schutzenberger cocharge of a word with partition content.
// Standard subwords are extracted from the rightmost 1, each next letter
// taken nearest to the left (wrapping to the right end); the label
// increments exactly when the chosen letter lies to the left.
int cocharge(const std::vector<int>& word);

// Cocharge generating function over SSYT of shape lambda and content
// sort(nu), in z. Zero when no such tableau exists.
MultiPoly cocharge_kostka(const Partition& lambda, const Composition& nu);

}  // namespace qtk
