#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qtk {

// Cell of a Young diagram in French convention: x = column, y = row,
// row 0 at the bottom.
struct Cell {
    int x = 0;
    int y = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

// Integer partition: weakly decreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Parses "4,2,1"; the empty string is the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }    // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    // 0-based row access, zero-padded past the last part.
    int part(int i) const {
        return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    bool empty() const { return parts_.empty(); }
    bool contains(Cell c) const {
        return c.x >= 0 && c.y >= 0 && c.x < part(c.y);
    }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Composition: sequence of positive parts, order significant.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    explicit Composition(const Partition& p) : Composition(p.parts()) {}

    static Composition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    Partition sorted() const;  // parts rearranged weakly decreasing

    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// All partitions of n in descending lexicographic order;
// partitions_of(4) = (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions_of(int n);

// All compositions of n, first part descending, then recursively.
std::vector<Composition> compositions_of(int n);

// Number of partitions of n by the pentagonal-number recurrence.
// Lives here as an independent count oracle for partitions_of.
std::int64_t partition_count(int n);

Partition conjugate(const Partition& lambda);

// Prefix-sum dominance; throws std::invalid_argument when sizes differ.
bool dominance_leq(const Partition& lambda, const Partition& mu);

// Cells strictly right of c in its row / strictly above c in its column.
// Throws std::invalid_argument when c lies outside lambda.
std::pair<int, int> arm_leg(const Partition& lambda, Cell c);

// Cells row by row, bottom to top, left to right. This ordering is the
// canonical cell traversal used by tableau enumeration and Delta_mu.
std::vector<Cell> cells_of(const Partition& lambda);

}  // namespace qtk
