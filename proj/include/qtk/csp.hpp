#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtk/bigint.hpp"
#include "qtk/multipoly.hpp"
#include "qtk/partition.hpp"

namespace qtk {

// n x m grid of values 1..L, row-major, rows and columns 0-based.
struct ContentMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> entries;

    int at(int i, int j) const {
        return entries[static_cast<std::size_t>(i * cols + j)];
    }
    friend bool operator==(const ContentMatrix&, const ContentMatrix&) = default;
};

// Count of each value 1..L in M.
std::vector<int> content_of(const ContentMatrix& m, int L);

// All n x m matrices of content nu (value i appears nu_i times), exactly
// once, by lexicographic multiset permutation of the row-major word.
// Throws std::invalid_argument when |nu| != n*m.
std::vector<ContentMatrix> enumerate_matrices(int n, int m, const Composition& nu);

// (row rotation, column rotation, translation steps)
struct GroupElement3 {
    int r = 0, s = 0, k = 0;
};

// (external row, internal row, external column, internal column)
struct GroupElement4 {
    int r = 0, s = 0, u = 0, v = 0;
};

// Rows cycled by r, columns by s, every entry e -> ((e-1 + step*k) mod
// modulus) + 1. The three actions commute.
ContentMatrix apply_action(const ContentMatrix& m, const GroupElement3& g,
                           int step, int modulus);

std::int64_t fixed_point_count(int n, int m, const Composition& nu, int step,
                               const GroupElement3& g);

// Divisors a of l(nu) with nu_i = nu_{i+a} for all i (indices mod l(nu));
// always contains l(nu).
std::vector<int> symmetry_orders(const Composition& nu);

// l x l permutation matrix; perm[i] = column of the 1 in row i (0-based).
struct PermutationMatrix {
    std::vector<int> perm;

    PermutationMatrix() = default;
    explicit PermutationMatrix(std::vector<int> p);
    int size() const { return static_cast<int>(perm.size()); }
    friend bool operator==(const PermutationMatrix&, const PermutationMatrix&) = default;
};

std::vector<PermutationMatrix> enumerate_permutations(int l);

// phi(P)(i,j) = k iff P has its 1 at (m*i + j, k): the rows of P are
// grouped into n blocks of m consecutive rows, block index = grid row.
// Under this correspondence, rotating the n blocks is the row rotation
// of phi(P), rotating within every block is the column rotation, and
// shifting every column of P by one is the entry translation.
ContentMatrix phi(const PermutationMatrix& p, int n, int m);
PermutationMatrix phi_inv(const ContentMatrix& m);

// Rows blocked (n blocks of m): external rotation by r, internal by s.
// Columns blocked (b blocks of a): external by u, internal by v.
PermutationMatrix perm_action(const PermutationMatrix& p, const GroupElement4& g,
                              int n, int m, int b, int a);

enum class CspKind { rect3, content2, content3, perm4 };

const char* kind_name(CspKind kind);
CspKind kind_from_name(const std::string& name);

struct CspParams {
    int m = 1;       // columns of the content matrices / row-block size
    int n = 1;       // rows of the content matrices / number of row blocks
    Composition nu;  // content (content2, content3)
    int a = 1;       // translation step (content3) / column-block size (perm4)
    int b = 1;       // number of column blocks (perm4)
};

// The theorem polynomial:
//   rect3    sum_lambda K(lambda,(m^n))(q,t) f^lambda(z)
//   content2 sum_lambda K(lambda,(m^n))(q,t) K_{lambda,nu}
//   content3 sum_lambda K(lambda,(m^n))(q,t) K(lambda,nu)(z)
//   perm4    sum_lambda K(lambda,(m^n))(q,t) K(lambda,(a^b))(z,w)
// Throws InvalidSymmetry when content3's step is not a symmetry order.
MultiPoly csp_polynomial(CspKind kind, const CspParams& params);

struct CspRecord {
    std::vector<int> element;
    std::int64_t count = 0;
    BigInt eval = 0;
    bool match = false;
};

struct CspReport {
    CspKind kind = CspKind::rect3;
    std::string params;
    std::vector<CspRecord> records;
    bool all_match = false;

    std::string render_text() const;
};

// Exhausts the full acting group: for every element, compares the brute
// fixed-point count against the exact root-of-unity evaluation of the
// theorem polynomial. Mismatches are recorded, not thrown. Throws
// SizeBound when the carrier exceeds the desk-scale bound.
CspReport verify_csp(CspKind kind, const CspParams& params, int size_bound = 8);

}  // namespace qtk
