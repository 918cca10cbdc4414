#include "qtk/csp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qtk/cyclotomic.hpp"
#include "qtk/errors.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/tableaux.hpp"

namespace qtk {

std::vector<int> content_of(const ContentMatrix& m, int L) {
    std::vector<int> counts(static_cast<std::size_t>(L), 0);
    for (int e : m.entries) {
        if (e < 1 || e > L)
            throw std::invalid_argument("content_of: entry out of range");
        ++counts[static_cast<std::size_t>(e - 1)];
    }
    return counts;
}

std::vector<ContentMatrix> enumerate_matrices(int n, int m, const Composition& nu) {
    if (nu.size() != n * m)
        throw std::invalid_argument("enumerate_matrices: |nu| != n*m");
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n * m));
    for (int v = 0; v < nu.length(); ++v)
        word.insert(word.end(),
                    static_cast<std::size_t>(nu.parts()[static_cast<std::size_t>(v)]), v + 1);
    std::sort(word.begin(), word.end());
    std::vector<ContentMatrix> out;
    do {
        out.push_back(ContentMatrix{n, m, word});
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

ContentMatrix apply_action(const ContentMatrix& m, const GroupElement3& g,
                           int step, int modulus) {
    ContentMatrix out{m.rows, m.cols,
                      std::vector<int>(m.entries.size(), 0)};
    int shift = static_cast<int>((static_cast<long long>(step) * g.k) % modulus);
    for (int i = 0; i < m.rows; ++i) {
        int ni = (i + g.r % m.rows + m.rows) % m.rows;
        for (int j = 0; j < m.cols; ++j) {
            int nj = (j + g.s % m.cols + m.cols) % m.cols;
            int e = m.at(i, j);
            out.entries[static_cast<std::size_t>(ni * m.cols + nj)] =
                (e - 1 + shift % modulus + modulus) % modulus + 1;
        }
    }
    return out;
}

std::int64_t fixed_point_count(int n, int m, const Composition& nu, int step,
                               const GroupElement3& g) {
    std::int64_t count = 0;
    for (const ContentMatrix& mat : enumerate_matrices(n, m, nu))
        if (apply_action(mat, g, step, nu.length()) == mat) ++count;
    return count;
}

std::vector<int> symmetry_orders(const Composition& nu) {
    int l = nu.length();
    std::vector<int> out;
    for (int a = 1; a <= l; ++a) {
        if (l % a != 0) continue;
        bool ok = true;
        for (int i = 0; i < l && ok; ++i)
            ok = nu.parts()[static_cast<std::size_t>(i)] ==
                 nu.parts()[static_cast<std::size_t>((i + a) % l)];
        if (ok) out.push_back(a);
    }
    return out;
}

PermutationMatrix::PermutationMatrix(std::vector<int> p) : perm(std::move(p)) {
    std::vector<bool> seen(perm.size(), false);
    for (int c : perm) {
        if (c < 0 || c >= static_cast<int>(perm.size()) || seen[static_cast<std::size_t>(c)])
            throw std::invalid_argument("PermutationMatrix: not a bijection");
        seen[static_cast<std::size_t>(c)] = true;
    }
}

std::vector<PermutationMatrix> enumerate_permutations(int l) {
    std::vector<int> perm(static_cast<std::size_t>(l));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<PermutationMatrix> out;
    do {
        out.push_back(PermutationMatrix(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

ContentMatrix phi(const PermutationMatrix& p, int n, int m) {
    if (p.size() != n * m)
        throw std::invalid_argument("phi: matrix side must equal n*m");
    ContentMatrix out{n, m, std::vector<int>(static_cast<std::size_t>(n * m), 0)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            out.entries[static_cast<std::size_t>(i * m + j)] =
                p.perm[static_cast<std::size_t>(m * i + j)] + 1;
    return out;
}

PermutationMatrix phi_inv(const ContentMatrix& m) {
    std::vector<int> perm;
    perm.reserve(m.entries.size());
    for (int e : m.entries) perm.push_back(e - 1);
    return PermutationMatrix(std::move(perm));
}

PermutationMatrix perm_action(const PermutationMatrix& p, const GroupElement4& g,
                              int n, int m, int b, int a) {
    int l = p.size();
    if (l != n * m || l != a * b)
        throw std::invalid_argument("perm_action: l must equal n*m and a*b");
    std::vector<int> out(static_cast<std::size_t>(l), 0);
    for (int row = 0; row < l; ++row) {
        int block = row / m, off = row % m;
        int nrow = ((block + g.r) % n + n) % n * m + ((off + g.s) % m + m) % m;
        int col = p.perm[static_cast<std::size_t>(row)];
        int cblock = col / a, coff = col % a;
        int ncol = ((cblock + g.u) % b + b) % b * a + ((coff + g.v) % a + a) % a;
        out[static_cast<std::size_t>(nrow)] = ncol;
    }
    return PermutationMatrix(std::move(out));
}

const char* kind_name(CspKind kind) {
    switch (kind) {
        case CspKind::rect3: return "rect3";
        case CspKind::content2: return "content2";
        case CspKind::content3: return "content3";
        case CspKind::perm4: return "perm4";
    }
    throw std::logic_error("unreachable");
}

CspKind kind_from_name(const std::string& name) {
    if (name == "rect3") return CspKind::rect3;
    if (name == "content2") return CspKind::content2;
    if (name == "content3") return CspKind::content3;
    if (name == "perm4") return CspKind::perm4;
    throw std::invalid_argument("unknown csp kind '" + name + "'");
}

namespace {

Partition rectangle(int m, int n) {
    return Partition(std::vector<int>(static_cast<std::size_t>(n), m));
}

void require_positive(const CspParams& p, bool need_ab) {
    if (p.m <= 0 || p.n <= 0)
        throw std::invalid_argument("m and n must be positive");
    if (need_ab && (p.a <= 0 || p.b <= 0))
        throw std::invalid_argument("a and b must be positive");
}

}  // namespace

MultiPoly csp_polynomial(CspKind kind, const CspParams& params) {
    switch (kind) {
        case CspKind::rect3: {
            require_positive(params, false);
            const QtKostkaTable& table = qt_kostka(rectangle(params.m, params.n));
            MultiPoly out;
            for (const auto& [lambda, k] : table.entries)
                out += k * fake_degree(lambda);
            return out;
        }
        case CspKind::content2: {
            require_positive(params, false);
            if (params.nu.size() != params.m * params.n)
                throw std::invalid_argument("content2: |nu| != m*n");
            const QtKostkaTable& table = qt_kostka(rectangle(params.m, params.n));
            MultiPoly out;
            for (const auto& [lambda, k] : table.entries) {
                std::int64_t kn = kostka_number(lambda, params.nu);
                if (kn != 0) out += k * BigInt(kn);
            }
            return out;
        }
        case CspKind::content3: {
            require_positive(params, false);
            if (params.nu.size() != params.m * params.n)
                throw std::invalid_argument("content3: |nu| != m*n");
            std::vector<int> orders = symmetry_orders(params.nu);
            if (std::find(orders.begin(), orders.end(), params.a) == orders.end())
                throw InvalidSymmetry("step " + std::to_string(params.a) +
                                      " is not a cyclic symmetry order of " +
                                      params.nu.to_string());
            const QtKostkaTable& table = qt_kostka(rectangle(params.m, params.n));
            std::map<Partition, MultiPoly> hl = hl_kostka(params.nu);
            MultiPoly out;
            for (const auto& [lambda, k] : table.entries)
                out += k * hl.at(lambda);
            return out;
        }
        case CspKind::perm4: {
            require_positive(params, true);
            if (params.m * params.n != params.a * params.b)
                throw std::invalid_argument("perm4: m*n != a*b");
            const QtKostkaTable& rows = qt_kostka(rectangle(params.m, params.n));
            const QtKostkaTable& cols = qt_kostka(rectangle(params.a, params.b));
            const std::map<Var, MultiPoly> to_zw{
                {Var::q, MultiPoly::variable(Var::z)},
                {Var::t, MultiPoly::variable(Var::w)}};
            MultiPoly out;
            for (const auto& [lambda, k] : rows.entries)
                out += k * cols.entries.at(lambda).specialize(to_zw);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::string CspReport::render_text() const {
    std::ostringstream os;
    os << "kind: " << kind_name(kind) << "\n";
    os << "params: " << params << "\n";
    for (const CspRecord& r : records) {
        os << "(";
        for (std::size_t i = 0; i < r.element.size(); ++i) {
            if (i) os << ",";
            os << r.element[i];
        }
        os << ") count=" << r.count << " eval=" << r.eval.str()
           << (r.match ? " ok" : " MISMATCH") << "\n";
    }
    os << "all_match: " << (all_match ? "true" : "false") << "\n";
    return os.str();
}

namespace {

std::string describe_params(CspKind kind, const CspParams& p) {
    std::ostringstream os;
    os << "m=" << p.m << " n=" << p.n;
    if (kind == CspKind::content2 || kind == CspKind::content3)
        os << " nu=" << p.nu.to_string();
    if (kind == CspKind::content3) os << " a=" << p.a;
    if (kind == CspKind::perm4) os << " a=" << p.a << " b=" << p.b;
    return os.str();
}

}  // namespace

CspReport verify_csp(CspKind kind, const CspParams& params, int size_bound) {
    CspReport report;
    report.kind = kind;
    report.params = describe_params(kind, params);

    const int carrier = params.m * params.n;
    if (carrier > size_bound)
        throw SizeBound("carrier size " + std::to_string(carrier) +
                        " exceeds bound " + std::to_string(size_bound));

    MultiPoly poly = csp_polynomial(kind, params);

    if (kind == CspKind::perm4) {
        const int l = carrier;
        const std::vector<PermutationMatrix> perms = enumerate_permutations(l);
        for (int r = 0; r < params.n; ++r)
            for (int s = 0; s < params.m; ++s)
                for (int u = 0; u < params.b; ++u)
                    for (int v = 0; v < params.a; ++v) {
                        GroupElement4 g{r, s, u, v};
                        std::int64_t count = 0;
                        for (const PermutationMatrix& p : perms)
                            if (perm_action(p, g, params.n, params.m, params.b,
                                            params.a) == p)
                                ++count;
                        RootAssignment assign{{Var::q, {params.n, r}},
                                              {Var::t, {params.m, s}},
                                              {Var::z, {params.b, u}},
                                              {Var::w, {params.a, v}}};
                        BigInt eval = eval_at_roots(poly, assign);
                        report.records.push_back(
                            CspRecord{{r, s, u, v}, count, eval, eval == count});
                    }
    } else {
        Composition nu = params.nu;
        int step = 1;
        int zorder = 1;
        if (kind == CspKind::rect3) {
            nu = Composition(std::vector<int>(static_cast<std::size_t>(carrier), 1));
            zorder = carrier;
        } else if (kind == CspKind::content3) {
            step = params.a;
            zorder = nu.length() / params.a;
        }
        const int kmax = kind == CspKind::content2 ? 1 : zorder;
        const std::vector<ContentMatrix> mats =
            enumerate_matrices(params.n, params.m, nu);
        for (int r = 0; r < params.n; ++r)
            for (int s = 0; s < params.m; ++s)
                for (int k = 0; k < kmax; ++k) {
                    GroupElement3 g{r, s, k};
                    std::int64_t count = 0;
                    for (const ContentMatrix& mat : mats)
                        if (apply_action(mat, g, step, nu.length()) == mat) ++count;
                    RootAssignment assign{{Var::q, {params.n, r}},
                                          {Var::t, {params.m, s}}};
                    std::vector<int> element{r, s};
                    if (kind != CspKind::content2) {
                        assign.emplace(Var::z, RootOfUnity{zorder, k});
                        element.push_back(k);
                    }
                    BigInt eval = eval_at_roots(poly, assign);
                    report.records.push_back(
                        CspRecord{element, count, eval, eval == count});
                }
    }
    report.all_match = std::all_of(report.records.begin(), report.records.end(),
                                   [](const CspRecord& r) { return r.match; });
    return report;
}

}  // namespace qtk
