#include "qtk/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qtk/bigint.hpp"

namespace qtk {

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

namespace {

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad part list: '" + text + "'");
        parts.push_back(v);
    }
    return parts;
}

std::string render_parts(const std::vector<int>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    return Partition(parse_parts(text));
}

std::string Partition::to_string() const { return render_parts(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0)
            throw std::invalid_argument("composition parts must be positive");
        size_ += p;
    }
}

Composition Composition::parse(const std::string& text) {
    return Composition(parse_parts(text));
}

Partition Composition::sorted() const {
    std::vector<int> p = parts_;
    std::sort(p.rbegin(), p.rend());
    return Partition(std::move(p));
}

std::string Composition::to_string() const { return render_parts(parts_); }

namespace {

void gen_partitions(int n, int maxp, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(n, maxp); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, acc, out);
        acc.pop_back();
    }
}

void gen_compositions(int n, std::vector<int>& acc,
                      std::vector<Composition>& out) {
    if (n == 0) {
        out.push_back(Composition(acc));
        return;
    }
    for (int p = n; p >= 1; --p) {
        acc.push_back(p);
        gen_compositions(n - p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n, acc, out);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: negative n");
    std::vector<Composition> out;
    std::vector<int> acc;
    gen_compositions(n, acc, out);
    return out;
}

std::int64_t partition_count(int n) {
    if (n < 0) return 0;
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k) {
        std::int64_t sum = 0;
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2;
            int g2 = j * (3 * j + 1) / 2;
            if (g1 > k && g2 > k) break;
            std::int64_t sign = (j % 2) ? 1 : -1;
            if (g1 <= k) sum += sign * p[static_cast<std::size_t>(k - g1)];
            if (g2 <= k) sum += sign * p[static_cast<std::size_t>(k - g2)];
        }
        p[static_cast<std::size_t>(k)] = sum;
    }
    return p[static_cast<std::size_t>(n)];
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> parts;
    int cols = lambda.part(0);
    parts.reserve(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= j + 1) ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("dominance_leq: sizes differ");
    int k = std::max(lambda.length(), mu.length());
    int sl = 0, sm = 0;
    for (int i = 0; i < k; ++i) {
        sl += lambda.part(i);
        sm += mu.part(i);
        if (sl > sm) return false;
    }
    return true;
}

std::pair<int, int> arm_leg(const Partition& lambda, Cell c) {
    if (!lambda.contains(c))
        throw std::invalid_argument("arm_leg: cell outside the diagram");
    int arm = lambda.part(c.y) - 1 - c.x;
    int leg = 0;
    for (int y = c.y + 1; y < lambda.length(); ++y)
        if (lambda.part(y) > c.x) ++leg;
    return {arm, leg};
}

std::vector<Cell> cells_of(const Partition& lambda) {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(lambda.size()));
    for (int y = 0; y < lambda.length(); ++y)
        for (int x = 0; x < lambda.part(y); ++x)
            cells.push_back(Cell{x, y});
    return cells;
}

}  // namespace qtk
