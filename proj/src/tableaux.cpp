#include "qtk/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtk {

int Tableau::value_at(Cell c) const {
    const std::vector<Cell> cells = cells_of(shape);
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i] == c) return values[i];
    throw std::invalid_argument("value_at: cell outside the diagram");
}

std::vector<int> Tableau::content() const {
    int maxv = 0;
    for (int v : values) maxv = std::max(maxv, v);
    std::vector<int> counts(static_cast<std::size_t>(maxv), 0);
    for (int v : values) ++counts[static_cast<std::size_t>(v - 1)];
    return counts;
}

bool Tableau::is_semistandard() const {
    if (static_cast<int>(values.size()) != shape.size()) return false;
    const std::vector<Cell> cells = cells_of(shape);
    // index of (x,y) in cell order: rows are contiguous
    std::vector<int> row_start(static_cast<std::size_t>(shape.length()) + 1, 0);
    for (int y = 0; y < shape.length(); ++y)
        row_start[static_cast<std::size_t>(y + 1)] =
            row_start[static_cast<std::size_t>(y)] + shape.part(y);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (values[i] <= 0) return false;
        Cell c = cells[i];
        if (c.x > 0 && values[i] < values[i - 1]) return false;
        if (c.y > 0 && c.x < shape.part(c.y - 1)) {
            int below = row_start[static_cast<std::size_t>(c.y - 1)] + c.x;
            if (values[i] <= values[static_cast<std::size_t>(below)]) return false;
        }
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_semistandard()) return false;
    std::vector<int> c = content();
    return static_cast<int>(c.size()) == shape.size() &&
           std::all_of(c.begin(), c.end(), [](int k) { return k == 1; });
}

void for_each_ssyt(const Partition& shape, const std::vector<int>& content,
                   const std::function<void(const Tableau&)>& fn) {
    const std::vector<Cell> cells = cells_of(shape);
    int total = 0;
    for (int c : content) {
        if (c < 0) throw std::invalid_argument("negative content entry");
        total += c;
    }
    if (total != shape.size())
        throw std::invalid_argument("content does not fill the shape");

    const int L = static_cast<int>(content.size());
    std::vector<int> remaining = content;
    Tableau t{shape, std::vector<int>(cells.size(), 0)};

    // row_start[y] = index of cell (0, y)
    std::vector<int> row_start(static_cast<std::size_t>(shape.length()) + 1, 0);
    for (int y = 0; y < shape.length(); ++y)
        row_start[static_cast<std::size_t>(y + 1)] =
            row_start[static_cast<std::size_t>(y)] + shape.part(y);

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            fn(t);
            return;
        }
        Cell c = cells[i];
        int lo = 1;
        if (c.x > 0) lo = std::max(lo, t.values[i - 1]);
        if (c.y > 0)
            lo = std::max(lo, t.values[static_cast<std::size_t>(
                                  row_start[static_cast<std::size_t>(c.y - 1)] + c.x)] +
                                  1);
        for (int v = lo; v <= L; ++v) {
            if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<std::size_t>(v - 1)];
            t.values[i] = v;
            rec(i + 1);
            ++remaining[static_cast<std::size_t>(v - 1)];
        }
        t.values[i] = 0;
    };
    rec(0);
}

std::int64_t kostka_number(const Partition& lambda, const Composition& nu) {
    if (lambda.size() != nu.size())
        throw std::invalid_argument("kostka_number: |lambda| != |nu|");
    std::int64_t count = 0;
    for_each_ssyt(lambda, nu.parts(), [&](const Tableau&) { ++count; });
    return count;
}

std::int64_t syt_count(const Partition& lambda) {
    std::int64_t count = 0;
    std::vector<int> ones(static_cast<std::size_t>(lambda.size()), 1);
    for_each_ssyt(lambda, ones, [&](const Tableau&) { ++count; });
    return count;
}

std::vector<int> descents(const Tableau& t) {
    const std::vector<Cell> cells = cells_of(t.shape);
    int n = t.shape.size();
    std::vector<int> row_of(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t i = 0; i < cells.size(); ++i)
        row_of[static_cast<std::size_t>(t.values[i])] = cells[i].y;
    std::vector<int> out;
    for (int i = 1; i < n; ++i)
        if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)])
            out.push_back(i);
    return out;
}

int major_index(const Tableau& t) {
    int maj = 0;
    for (int d : descents(t)) maj += d;
    return maj;
}

MultiPoly fake_degree(const Partition& lambda) {
    MultiPoly out;
    std::vector<int> ones(static_cast<std::size_t>(lambda.size()), 1);
    for_each_ssyt(lambda, ones, [&](const Tableau& t) {
        out += MultiPoly::variable(Var::z, major_index(t));
    });
    return out;
}

std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> word;
    word.reserve(t.values.size());
    std::size_t idx = t.values.size();
    for (int y = t.shape.length() - 1; y >= 0; --y) {
        idx -= static_cast<std::size_t>(t.shape.part(y));
        for (int x = 0; x < t.shape.part(y); ++x)
            word.push_back(t.values[idx + static_cast<std::size_t>(x)]);
    }
    return word;
}

int cocharge(const std::vector<int>& word) {
    std::vector<bool> alive(word.size(), true);
    int total = 0;
    std::size_t remaining = word.size();
    while (remaining > 0) {
        // rightmost surviving 1
        int cur = -1;
        for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i)
            if (alive[static_cast<std::size_t>(i)] && word[static_cast<std::size_t>(i)] == 1) {
                cur = i;
                break;
            }
        if (cur < 0)
            throw std::invalid_argument("cocharge: word content is not a partition");
        alive[static_cast<std::size_t>(cur)] = false;
        --remaining;
        int label = 0;
        for (int r = 2;; ++r) {
            // nearest r to the left of cur, wrapping to the right end
            int pick = -1;
            for (int i = cur - 1; i >= 0; --i)
                if (alive[static_cast<std::size_t>(i)] && word[static_cast<std::size_t>(i)] == r) {
                    pick = i;
                    break;
                }
            if (pick < 0) {
                for (int i = static_cast<int>(word.size()) - 1; i > cur; --i)
                    if (alive[static_cast<std::size_t>(i)] &&
                        word[static_cast<std::size_t>(i)] == r) {
                        pick = i;
                        break;
                    }
            }
            if (pick < 0) break;
            if (pick < cur) ++label;
            total += label;
            alive[static_cast<std::size_t>(pick)] = false;
            --remaining;
            cur = pick;
        }
    }
    return total;
}

MultiPoly cocharge_kostka(const Partition& lambda, const Composition& nu) {
    if (lambda.size() != nu.size())
        throw std::invalid_argument("cocharge_kostka: |lambda| != |nu|");
    Partition content = nu.sorted();
    MultiPoly out;
    for_each_ssyt(lambda, content.parts(), [&](const Tableau& t) {
        out += MultiPoly::variable(Var::z, cocharge(reading_word(t)));
    });
    return out;
}

}  // namespace qtk
