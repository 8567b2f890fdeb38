#ifndef ZASYM_SSYT_HPP
#define ZASYM_SSYT_HPP

#include <vector>

#include "zasym/errors.hpp"
#include "zasym/partition.hpp"

namespace zasym {

/* Semistandard tableau: rows weakly increasing, columns strictly
 * increasing, entries in 1..n. */
struct ssyt {
    partition shape;
    std::vector<std::vector<int>> rows;

    bool operator==(const ssyt&) const = default;
};

/* Visit every tableau of the shape with entries <= n exactly once, in
 * ascending lexicographic order of the row-major reading word. Returns
 * the number visited; throws enumeration_too_large past the cap. */
template <class Visitor>
long long for_each_ssyt(const partition& shape, int n, Visitor&& visit,
                        long long cap = default_enumeration_cap) {
    if (n < 0)
        throw precondition_violated("for_each_ssyt expects n >= 0");
    std::vector<std::vector<int>> rows(shape.length());
    for (int i = 1; i <= shape.length(); ++i)
        rows[i - 1].assign(shape.part(i), 0);

    long long count = 0;
    auto rec = [&](auto&& self, int row, int col) -> void {
        if (row == shape.length()) {
            if (++count > cap)
                throw enumeration_too_large("tableau enumeration exceeds cap");
            visit(ssyt{shape, rows});
            return;
        }
        const int next_row = col + 1 == shape.part(row + 1) ? row + 1 : row;
        const int next_col = col + 1 == shape.part(row + 1) ? 0 : col + 1;
        int lo = 1;
        if (col > 0)
            lo = std::max(lo, rows[row][col - 1]);
        if (row > 0 && col < shape.part(row))
            lo = std::max(lo, rows[row - 1][col] + 1);
        for (int v = lo; v <= n; ++v) {
            rows[row][col] = v;
            self(self, next_row, next_col);
        }
    };
    if (shape.empty()) {
        ++count;
        visit(ssyt{shape, rows});
    } else {
        rec(rec, 0, 0);
    }
    return count;
}

inline std::vector<ssyt> enumerate_ssyt(const partition& shape, int n,
                                        long long cap = default_enumeration_cap) {
    std::vector<ssyt> out;
    for_each_ssyt(
        shape, n, [&](const ssyt& t) { out.push_back(t); }, cap);
    return out;
}

} // namespace zasym

#endif
