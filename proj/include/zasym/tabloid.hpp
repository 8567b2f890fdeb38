#ifndef ZASYM_TABLOID_HPP
#define ZASYM_TABLOID_HPP

#include <chrono>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zasym/bigint.hpp"
#include "zasym/content_sequence.hpp"
#include "zasym/errors.hpp"
#include "zasym/laurent.hpp"
#include "zasym/partition.hpp"
#include "zasym/report.hpp"

namespace zasym {

enum class tabloid_kind { content, hook };

/* A filling of a shape by integers. Content tabloids bound the cell b by
 * 1 - c(b) <= entry <= n; hook tabloids by -a(b) <= entry <= l(b).
 * Entries are addressable by (row, col) and by diagonal label (i, a). */
class tabloid {
public:
    tabloid(partition shape, tabloid_kind kind, std::optional<int> n,
            std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), kind_(kind), n_(n), rows_(std::move(rows)) {
        if (kind_ == tabloid_kind::content && !n_)
            throw precondition_violated("content tabloid requires the color bound n");
        if (static_cast<int>(rows_.size()) != shape_.length())
            throw length_mismatch("row count does not match the shape");
        for (int i = 1; i <= shape_.length(); ++i)
            if (static_cast<int>(rows_[i - 1].size()) != shape_.part(i))
                throw length_mismatch("row " + std::to_string(i) + " does not match the shape");
        for (const cell_stats& s : cell_stats_of(shape_)) {
            const auto [lo, hi] = bounds_for(s);
            const int value = rows_[s.row - 1][s.col - 1];
            if (value < lo || value > hi)
                throw precondition_violated(
                    "entry " + std::to_string(value) + " at (" + std::to_string(s.row) + "," +
                    std::to_string(s.col) + ") outside [" + std::to_string(lo) + "," +
                    std::to_string(hi) + "]");
        }
    }

    const partition& shape() const { return shape_; }
    tabloid_kind kind() const { return kind_; }
    std::optional<int> bound() const { return n_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    int entry(int row, int col) const {
        if (!shape_.contains_cell(row, col))
            throw cell_out_of_shape("cell (" + std::to_string(row) + "," + std::to_string(col) +
                                    ") is outside " + shape_.str());
        return rows_[row - 1][col - 1];
    }

    int entry_at_label(const diag_label& label) const {
        const auto [row, col] = cell_of_diagonal_label(shape_, label);
        return rows_[row - 1][col - 1];
    }

    long long norm() const {
        long long total = 0;
        for (const auto& row : rows_)
            for (int v : row)
                total += v;
        return total;
    }

    std::pair<int, int> bounds_for(const cell_stats& s) const {
        if (kind_ == tabloid_kind::content)
            return {1 - s.content, *n_};
        return {-s.arm, s.leg};
    }

    bool operator==(const tabloid&) const = default;

    std::string str() const {
        std::ostringstream os;
        for (const auto& row : rows_) {
            for (std::size_t j = 0; j < row.size(); ++j)
                os << (j ? " " : "") << row[j];
            os << '\n';
        }
        return os.str();
    }

private:
    partition shape_;
    tabloid_kind kind_;
    std::optional<int> n_;
    std::vector<std::vector<int>> rows_;
};

/* prod (n + c(u)); 0 as soon as any cell has an empty legal range. */
inline bigint count_content_tabloids(const partition& shape, int n) {
    bigint count = 1;
    for (const cell_stats& s : cell_stats_of(shape)) {
        if (n + s.content <= 0)
            return 0;
        count *= n + s.content;
    }
    return count;
}

/* prod h(u). */
inline bigint count_hook_tabloids(const partition& shape) {
    bigint count = 1;
    for (const cell_stats& s : cell_stats_of(shape))
        count *= s.hook;
    return count;
}

inline bigint count_tabloids(const partition& shape, tabloid_kind kind,
                             std::optional<int> n = std::nullopt) {
    if (kind == tabloid_kind::content) {
        if (!n)
            throw precondition_violated("content tabloids require the color bound n");
        return count_content_tabloids(shape, *n);
    }
    return count_hook_tabloids(shape);
}

/* Visit every legal filling exactly once, odometer order over the cells
 * in row-major order (last cell varies fastest). Returns the count. */
template <class Visitor>
bigint for_each_tabloid(const partition& shape, tabloid_kind kind, std::optional<int> n,
                        Visitor&& visit, long long cap = default_enumeration_cap) {
    const bigint total = count_tabloids(shape, kind, n);
    if (total > cap)
        throw enumeration_too_large("tabloid count " + total.str() + " exceeds cap " +
                                    std::to_string(cap));
    if (total == 0)
        return 0;

    const std::vector<cell_stats> cells = cell_stats_of(shape);
    std::vector<std::vector<int>> current(shape.length());
    for (int i = 1; i <= shape.length(); ++i)
        current[i - 1].assign(shape.part(i), 0);
    std::vector<std::pair<int, int>> bounds;
    bounds.reserve(cells.size());
    for (const cell_stats& s : cells) {
        const std::pair<int, int> b = kind == tabloid_kind::content
                                          ? std::pair<int, int>{1 - s.content, *n}
                                          : std::pair<int, int>{-s.arm, s.leg};
        bounds.push_back(b);
        current[s.row - 1][s.col - 1] = b.first;
    }

    bigint count = 0;
    for (;;) {
        ++count;
        visit(tabloid(shape, kind, n, current));
        int idx = static_cast<int>(cells.size()) - 1;
        while (idx >= 0) {
            int& v = current[cells[idx].row - 1][cells[idx].col - 1];
            if (v < bounds[idx].second) {
                ++v;
                break;
            }
            v = bounds[idx].first;
            --idx;
        }
        if (idx < 0)
            break;
    }
    return count;
}

inline std::vector<tabloid> enumerate_tabloids(const partition& shape, tabloid_kind kind,
                                               std::optional<int> n = std::nullopt,
                                               long long cap = default_enumeration_cap) {
    std::vector<tabloid> out;
    for_each_tabloid(
        shape, kind, n, [&](const tabloid& t) { out.push_back(t); }, cap);
    return out;
}

/* Generating function sum_{T} q^{n(T)} over content tabloids, in closed
 * form prod_u q^{1-c(u)} [n + c(u)]; the zero polynomial when some cell
 * has no legal value. */
inline laurent_poly content_gf(const partition& shape, int n) {
    laurent_poly gf = laurent_poly::one();
    for (const cell_stats& s : cell_stats_of(shape)) {
        if (n + s.content <= 0)
            return laurent_poly::zero();
        gf *= laurent_poly::bracket(n + s.content).shifted(1 - s.content);
    }
    return gf;
}

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

inline frobenius_coords shift_coords(const frobenius_coords& fc, int alpha_delta,
                                     int beta_delta) {
    std::vector<int> alpha = fc.alpha, beta = fc.beta;
    for (int& a : alpha)
        a += alpha_delta;
    for (int& b : beta)
        b += beta_delta;
    return frobenius_coords(std::move(alpha), std::move(beta));
}

} // namespace detail

/* The diagonal-shift bijection: a content tabloid T of shape
 * (alpha+m|beta) with bound n maps to the tabloid of shape (alpha|beta+m)
 * with bound n+m whose entry at diagonal label (i,a) is T(i,a+m) + m. */
inline tabloid phi(const tabloid& t, int m) {
    if (m < 0)
        throw precondition_violated("phi expects m >= 0");
    if (t.kind() != tabloid_kind::content)
        throw precondition_violated("phi acts on content tabloids");
    if (m == 0)
        return t;
    const frobenius_coords fc = frobenius(t.shape());
    if (!fc.alpha.empty() && fc.alpha.back() < m)
        throw shape_not_of_form("shape " + t.shape().str() +
                                " is not (alpha+m|beta) for m = " + std::to_string(m));
    const partition target = from_frobenius(detail::shift_coords(fc, -m, m));
    std::vector<std::vector<int>> rows(target.length());
    for (int i = 1; i <= target.length(); ++i)
        rows[i - 1].assign(target.part(i), 0);
    for (const cell_stats& s : cell_stats_of(target)) {
        const diag_label label = diagonal_label_of_cell(target, s.row, s.col);
        rows[s.row - 1][s.col - 1] =
            t.entry_at_label({label.index, label.content + m}) + m;
    }
    return tabloid(target, tabloid_kind::content, *t.bound() + m, std::move(rows));
}

/* Inverse map: entry at label (i,a) of (alpha+m|beta) is S(i,a-m) - m. */
inline tabloid phi_inverse(const tabloid& s, int m) {
    if (m < 0)
        throw precondition_violated("phi_inverse expects m >= 0");
    if (s.kind() != tabloid_kind::content)
        throw precondition_violated("phi_inverse acts on content tabloids");
    if (m == 0)
        return s;
    const frobenius_coords fc = frobenius(s.shape());
    if (!fc.beta.empty() && fc.beta.back() < m)
        throw shape_not_of_form("shape " + s.shape().str() +
                                " is not (alpha|beta+m) for m = " + std::to_string(m));
    const partition target = from_frobenius(detail::shift_coords(fc, m, -m));
    std::vector<std::vector<int>> rows(target.length());
    for (int i = 1; i <= target.length(); ++i)
        rows[i - 1].assign(target.part(i), 0);
    for (const cell_stats& cell : cell_stats_of(target)) {
        const diag_label label = diagonal_label_of_cell(target, cell.row, cell.col);
        rows[cell.row - 1][cell.col - 1] =
            s.entry_at_label({label.index, label.content - m}) - m;
    }
    return tabloid(target, tabloid_kind::content, *s.bound() - m, std::move(rows));
}

/* Check that phi is a norm-shifting bijection from the content tabloids
 * of (alpha+m|beta) bounded by n onto those of (alpha|beta+m) bounded by
 * n+m: by full enumeration when the domain fits under the cap, and in
 * closed form through the generating functions either way. */
inline verification_report verify_phi(const frobenius_coords& base, int m, int n,
                                      long long cap = default_enumeration_cap) {
    const auto started = std::chrono::steady_clock::now();
    if (m < 1)
        throw precondition_violated("verify_phi expects m >= 1");
    const partition domain = from_frobenius(detail::shift_coords(base, m, 0));
    const partition codomain = from_frobenius(detail::shift_coords(base, 0, m));
    if (domain.length() > n)
        throw precondition_violated("(alpha+m|beta) must have length at most n");

    const long long shift_total = m * domain.weight();
    const bigint domain_count = count_content_tabloids(domain, n);
    const bigint codomain_count = count_content_tabloids(codomain, n + m);

    verification_report report;
    report.claim = "phi";
    report.params = {{"alpha", detail::join_ints(base.alpha)},
                     {"beta", detail::join_ints(base.beta)},
                     {"m", std::to_string(m)},
                     {"n", std::to_string(n)}};
    report.domain_size = domain_count.str();
    report.pass = true;

    auto fail = [&](const std::string& why, const tabloid& t) {
        if (!report.pass)
            return;
        report.pass = false;
        std::ostringstream os;
        os << "{\"reason\":\"" << why << "\",\"entries\":\"" << t.str() << "\"}";
        report.witness = os.str();
    };

    if (domain_count != codomain_count) {
        report.pass = false;
        report.witness = "{\"reason\":\"domain and codomain counts differ\"}";
    }

    if (report.pass && domain_count <= cap) {
        std::set<std::vector<std::vector<int>>> images;
        for_each_tabloid(
            domain, tabloid_kind::content, n,
            [&](const tabloid& t) {
                const tabloid image = phi(t, m);
                if (image.norm() != t.norm() + shift_total)
                    fail("norm shift violated", t);
                if (phi_inverse(image, m) != t)
                    fail("phi_inverse does not invert phi", t);
                if (!images.insert(image.rows()).second)
                    fail("phi is not injective", t);
            },
            cap);
        if (report.pass && bigint(static_cast<long long>(images.size())) != codomain_count) {
            report.pass = false;
            report.witness = "{\"reason\":\"image does not fill the codomain\"}";
        }
    }

    const laurent_poly lhs = content_gf(codomain, n + m);
    const laurent_poly rhs = content_gf(domain, n).shifted(shift_total);
    report.lhs = lhs.str();
    report.rhs = rhs.str();
    if (lhs != rhs && report.witness.empty()) {
        report.pass = false;
        report.witness = "{\"reason\":\"generating functions differ\"}";
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

} // namespace zasym

#endif
