#ifndef ZASYM_CONTENT_SEQUENCE_HPP
#define ZASYM_CONTENT_SEQUENCE_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "zasym/errors.hpp"
#include "zasym/partition.hpp"

namespace zasym {

/* Per-content box counts of a partition, as a finitely supported map
 * content -> count. A valid sequence is unimodal with its maximum at the
 * origin and hits every value in {1,...,x_0 - 1} on both sides of it;
 * those two conditions are exactly what makes the partition recoverable. */
class content_sequence {
public:
    content_sequence() = default;

    explicit content_sequence(std::map<int, int> counts) : counts_(std::move(counts)) {
        for (auto it = counts_.begin(); it != counts_.end();) {
            if (it->second == 0)
                it = counts_.erase(it);
            else if (it->second < 0)
                throw not_a_content_sequence("negative box count at content " +
                                             std::to_string(it->first));
            else
                ++it;
        }
        validate();
    }

    int at(int a) const {
        auto it = counts_.find(a);
        return it == counts_.end() ? 0 : it->second;
    }

    int peak() const { return at(0); }

    const std::map<int, int>& counts() const { return counts_; }

    int min_content() const { return counts_.empty() ? 0 : counts_.begin()->first; }
    int max_content() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }

    bool operator==(const content_sequence&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (int a = min_content(); a <= max_content(); ++a) {
            if (a > min_content())
                os << ',';
            if (a == 0)
                os << '[' << at(a) << ']';
            else
                os << at(a);
        }
        os << ')';
        return os.str();
    }

private:
    void validate() const {
        if (counts_.empty())
            return;
        const int lo = min_content(), hi = max_content();
        for (int a = lo - 1; a < 0; ++a)
            if (at(a) > at(a + 1))
                throw not_a_content_sequence("not ascending left of the origin at " +
                                             std::to_string(a));
        for (int a = 0; a <= hi; ++a)
            if (at(a) < at(a + 1))
                throw not_a_content_sequence("not descending right of the origin at " +
                                             std::to_string(a));
        /* Coverage: each of 1..peak-1 occurs on both sides. This is what
         * forces the recovered Frobenius coordinates to be strict. */
        const int peak_value = peak();
        for (int value = 1; value < peak_value; ++value) {
            bool left = false, right = false;
            for (const auto& [a, x] : counts_) {
                if (x == value) {
                    left = left || a < 0;
                    right = right || a > 0;
                }
            }
            if (!left || !right)
                throw not_a_content_sequence("value " + std::to_string(value) +
                                             " missing on one side of the peak");
        }
    }

    std::map<int, int> counts_;
};

inline content_sequence content_sequence_of(const partition& p) {
    std::map<int, int> counts;
    for (const cell_stats& s : cell_stats_of(p))
        ++counts[s.content];
    return content_sequence(std::move(counts));
}

/* Inverse of content_sequence_of: peak = rank, and the side counts are
 * conjugated back into the Frobenius coordinates. */
inline partition partition_from_content_sequence(const content_sequence& c) {
    const int r = c.peak();
    if (r == 0)
        return partition{}; // validated sequences with zero peak are all-zero
    std::vector<int> alpha(r, 0), beta(r, 0);
    for (const auto& [a, x] : c.counts()) {
        if (a > 0)
            for (int i = 0; i < std::min(x, r); ++i)
                ++alpha[i];
        if (a < 0)
            for (int i = 0; i < std::min(x, r); ++i)
                ++beta[i];
    }
    return from_frobenius(frobenius_coords(std::move(alpha), std::move(beta)));
}

/* lambda = (alpha + m | alpha) for strict alpha, i.e. the conjugate is
 * m-asymmetric; equivalently the content sequence satisfies
 * x_a = x_{m-a} for all a. Both readings are computed and must agree. */
inline bool is_shifted_form(const partition& p, int m) {
    if (m < 0)
        throw precondition_violated("is_shifted_form expects m >= 0");
    const content_sequence x = content_sequence_of(p);
    bool mirrored = true;
    const int lo = std::min(x.min_content(), m - x.max_content());
    const int hi = std::max(x.max_content(), m - x.min_content());
    for (int a = lo; a <= hi && mirrored; ++a)
        mirrored = x.at(a) == x.at(m - a);
    if (mirrored != is_z_asymmetric(conjugate(p), m))
        throw std::logic_error("is_shifted_form: mirror and Frobenius readings disagree");
    return mirrored;
}

/* Label of a cell along its diagonal: cells of content a are (1,a) ...
 * (x_a, a), ordered by increasing row. */
struct diag_label {
    int index = 0;   // 1-based position along the diagonal
    int content = 0; // the diagonal

    bool operator==(const diag_label&) const = default;
};

inline diag_label diagonal_label_of_cell(const partition& p, int row, int col) {
    if (!p.contains_cell(row, col))
        throw cell_out_of_shape("cell (" + std::to_string(row) + "," + std::to_string(col) +
                                ") is outside " + p.str());
    return {std::min(row, col), col - row};
}

inline std::pair<int, int> cell_of_diagonal_label(const partition& p, const diag_label& label) {
    const int row = label.content >= 0 ? label.index : label.index - label.content;
    const int col = label.content >= 0 ? label.index + label.content : label.index;
    if (label.index < 1 || !p.contains_cell(row, col))
        throw cell_out_of_shape("label (" + std::to_string(label.index) + "," +
                                std::to_string(label.content) + ") is invalid for " + p.str());
    return {row, col};
}

} // namespace zasym

#endif
