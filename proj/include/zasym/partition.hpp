#ifndef ZASYM_PARTITION_HPP
#define ZASYM_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zasym/errors.hpp"

namespace zasym {

/* Default ceiling for the exhaustive enumerators (tabloids, tableaux).
 * Closed-form counts stay available past the cap. */
inline constexpr long long default_enumeration_cap = 10'000'000;

/* An integer partition: weakly decreasing positive parts, stored without
 * trailing zeros. The empty sequence is the empty partition. */
class partition {
public:
    partition() = default;

    explicit partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw negative_part("partition part " + std::to_string(parts_[i]) + " is negative");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw not_weakly_decreasing("parts are not weakly decreasing at index " +
                                            std::to_string(i));
        }
    }

    const std::vector<int>& parts() const { return parts_; }

    int length() const { return static_cast<int>(parts_.size()); }

    long long weight() const {
        long long w = 0;
        for (int p : parts_)
            w += p;
        return w;
    }

    bool empty() const { return parts_.empty(); }

    /* lambda_i with the mathematical 1-based index; 0 past the length. */
    int part(int i) const {
        if (i < 1)
            throw std::out_of_range("partition::part expects a 1-based index");
        return i <= length() ? parts_[i - 1] : 0;
    }

    bool contains_cell(int row, int col) const {
        return row >= 1 && col >= 1 && row <= length() && col <= part(row);
    }

    auto operator<=>(const partition&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < parts_.size(); ++i)
            os << (i ? "," : "") << parts_[i];
        os << ')';
        return os.str();
    }

private:
    std::vector<int> parts_;
};

inline partition make_partition(std::vector<int> parts) { return partition(std::move(parts)); }

/* Frobenius coordinates (alpha|beta): two strict partitions of common
 * length r = rank, alpha_i = lambda_i - i and beta_j = lambda'_j - j. */
struct frobenius_coords {
    std::vector<int> alpha;
    std::vector<int> beta;

    frobenius_coords() = default;

    frobenius_coords(std::vector<int> a, std::vector<int> b)
        : alpha(std::move(a)), beta(std::move(b)) {
        if (alpha.size() != beta.size())
            throw length_mismatch("alpha and beta must have the same length");
        auto check_strict = [](const std::vector<int>& v, const char* name) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] < 0)
                    throw non_strict_coordinates(std::string(name) + " has a negative entry");
                if (i + 1 < v.size() && v[i] <= v[i + 1])
                    throw non_strict_coordinates(std::string(name) +
                                                 " is not strictly decreasing");
            }
        };
        check_strict(alpha, "alpha");
        check_strict(beta, "beta");
    }

    int rank() const { return static_cast<int>(alpha.size()); }

    bool operator==(const frobenius_coords&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < alpha.size(); ++i)
            os << (i ? "," : "") << alpha[i];
        os << '|';
        for (std::size_t i = 0; i < beta.size(); ++i)
            os << (i ? "," : "") << beta[i];
        os << ')';
        return os.str();
    }
};

/* Per-cell statistics. Coordinates are 1-based; content = col - row;
 * arm/leg count the cells strictly right/below, so hook = arm + leg + 1. */
struct cell_stats {
    int row = 0;
    int col = 0;
    int content = 0;
    int hook = 0;
    int arm = 0;
    int leg = 0;

    bool operator==(const cell_stats&) const = default;
};

inline partition conjugate(const partition& p) {
    std::vector<int> cols;
    const int width = p.empty() ? 0 : p.parts().front();
    cols.reserve(width);
    for (int j = 1; j <= width; ++j) {
        int count = 0;
        for (int part : p.parts())
            if (part >= j)
                ++count;
        cols.push_back(count);
    }
    return partition(std::move(cols));
}

/* Largest k with lambda_k >= k; 0 for the empty partition. */
inline int rank(const partition& p) {
    int r = 0;
    while (r < p.length() && p.part(r + 1) >= r + 1)
        ++r;
    return r;
}

inline frobenius_coords frobenius(const partition& p) {
    const int r = rank(p);
    const partition conj = conjugate(p);
    std::vector<int> alpha(r), beta(r);
    for (int i = 1; i <= r; ++i) {
        alpha[i - 1] = p.part(i) - i;
        beta[i - 1] = conj.part(i) - i;
    }
    return frobenius_coords(std::move(alpha), std::move(beta));
}

inline partition from_frobenius(const frobenius_coords& fc) {
    const int r = fc.rank();
    if (r == 0)
        return partition{};
    std::vector<int> parts;
    parts.reserve(fc.beta.front() + 1);
    for (int i = 1; i <= r; ++i)
        parts.push_back(fc.alpha[i - 1] + i);
    for (int i = r + 1; i <= fc.beta.front() + 1; ++i) {
        int count = 0;
        for (int j = 1; j <= r; ++j)
            if (fc.beta[j - 1] + j >= i)
                ++count;
        parts.push_back(count);
    }
    return partition(std::move(parts));
}

/* a + lambda applied to the stored (nonzero) parts only. */
inline partition add_scalar(int a, const partition& p) {
    if (a < 0)
        throw negative_part("add_scalar expects a nonnegative shift");
    std::vector<int> parts = p.parts();
    for (int& part : parts)
        part += a;
    return partition(std::move(parts));
}

/* lambda = (alpha | alpha + z) in Frobenius coordinates. The empty
 * partition is z-asymmetric for every z. */
inline bool is_z_asymmetric(const partition& p, int z) {
    const frobenius_coords fc = frobenius(p);
    for (int i = 0; i < fc.rank(); ++i)
        if (fc.beta[i] != fc.alpha[i] + z)
            return false;
    return true;
}

/* Row-major cell statistics. */
inline std::vector<cell_stats> cell_stats_of(const partition& p) {
    const partition conj = conjugate(p);
    std::vector<cell_stats> out;
    out.reserve(static_cast<std::size_t>(p.weight()));
    for (int i = 1; i <= p.length(); ++i) {
        for (int j = 1; j <= p.part(i); ++j) {
            cell_stats s;
            s.row = i;
            s.col = j;
            s.content = j - i;
            s.arm = p.part(i) - j;
            s.leg = conj.part(j) - i;
            s.hook = s.arm + s.leg + 1;
            out.push_back(s);
        }
    }
    return out;
}

/* k(lambda) = sum (i-1) lambda_i = sum C(lambda'_i, 2); both routes are
 * evaluated and must agree. */
inline long long k_statistic(const partition& p) {
    long long by_rows = 0;
    for (int i = 1; i <= p.length(); ++i)
        by_rows += static_cast<long long>(i - 1) * p.part(i);
    long long by_columns = 0;
    for (int c : conjugate(p).parts())
        by_columns += static_cast<long long>(c) * (c - 1) / 2;
    if (by_rows != by_columns)
        throw std::logic_error("k_statistic: row and column formulas disagree");
    return by_rows;
}

/* Sum of contents; checked against k(lambda') - k(lambda). */
inline long long content_sum(const partition& p) {
    long long total = 0;
    for (const cell_stats& s : cell_stats_of(p))
        total += s.content;
    if (total != k_statistic(conjugate(p)) - k_statistic(p))
        throw std::logic_error("content_sum: disagrees with k(conjugate) - k");
    return total;
}

namespace detail {

inline void emit_partitions(int remaining, int max_part, int max_len, std::vector<int>& acc,
                            std::vector<partition>& out) {
    if (remaining == 0) {
        out.push_back(partition(acc));
        return;
    }
    if (max_len == 0)
        return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        emit_partitions(remaining - part, part, max_len - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace detail

/* All partitions of the given weight in decreasing lexicographic order,
 * optionally bounded in length. */
inline std::vector<partition> enumerate_partitions(int weight,
                                                   std::optional<int> max_length = std::nullopt) {
    if (weight < 0)
        throw precondition_violated("enumerate_partitions expects weight >= 0");
    std::vector<partition> out;
    std::vector<int> acc;
    detail::emit_partitions(weight, weight, max_length.value_or(weight), acc, out);
    return out;
}

/* Strictly decreasing sequences with exactly `len` parts >= min_part and
 * the given sum, in decreasing lexicographic order. */
inline std::vector<std::vector<int>> enumerate_strict_partitions(int sum, int len,
                                                                 int min_part = 0) {
    std::vector<std::vector<int>> out;
    if (len == 0) {
        if (sum == 0)
            out.push_back({});
        return out;
    }
    const long long base =
        static_cast<long long>(len) * min_part + static_cast<long long>(len) * (len - 1) / 2;
    if (sum < base)
        return out;
    /* alpha_i = mu_i + (len - i) + min_part turns a partition mu with at
     * most `len` parts into a strict sequence. */
    for (const partition& mu : enumerate_partitions(sum - static_cast<int>(base), len)) {
        std::vector<int> alpha(len);
        for (int i = 0; i < len; ++i)
            alpha[i] = mu.part(i + 1) + (len - 1 - i) + min_part;
        out.push_back(std::move(alpha));
    }
    return out;
}

/* The z-asymmetric partitions of the given weight, built from strict
 * alpha with sum(2 alpha_i + z + 1) = weight, returned in decreasing
 * lexicographic order. Empty result when none exist. */
inline std::vector<partition> enumerate_z_asymmetric(int weight, int z) {
    if (weight < 0)
        throw precondition_violated("enumerate_z_asymmetric expects weight >= 0");
    std::vector<partition> out;
    if (weight == 0) {
        out.push_back(partition{});
        return out;
    }
    const int min_part = std::max(0, -z);
    for (int r = 1;; ++r) {
        const long long min_sum =
            static_cast<long long>(r) * min_part + static_cast<long long>(r) * (r - 1) / 2;
        const long long min_weight = 2 * min_sum + static_cast<long long>(r) * (z + 1);
        if (min_weight > weight)
            break;
        const long long doubled = weight - static_cast<long long>(r) * (z + 1);
        if (doubled < 0 || doubled % 2 != 0)
            continue;
        for (std::vector<int>& alpha :
             enumerate_strict_partitions(static_cast<int>(doubled / 2), r, min_part)) {
            std::vector<int> beta = alpha;
            for (int& b : beta)
                b += z;
            out.push_back(from_frobenius(frobenius_coords(std::move(alpha), std::move(beta))));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const partition& a, const partition& b) { return b.parts() < a.parts(); });
    return out;
}

} // namespace zasym

#endif
