#ifndef ZASYM_SCHUR_HPP
#define ZASYM_SCHUR_HPP

#include <vector>

#include "zasym/bigint.hpp"
#include "zasym/errors.hpp"
#include "zasym/laurent.hpp"
#include "zasym/multivariate.hpp"
#include "zasym/partition.hpp"
#include "zasym/ssyt.hpp"

namespace zasym {

/* dim of the highest-weight module with weight pi over n variables:
 * prod (n + c(u)) / prod h(u), an exact integer equal to the number of
 * semistandard tableaux of shape pi with entries <= n. */
inline bigint dim_hook_content(const partition& pi, int n) {
    if (pi.length() > n)
        throw length_exceeds_n("shape " + pi.str() + " is longer than n = " + std::to_string(n));
    bigint numerator = 1, denominator = 1;
    for (const cell_stats& s : cell_stats_of(pi)) {
        numerator *= n + s.content;
        denominator *= s.hook;
    }
    if (numerator % denominator != 0)
        throw inexact_division("hook content quotient is not integral");
    return numerator / denominator;
}

/* Schur polynomial as the tableau weight sum, truncated at total degree
 * cap (it is homogeneous of degree |lambda|, so either kept whole or
 * dropped whole). Zero when the shape is longer than the variable count. */
inline truncated_multi_poly schur_truncated(const partition& lambda, int nvars, int cap,
                                            long long enum_cap = default_enumeration_cap) {
    truncated_multi_poly out(nvars, cap);
    if (lambda.length() > nvars || lambda.weight() > cap)
        return out;
    for_each_ssyt(
        lambda, nvars,
        [&](const ssyt& t) {
            std::vector<int> exps(nvars, 0);
            for (const auto& row : t.rows)
                for (int v : row)
                    ++exps[v - 1];
            out.add_term(std::move(exps), 1);
        },
        enum_cap);
    return out;
}

namespace detail {

/* Fraction-free (Bareiss) determinant over exact integers. */
inline bigint det_bareiss(std::vector<std::vector<bigint>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0)
        return 1;
    bigint prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n && pivot < 0; ++r)
                if (m[r][k] != 0)
                    pivot = r;
            if (pivot < 0)
                return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

inline bigint int_pow(const bigint& base, int e) {
    bigint out = 1;
    for (int i = 0; i < e; ++i)
        out *= base;
    return out;
}

} // namespace detail

/* Bialternant evaluation det(x_i^{lambda_j + n - j}) / det(x_i^{n - j})
 * at pairwise distinct integer points; the quotient is an exact integer. */
inline bigint schur_bialternant_eval(const partition& lambda, const std::vector<bigint>& points) {
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw repeated_point("evaluation points must be pairwise distinct");
    if (lambda.length() > n)
        return 0;
    std::vector<std::vector<bigint>> num(n, std::vector<bigint>(n));
    std::vector<std::vector<bigint>> den(n, std::vector<bigint>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j <= n; ++j) {
            num[i][j - 1] = detail::int_pow(points[i], lambda.part(j) + n - j);
            den[i][j - 1] = detail::int_pow(points[i], n - j);
        }
    }
    const bigint numerator = detail::det_bareiss(std::move(num));
    const bigint denominator = detail::det_bareiss(std::move(den));
    if (numerator % denominator != 0)
        throw inexact_division("bialternant quotient is not integral");
    return numerator / denominator;
}

/* s_lambda(1, q, ..., q^{n-1}) = q^{k(lambda)} prod [n+c(u)] / [h(u)],
 * with exact Laurent division. Zero when the shape is longer than n. */
inline laurent_poly principal_specialization(const partition& lambda, int n) {
    if (lambda.length() > n)
        return laurent_poly::zero();
    laurent_poly numerator = laurent_poly::one();
    laurent_poly denominator = laurent_poly::one();
    for (const cell_stats& s : cell_stats_of(lambda)) {
        numerator *= laurent_poly::bracket(n + s.content);
        denominator *= laurent_poly::bracket(s.hook);
    }
    return exact_div(numerator, denominator).shifted(k_statistic(lambda));
}

/* Tableau-sum oracle for arbitrary substitutions x_i = q^{exps[i-1]}. */
inline laurent_poly specialization_oracle(const partition& lambda, const std::vector<int>& exps,
                                          long long enum_cap = default_enumeration_cap) {
    if (lambda.length() > static_cast<int>(exps.size()))
        return laurent_poly::zero();
    laurent_poly out;
    for_each_ssyt(
        lambda, static_cast<int>(exps.size()),
        [&](const ssyt& t) {
            long long e = 0;
            for (const auto& row : t.rows)
                for (int v : row)
                    e += exps[v - 1];
            out.add_term(static_cast<int>(e), 1);
        },
        enum_cap);
    return out;
}

/* s_lambda(q^start, q^{start+2}, ..., q^{start+2(count-1)}), computed as
 * q^{start |lambda|} times the principal specialization in q^2. */
inline laurent_poly stepped_specialization(const partition& lambda, int start, int count) {
    if (lambda.length() > count)
        return laurent_poly::zero();
    return principal_specialization(lambda, count)
        .substituted_power(2)
        .shifted(static_cast<long long>(start) * lambda.weight());
}

/* Same value through the tableau sum; the cross-check route. */
inline laurent_poly stepped_specialization_ssyt(const partition& lambda, int start, int count,
                                                long long enum_cap = default_enumeration_cap) {
    std::vector<int> exps(count);
    for (int i = 0; i < count; ++i)
        exps[i] = start + 2 * i;
    return specialization_oracle(lambda, exps, enum_cap);
}

} // namespace zasym

#endif
