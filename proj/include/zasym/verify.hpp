#ifndef ZASYM_VERIFY_HPP
#define ZASYM_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "zasym/bigint.hpp"
#include "zasym/errors.hpp"
#include "zasym/laurent.hpp"
#include "zasym/multivariate.hpp"
#include "zasym/partition.hpp"
#include "zasym/report.hpp"
#include "zasym/schur.hpp"
#include "zasym/tabloid.hpp"

namespace zasym {

namespace detail {

struct stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

inline std::string laurent_diff_witness(const laurent_poly& lhs, const laurent_poly& rhs) {
    const laurent_poly diff = lhs - rhs;
    if (diff.is_zero())
        return {};
    const int e = diff.coeffs().begin()->first;
    std::ostringstream os;
    os << "{\"exponent\":" << e << ",\"lhs_coeff\":\"" << lhs.coeff(e).str()
       << "\",\"rhs_coeff\":\"" << rhs.coeff(e).str() << "\"}";
    return os.str();
}

inline std::string multi_diff_witness(const truncated_multi_poly& lhs,
                                      const truncated_multi_poly& rhs) {
    const truncated_multi_poly diff = lhs - rhs;
    if (diff.is_zero())
        return {};
    const auto& [exps, unused] = *diff.terms().begin();
    bigint lc = 0, rc = 0;
    if (auto it = lhs.terms().find(exps); it != lhs.terms().end())
        lc = it->second;
    if (auto it = rhs.terms().find(exps); it != rhs.terms().end())
        rc = it->second;
    std::ostringstream os;
    os << "{\"monomial\":" << '[' << join_ints(exps) << ']' << ",\"lhs_coeff\":\"" << lc.str()
       << "\",\"rhs_coeff\":\"" << rc.str() << "\"}";
    return os.str();
}

inline int coords_length(const frobenius_coords& fc) {
    return fc.rank() == 0 ? 0 : fc.beta.front() + 1;
}

inline int coords_first_part(const frobenius_coords& fc) {
    return fc.rank() == 0 ? 0 : fc.alpha.front() + 1;
}

} // namespace detail

/* ---- Littlewood product identities, verified as truncated series ---- */

/* which = 1: prod_{1<=i<=j<=n} (1 - x_i x_j) over n variables.
 * which = 2: prod_{1<=i<j<=n+1} (1 - x_i x_j) over n+1 variables. */
inline truncated_multi_poly littlewood_lhs(int which, int n, int degree_cap) {
    if (which != 1 && which != 2)
        throw precondition_violated("littlewood_lhs expects which in {1,2}");
    const int nvars = which == 1 ? n : n + 1;
    truncated_multi_poly out = truncated_multi_poly::one(nvars, degree_cap);
    for (int i = 1; i <= nvars; ++i) {
        for (int j = i + (which == 1 ? 0 : 1); j <= nvars; ++j) {
            truncated_multi_poly factor = truncated_multi_poly::one(nvars, degree_cap);
            std::vector<int> exps(nvars, 0);
            ++exps[i - 1];
            ++exps[j - 1];
            factor.add_term(std::move(exps), -1);
            out *= factor;
        }
    }
    return out;
}

/* Partitions of the given weight of the form (alpha+m|alpha), decreasing
 * lexicographic. */
inline std::vector<partition> enumerate_shifted_form(int weight, int m) {
    std::vector<partition> out;
    for (const partition& p : enumerate_z_asymmetric(weight, m))
        out.push_back(conjugate(p));
    std::sort(out.begin(), out.end(),
              [](const partition& a, const partition& b) { return b.parts() < a.parts(); });
    return out;
}

/* Signed Schur sum over shapes (alpha+1|alpha) of length at most n.
 * drop_sign is a deliberate mutation used to show the check has teeth. */
inline truncated_multi_poly littlewood_rhs(int which, int n, int degree_cap,
                                           bool drop_sign = false) {
    if (which != 1 && which != 2)
        throw precondition_violated("littlewood_rhs expects which in {1,2}");
    const int nvars = which == 1 ? n : n + 1;
    truncated_multi_poly out(nvars, degree_cap);
    for (int w = 0; w <= degree_cap; w += 2) {
        for (const partition& lam : enumerate_shifted_form(w, 1)) {
            if (lam.length() > n)
                continue;
            const partition shape = which == 1 ? lam : conjugate(lam);
            const truncated_multi_poly schur = schur_truncated(shape, nvars, degree_cap);
            const bigint sign = drop_sign || (w / 2) % 2 == 0 ? 1 : -1;
            for (const auto& [exps, coeff] : schur.terms())
                out.add_term(exps, sign * coeff);
        }
    }
    return out;
}

inline verification_report verify_littlewood(int which, int n, int degree_cap,
                                             bool drop_sign = false) {
    detail::stopwatch sw;
    if (n < 1 || degree_cap < 0)
        throw precondition_violated("littlewood verification expects n >= 1, D >= 0");
    const truncated_multi_poly lhs = littlewood_lhs(which, n, degree_cap);
    const truncated_multi_poly rhs = littlewood_rhs(which, n, degree_cap, drop_sign);

    verification_report report;
    report.claim = which == 1 ? "littlewood1" : "littlewood2";
    report.params = {{"n", std::to_string(n)}, {"D", std::to_string(degree_cap)}};
    if (drop_sign)
        report.params.emplace_back("mutated", "drop_sign");
    report.pass = lhs == rhs;
    report.lhs = lhs.str();
    report.rhs = rhs.str();
    if (!report.pass)
        report.witness = detail::multi_diff_witness(lhs, rhs);
    report.elapsed_ms = sw.ms();
    return report;
}

inline verification_report verify_littlewood_1(int n, int degree_cap, bool drop_sign = false) {
    return verify_littlewood(1, n, degree_cap, drop_sign);
}

inline verification_report verify_littlewood_2(int n, int degree_cap, bool drop_sign = false) {
    return verify_littlewood(2, n, degree_cap, drop_sign);
}

/* ---- Dimension product identity ---- */

/* dim F^(p)_(a+m|b) dim F^(q)_(b+m|a) = dim F^(p+m)_(a|b+m) dim F^(q+m)_(b|a+m)
 * for (a|b) of length <= p and first part <= q. */
inline verification_report verify_thm21(const frobenius_coords& base, int m, int p, int q) {
    detail::stopwatch sw;
    if (m < 1)
        throw precondition_violated("verify_thm21 expects m >= 1");
    if (detail::coords_length(base) > p || detail::coords_first_part(base) > q)
        throw precondition_violated(
            "theorem requires length(alpha|beta) <= p and first part <= q");
    const frobenius_coords swapped(base.beta, base.alpha);
    const bigint d1 = dim_hook_content(from_frobenius(detail::shift_coords(base, m, 0)), p);
    const bigint d2 = dim_hook_content(from_frobenius(detail::shift_coords(swapped, m, 0)), q);
    const bigint d3 = dim_hook_content(from_frobenius(detail::shift_coords(base, 0, m)), p + m);
    const bigint d4 =
        dim_hook_content(from_frobenius(detail::shift_coords(swapped, 0, m)), q + m);

    verification_report report;
    report.claim = "thm21";
    report.params = {{"alpha", detail::join_ints(base.alpha)},
                     {"beta", detail::join_ints(base.beta)},
                     {"m", std::to_string(m)},
                     {"p", std::to_string(p)},
                     {"q", std::to_string(q)}};
    report.pass = d1 * d2 == d3 * d4;
    report.lhs = (d1 * d2).str();
    report.rhs = (d3 * d4).str();
    if (!report.pass) {
        std::ostringstream os;
        os << "{\"dims\":[\"" << d1.str() << "\",\"" << d2.str() << "\",\"" << d3.str()
           << "\",\"" << d4.str() << "\"]}";
        report.witness = os.str();
    }
    report.elapsed_ms = sw.ms();
    return report;
}

/* ---- Dimension stability iff the conjugate is m-asymmetric ---- */

/* The condition "dim F^(n)_lambda = dim F^(n+m)_lambda' for every
 * n >= l(lambda)" reduces to equality of two degree-|lambda| monic
 * polynomials in n, decided exactly at the |lambda|+1 integer points
 * n = l(lambda) .. l(lambda)+|lambda|. */
inline verification_report verify_thm22(const partition& lam, int m) {
    detail::stopwatch sw;
    if (m < 0)
        throw precondition_violated("verify_thm22 expects m >= 0");
    const partition conj = conjugate(lam);
    const std::vector<cell_stats> cells = cell_stats_of(lam);
    const std::vector<cell_stats> conj_cells = cell_stats_of(conj);

    bool products_equal = true;
    std::string separating;
    for (long long n = lam.length(); n <= lam.length() + lam.weight() && products_equal; ++n) {
        bigint lhs = 1, rhs = 1;
        for (const cell_stats& s : cells)
            lhs *= n + s.content;
        for (const cell_stats& s : conj_cells)
            rhs *= n + m + s.content;
        if (lhs != rhs) {
            products_equal = false;
            std::ostringstream os;
            os << "{\"n\":" << n << ",\"lhs\":\"" << lhs.str() << "\",\"rhs\":\"" << rhs.str()
               << "\"}";
            separating = os.str();
        }
    }
    const bool conj_is_asymmetric = is_z_asymmetric(conj, m);

    verification_report report;
    report.claim = "thm22";
    report.params = {{"lambda", lam.str()}, {"m", std::to_string(m)}};
    report.pass = products_equal == conj_is_asymmetric;
    report.lhs = products_equal ? "dimensions-agree" : "dimensions-differ";
    report.rhs = conj_is_asymmetric ? "conjugate-m-asymmetric" : "conjugate-not-m-asymmetric";
    if (!report.pass)
        report.witness = separating.empty() ? "{\"reason\":\"products agree on all points\"}"
                                            : separating;
    report.elapsed_ms = sw.ms();
    return report;
}

/* ---- q-analogue through stepped specializations ---- */

inline verification_report verify_thm33(const partition& lam, int m, int n) {
    detail::stopwatch sw;
    if (m < 1)
        throw precondition_violated("verify_thm33 expects m >= 1");
    if (!is_z_asymmetric(lam, m))
        throw precondition_violated("lambda must be m-asymmetric");
    if (lam.length() > m + n)
        throw precondition_violated("lambda must have length at most m+n");
    const laurent_poly lhs = stepped_specialization(lam, 1 - n - m, n + m);
    const laurent_poly rhs = stepped_specialization(conjugate(lam), 1 - n, n);

    verification_report report;
    report.claim = "thm33";
    report.params = {{"lambda", lam.str()}, {"m", std::to_string(m)}, {"n", std::to_string(n)}};
    report.pass = lhs == rhs;
    report.lhs = lhs.str();
    report.rhs = rhs.str();
    if (!report.pass)
        report.witness = detail::laurent_diff_witness(lhs, rhs);
    report.elapsed_ms = sw.ms();
    return report;
}

/* ---- Exact statistics of m-asymmetric shapes ---- */

inline verification_report verify_lemma_k(const partition& lam, int m) {
    detail::stopwatch sw;
    if (m < 0)
        throw precondition_violated("verify_lemma_k expects m >= 0");
    if (!is_z_asymmetric(lam, m))
        throw precondition_violated("lambda must be m-asymmetric");
    const long long lhs = 2 * (k_statistic(lam) - k_statistic(conjugate(lam)));
    const long long rhs = static_cast<long long>(m) * lam.weight();

    verification_report report;
    report.claim = "lemma-k";
    report.params = {{"lambda", lam.str()}, {"m", std::to_string(m)}};
    report.pass = lhs == rhs;
    report.lhs = std::to_string(lhs);
    report.rhs = std::to_string(rhs);
    report.elapsed_ms = sw.ms();
    return report;
}

inline verification_report verify_cor_content(const partition& lam, int m) {
    detail::stopwatch sw;
    if (m < 0)
        throw precondition_violated("verify_cor_content expects m >= 0");
    if (!is_z_asymmetric(lam, m))
        throw precondition_violated("lambda must be m-asymmetric");
    const long long lhs = content_sum(lam) - content_sum(conjugate(lam));
    const long long rhs = -static_cast<long long>(m) * lam.weight();

    verification_report report;
    report.claim = "cor-content";
    report.params = {{"lambda", lam.str()}, {"m", std::to_string(m)}};
    report.pass = lhs == rhs;
    report.lhs = std::to_string(lhs);
    report.rhs = std::to_string(rhs);
    report.elapsed_ms = sw.ms();
    return report;
}

/* ---- Content product identity ---- */

inline verification_report verify_cor34(const frobenius_coords& base, int m, int n) {
    detail::stopwatch sw;
    if (m < 0)
        throw precondition_violated("verify_cor34 expects m >= 0");
    if (detail::coords_length(base) > n)
        throw precondition_violated("(alpha|beta) must have length at most n");
    bigint lhs = 1, rhs = 1;
    for (const cell_stats& s : cell_stats_of(from_frobenius(detail::shift_coords(base, m, 0))))
        lhs *= n + s.content;
    for (const cell_stats& s : cell_stats_of(from_frobenius(detail::shift_coords(base, 0, m))))
        rhs *= m + n + s.content;

    verification_report report;
    report.claim = "cor34";
    report.params = {{"alpha", detail::join_ints(base.alpha)},
                     {"beta", detail::join_ints(base.beta)},
                     {"m", std::to_string(m)},
                     {"n", std::to_string(n)}};
    report.pass = lhs == rhs;
    report.lhs = lhs.str();
    report.rhs = rhs.str();
    report.elapsed_ms = sw.ms();
    return report;
}

/* ---- Generating function identity for m-asymmetric shapes ---- */

inline verification_report verify_cor35(const partition& lam, int m, int n) {
    detail::stopwatch sw;
    if (m < 0)
        throw precondition_violated("verify_cor35 expects m >= 0");
    if (!is_z_asymmetric(lam, m))
        throw precondition_violated("lambda must be m-asymmetric");
    if (lam.length() > m + n)
        throw precondition_violated("lambda must have length at most m+n");
    const laurent_poly lhs = content_gf(lam, m + n);
    const laurent_poly rhs =
        content_gf(conjugate(lam), n).shifted(static_cast<long long>(m) * lam.weight());

    verification_report report;
    report.claim = "cor35";
    report.params = {{"lambda", lam.str()}, {"m", std::to_string(m)}, {"n", std::to_string(n)}};
    report.pass = lhs == rhs;
    report.lhs = lhs.str();
    report.rhs = rhs.str();
    if (!report.pass)
        report.witness = detail::laurent_diff_witness(lhs, rhs);
    report.elapsed_ms = sw.ms();
    return report;
}

/* ---- The hook products of (alpha+m|beta) and (alpha|beta+m) need not
 * match; this searches for an explicit witness pair. ---- */

inline verification_report find_hook_product_witness(int max_weight) {
    detail::stopwatch sw;
    verification_report report;
    report.claim = "remark31";
    report.params = {{"max_weight", std::to_string(max_weight)}};
    report.pass = false;
    for (int w = 0; w <= max_weight && !report.pass; ++w) {
        for (const partition& lam : enumerate_partitions(w)) {
            const frobenius_coords fc = frobenius(lam);
            for (int m = 1; m <= 2; ++m) {
                const bigint hooks_a =
                    count_hook_tabloids(from_frobenius(detail::shift_coords(fc, m, 0)));
                const bigint hooks_b =
                    count_hook_tabloids(from_frobenius(detail::shift_coords(fc, 0, m)));
                if (hooks_a != hooks_b) {
                    report.pass = true;
                    report.params.emplace_back("alpha", detail::join_ints(fc.alpha));
                    report.params.emplace_back("beta", detail::join_ints(fc.beta));
                    report.params.emplace_back("m", std::to_string(m));
                    report.lhs = hooks_a.str();
                    report.rhs = hooks_b.str();
                    break;
                }
            }
            if (report.pass)
                break;
        }
    }
    report.elapsed_ms = sw.ms();
    return report;
}

/* ---- Sweeps: run a verifier over a full deterministic parameter range ---- */

struct sweep_options {
    int max_weight = 8;
    int max_m = 2;
    int max_n = 10;
    int nvars = 3;
    int degree = 8;
    long long cap = default_enumeration_cap;
};

inline std::vector<verification_report> sweep_littlewood(int which, const sweep_options& o) {
    std::vector<verification_report> out;
    for (int n = 2; n <= std::max(2, o.nvars); ++n)
        out.push_back(verify_littlewood(which, n, o.degree));
    return out;
}

inline std::vector<verification_report> sweep_lemma_k(const sweep_options& o) {
    std::vector<verification_report> out;
    for (int m = 0; m <= o.max_m; ++m)
        for (int w = 0; w <= o.max_weight; ++w)
            for (const partition& lam : enumerate_z_asymmetric(w, m))
                out.push_back(verify_lemma_k(lam, m));
    return out;
}

inline std::vector<verification_report> sweep_cor_content(const sweep_options& o) {
    std::vector<verification_report> out;
    for (int m = 0; m <= o.max_m; ++m)
        for (int w = 0; w <= o.max_weight; ++w)
            for (const partition& lam : enumerate_z_asymmetric(w, m))
                out.push_back(verify_cor_content(lam, m));
    return out;
}

inline std::vector<verification_report> sweep_thm21(const sweep_options& o) {
    std::vector<verification_report> out;
    for (int total = 0; total <= o.max_weight; ++total) {
        for (int r = 0; r * (r - 1) <= total; ++r) {
            const int min_sum = r * (r - 1) / 2;
            for (int sum_alpha = min_sum; sum_alpha <= total - min_sum; ++sum_alpha) {
                for (const auto& alpha : enumerate_strict_partitions(sum_alpha, r)) {
                    for (const auto& beta :
                         enumerate_strict_partitions(total - sum_alpha, r)) {
                        const frobenius_coords base(alpha, beta);
                        const int p0 = detail::coords_length(base);
                        const int q0 = detail::coords_first_part(base);
                        for (int m = 1; m <= o.max_m; ++m) {
                            out.push_back(verify_thm21(base, m, p0, q0));
                            out.push_back(verify_thm21(base, m, p0 + 2, q0 + 2));
                        }
                    }
                }
            }
        }
    }
    return out;
}

inline std::vector<verification_report> sweep_thm22(const sweep_options& o) {
    std::vector<verification_report> out;
    for (int m = 0; m <= o.max_m; ++m)
        for (int w = 0; w <= o.max_weight; ++w)
            for (const partition& lam : enumerate_partitions(w))
                out.push_back(verify_thm22(lam, m));
    return out;
}

inline std::vector<verification_report> sweep_thm33(const sweep_options& o) {
    std::vector<verification_report> out;
    for (int m = 1; m <= o.max_m; ++m)
        for (int w = 0; w <= o.max_weight; ++w)
            for (const partition& lam : enumerate_z_asymmetric(w, m)) {
                const int base_n = lam.empty() ? 0 : lam.parts().front();
                for (int n = base_n; n <= base_n + 2; ++n)
                    out.push_back(verify_thm33(lam, m, n));
            }
    return out;
}

inline std::vector<verification_report> sweep_cor34(const sweep_options& o) {
    std::vector<verification_report> out;
    for (int m = 0; m <= o.max_m; ++m)
        for (int w = 0; w <= o.max_weight; ++w)
            for (const partition& lam : enumerate_partitions(w)) {
                const frobenius_coords fc = frobenius(lam);
                for (int n = lam.length(); n <= o.max_n; ++n)
                    out.push_back(verify_cor34(fc, m, n));
            }
    out.push_back(find_hook_product_witness(std::min(o.max_weight, 8)));
    return out;
}

inline std::vector<verification_report> sweep_cor35(const sweep_options& o) {
    std::vector<verification_report> out;
    for (int m = 1; m <= o.max_m; ++m)
        for (int w = 0; w <= o.max_weight; ++w)
            for (const partition& lam : enumerate_z_asymmetric(w, m)) {
                const int base_n = lam.empty() ? 0 : lam.parts().front();
                for (int n = base_n; n <= base_n + 3; ++n)
                    out.push_back(verify_cor35(lam, m, n));
            }
    return out;
}

inline std::vector<verification_report> sweep_phi(const sweep_options& o) {
    std::vector<verification_report> out;
    for (int m = 1; m <= o.max_m; ++m)
        for (int w = 0; w <= o.max_weight; ++w)
            for (const partition& lam : enumerate_partitions(w)) {
                const frobenius_coords fc = frobenius(lam);
                if (w + m * fc.rank() > o.max_weight)
                    continue;
                for (int n = std::max(1, lam.length()); n <= o.max_n; ++n)
                    out.push_back(verify_phi(fc, m, n, o.cap));
            }
    return out;
}

inline std::vector<verification_report> run_sweep(const std::string& claim,
                                                  const sweep_options& o) {
    if (claim == "littlewood1")
        return sweep_littlewood(1, o);
    if (claim == "littlewood2")
        return sweep_littlewood(2, o);
    if (claim == "thm21")
        return sweep_thm21(o);
    if (claim == "thm22")
        return sweep_thm22(o);
    if (claim == "thm33")
        return sweep_thm33(o);
    if (claim == "lemma-k")
        return sweep_lemma_k(o);
    if (claim == "cor-content")
        return sweep_cor_content(o);
    if (claim == "cor34")
        return sweep_cor34(o);
    if (claim == "cor35")
        return sweep_cor35(o);
    if (claim == "all") {
        std::vector<verification_report> out;
        for (const char* family : {"littlewood1", "littlewood2", "lemma-k", "cor-content",
                                   "thm21", "thm22", "thm33", "cor34", "cor35"}) {
            std::vector<verification_report> part = run_sweep(family, o);
            out.insert(out.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return out;
    }
    throw precondition_violated("unknown claim: " + claim);
}

} // namespace zasym

#endif
