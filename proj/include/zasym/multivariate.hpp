#ifndef ZASYM_MULTIVARIATE_HPP
#define ZASYM_MULTIVARIATE_HPP

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zasym/bigint.hpp"
#include "zasym/errors.hpp"

namespace zasym {

/* Multivariate polynomial in x_1..x_n with bigint coefficients,
 * truncated by total degree: any product term above the cap is dropped,
 * so the ring operations are closed on the truncation. */
class truncated_multi_poly {
public:
    truncated_multi_poly(int nvars, int max_degree) : nvars_(nvars), max_degree_(max_degree) {
        if (nvars < 0 || max_degree < 0)
            throw precondition_violated("truncated_multi_poly expects nvars, degree >= 0");
    }

    static truncated_multi_poly constant(int nvars, int max_degree, bigint c) {
        truncated_multi_poly p(nvars, max_degree);
        p.add_term(std::vector<int>(nvars, 0), std::move(c));
        return p;
    }

    static truncated_multi_poly one(int nvars, int max_degree) {
        return constant(nvars, max_degree, 1);
    }

    int nvars() const { return nvars_; }
    int max_degree() const { return max_degree_; }
    bool is_zero() const { return terms_.empty(); }

    const std::map<std::vector<int>, bigint>& terms() const { return terms_; }

    static int total_degree(const std::vector<int>& exps) {
        return std::accumulate(exps.begin(), exps.end(), 0);
    }

    void add_term(std::vector<int> exps, const bigint& c) {
        if (static_cast<int>(exps.size()) != nvars_)
            throw length_mismatch("exponent vector length does not match variable count");
        if (c == 0 || total_degree(exps) > max_degree_)
            return;
        auto [it, inserted] = terms_.emplace(std::move(exps), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    truncated_multi_poly& operator+=(const truncated_multi_poly& o) {
        require_compatible(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    truncated_multi_poly& operator-=(const truncated_multi_poly& o) {
        require_compatible(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    friend truncated_multi_poly operator+(truncated_multi_poly a, const truncated_multi_poly& b) {
        return a += b;
    }
    friend truncated_multi_poly operator-(truncated_multi_poly a, const truncated_multi_poly& b) {
        return a -= b;
    }

    friend truncated_multi_poly operator*(const truncated_multi_poly& a,
                                          const truncated_multi_poly& b) {
        a.require_compatible(b);
        truncated_multi_poly out(a.nvars_, a.max_degree_);
        std::vector<int> exps(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            const int da = total_degree(ea);
            for (const auto& [eb, cb] : b.terms_) {
                if (da + total_degree(eb) > a.max_degree_)
                    continue;
                for (int i = 0; i < a.nvars_; ++i)
                    exps[i] = ea[i] + eb[i];
                out.add_term(exps, ca * cb);
            }
        }
        return out;
    }

    truncated_multi_poly& operator*=(const truncated_multi_poly& o) { return *this = *this * o; }

    bigint eval(const std::vector<bigint>& points) const {
        if (static_cast<int>(points.size()) != nvars_)
            throw length_mismatch("point count does not match variable count");
        bigint total = 0;
        for (const auto& [e, c] : terms_) {
            bigint term = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k)
                    term *= points[i];
            total += term;
        }
        return total;
    }

    truncated_multi_poly with_swapped_vars(int i, int j) const {
        if (i < 0 || j < 0 || i >= nvars_ || j >= nvars_)
            throw precondition_violated("variable index out of range");
        truncated_multi_poly out(nvars_, max_degree_);
        for (auto [e, c] : terms_) {
            std::swap(e[i], e[j]);
            out.add_term(std::move(e), c);
        }
        return out;
    }

    bool operator==(const truncated_multi_poly&) const = default;

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            os << (first ? "" : " + ") << c.str();
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0)
                    continue;
                os << "*x" << (i + 1);
                if (e[i] > 1)
                    os << '^' << e[i];
            }
            first = false;
        }
        return os.str();
    }

private:
    void require_compatible(const truncated_multi_poly& o) const {
        if (nvars_ != o.nvars_ || max_degree_ != o.max_degree_)
            throw length_mismatch("mixing polynomials of different variable count or cap");
    }

    int nvars_;
    int max_degree_;
    std::map<std::vector<int>, bigint> terms_;
};

} // namespace zasym

#endif
