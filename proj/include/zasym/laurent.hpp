#ifndef ZASYM_LAURENT_HPP
#define ZASYM_LAURENT_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "zasym/bigint.hpp"
#include "zasym/errors.hpp"

namespace zasym {

/* Laurent polynomial in q with bigint coefficients, stored sparsely as
 * exponent -> nonzero coefficient. All arithmetic is exact. */
class laurent_poly {
public:
    laurent_poly() = default; // zero

    static laurent_poly zero() { return {}; }

    static laurent_poly one() { return monomial(0, 1); }

    static laurent_poly monomial(int exponent, bigint coefficient) {
        laurent_poly p;
        if (coefficient != 0)
            p.coeff_[exponent] = std::move(coefficient);
        return p;
    }

    /* [a] = 1 + q + ... + q^{a-1}; [0] is the zero polynomial. */
    static laurent_poly bracket(int a) {
        if (a < 0)
            throw precondition_violated("bracket expects a >= 0");
        laurent_poly p;
        for (int e = 0; e < a; ++e)
            p.coeff_[e] = 1;
        return p;
    }

    bool is_zero() const { return coeff_.empty(); }

    const std::map<int, bigint>& coeffs() const { return coeff_; }

    bigint coeff(int exponent) const {
        auto it = coeff_.find(exponent);
        return it == coeff_.end() ? bigint(0) : it->second;
    }

    int min_exp() const { return coeff_.empty() ? 0 : coeff_.begin()->first; }
    int max_exp() const { return coeff_.empty() ? 0 : coeff_.rbegin()->first; }

    laurent_poly& operator+=(const laurent_poly& o) {
        for (const auto& [e, c] : o.coeff_)
            add_term(e, c);
        return *this;
    }

    laurent_poly& operator-=(const laurent_poly& o) {
        for (const auto& [e, c] : o.coeff_)
            add_term(e, -c);
        return *this;
    }

    friend laurent_poly operator+(laurent_poly a, const laurent_poly& b) { return a += b; }
    friend laurent_poly operator-(laurent_poly a, const laurent_poly& b) { return a -= b; }

    friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) {
        laurent_poly out;
        for (const auto& [ea, ca] : a.coeff_)
            for (const auto& [eb, cb] : b.coeff_)
                out.add_term(ea + eb, ca * cb);
        return out;
    }

    laurent_poly& operator*=(const laurent_poly& o) { return *this = *this * o; }

    /* Multiply by q^e. */
    laurent_poly shifted(long long e) const {
        laurent_poly out;
        for (const auto& [exp, c] : coeff_)
            out.coeff_[static_cast<int>(exp + e)] = c;
        return out;
    }

    /* Substitute q -> q^k, k >= 1. */
    laurent_poly substituted_power(int k) const {
        if (k < 1)
            throw precondition_violated("substituted_power expects k >= 1");
        laurent_poly out;
        for (const auto& [exp, c] : coeff_)
            out.coeff_[exp * k] = c;
        return out;
    }

    bigint eval_at_one() const {
        bigint total = 0;
        for (const auto& [exp, c] : coeff_)
            total += c;
        return total;
    }

    bool operator==(const laurent_poly&) const = default;

    std::string str() const {
        if (coeff_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeff_) {
            if (!first)
                os << (c > 0 ? " + " : " - ");
            else if (c < 0)
                os << '-';
            const bigint mag = c < 0 ? bigint(-c) : c;
            if (mag != 1 || e == 0)
                os << mag.str();
            if (e != 0) {
                if (mag != 1)
                    os << '*';
                os << 'q';
                if (e != 1)
                    os << '^' << e;
            }
            first = false;
        }
        return os.str();
    }

    void add_term(int exponent, const bigint& c) {
        if (c == 0)
            return;
        auto [it, inserted] = coeff_.emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                coeff_.erase(it);
        }
    }

private:
    std::map<int, bigint> coeff_;
};

/* Exact quotient a / b; throws inexact_division if b does not divide a.
 * Works on the underlying ordinary polynomials after factoring out the
 * lowest power of q from each side. */
inline laurent_poly exact_div(const laurent_poly& a, const laurent_poly& b) {
    if (b.is_zero())
        throw inexact_division("division by the zero polynomial");
    if (a.is_zero())
        return laurent_poly::zero();

    const int shift = a.min_exp() - b.min_exp();
    std::map<int, bigint> rem;
    for (const auto& [e, c] : a.coeffs())
        rem[e - a.min_exp()] = c;
    std::map<int, bigint> div;
    for (const auto& [e, c] : b.coeffs())
        div[e - b.min_exp()] = c;

    const int deg_b = div.rbegin()->first;
    const bigint& lead_b = div.rbegin()->second;
    laurent_poly quotient;
    while (!rem.empty() && rem.rbegin()->first >= deg_b) {
        const int deg = rem.rbegin()->first - deg_b;
        bigint c = rem.rbegin()->second;
        if (c % lead_b != 0)
            throw inexact_division("leading coefficient does not divide");
        c /= lead_b;
        quotient.add_term(deg + shift, c);
        for (const auto& [e, bc] : div) {
            auto [it, inserted] = rem.emplace(e + deg, -c * bc);
            if (!inserted) {
                it->second -= c * bc;
                if (it->second == 0)
                    rem.erase(it);
            }
        }
    }
    if (!rem.empty())
        throw inexact_division("nonzero remainder");
    return quotient;
}

} // namespace zasym

#endif
